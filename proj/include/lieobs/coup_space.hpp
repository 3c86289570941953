#ifndef LIEOBS_COUP_SPACE_HPP
#define LIEOBS_COUP_SPACE_HPP

#include "lieobs/obstruction.hpp"

namespace lieobs {

/// Element of Coup(Z): a coupling together with an identification phi of the
/// fiber's center module with the fixed reference module Z.
struct CoupElement {
    Coupling coupling;
    TModule reference;   // Z
    Matrix phi;          // module_dim(Z) x dim center(fiber), intertwining iso
};

/// Verifies invertibility and the connection-preserving property of phi.
/// Throws ValidationError (DimensionMismatch, NotIntertwining, NotInvertible).
CoupElement make_element(Coupling coupling, TModule reference, Matrix phi);

/// UObs: pushforward of the obstruction class along phi into H^3(T; Z).
CohomologyClass uobs(const CoupElement& e);

/// The direct sum element over Z + Z, with blockwise coupling and phi.
CoupElement direct_sum_element(const CoupElement& c1, const CoupElement& c2);

struct CombineAudit {
    Subspace z0;                  // ker theta inside Z + Z
    Matrix psi;                   // Z0 basis -> L1 + L2 coordinates
    Subspace psi_z0;              // image, a central subspace of L1 + L2
    Matrix quotient_projection;   // L1 + L2 -> L3
    CohomologyClass class1, class2, class3;
};

struct CombineResult {
    CoupElement element;   // c3
    CombineAudit audit;
};

/// Theorem-1 construction: L3 = (L1 + L2)/psi(ker theta) with the induced
/// coupling and center identification, where theta(u, v) = alpha u + beta v.
/// The linearity identity uobs(c3) = alpha uobs(c1) + beta uobs(c2) is
/// asserted at construction. Throws ValidationError (ScalarsBothZero,
/// BaseMismatch, ReferenceMismatch, CenterGrew) on bad or degenerate input
/// and InternalCheckError (SubspaceNotPreserved, LinearityViolation) when a
/// theorem fails to hold.
CombineResult combine(const CoupElement& c1, const CoupElement& c2,
                      const Rational& alpha, const Rational& beta);

struct LinearitySample {
    Rational alpha, beta;
    bool pass = false;
    std::string detail;
};

struct LinearityReport {
    std::vector<LinearitySample> samples;
    bool pass = true;
};

/// Runs combine over the sample scalars and collects pass/fail verdicts.
LinearityReport verify_linearity(const CoupElement& c1, const CoupElement& c2,
                                 const std::vector<std::pair<Rational, Rational>>& samples);

} // namespace lieobs

#endif
