#ifndef LIEOBS_COUPLING_HPP
#define LIEOBS_COUPLING_HPP

#include "lieobs/cohomology.hpp"
#include "lieobs/derivations.hpp"

namespace lieobs {

/// A coupling: an outer action of the base T on the fiber g, presented by
/// derivation representatives D_i of Xi(X_i) in Out(g). Valid couplings
/// satisfy [D_i, D_j] - D_[X_i,X_j] in Inn(g) for all i < j.
struct Coupling {
    LieAlgebra base;            // T
    LieAlgebra fiber;           // g
    DerivationSpaces spaces;    // Der/Inn/Out of the fiber
    std::vector<Matrix> xi_reps; // dim T representative derivations, n x n
};

/// Checks both coupling invariants and the induced flat center action.
/// Throws ValidationError (NotDerivation, NotCouplingHomomorphism) on bad
/// input.
Coupling validate_coupling(LieAlgebra base, LieAlgebra fiber, std::vector<Matrix> xi_reps);

/// Same, reusing precomputed derivation spaces of the fiber.
Coupling validate_coupling(LieAlgebra base, LieAlgebra fiber, DerivationSpaces spaces,
                           std::vector<Matrix> xi_reps);

/// The flat action of T on center(g) in canonical center coordinates.
/// Representative independence and flatness are re-checked, not assumed.
TModule induced_center_module(const Coupling& c);

/// A connection lift of the coupling: derivations with the same Out image.
struct ConnectionLift {
    Coupling coupling;
    std::vector<Matrix> nabla;
};

/// Default deterministic lift: nabla_i = xi_reps_i.
ConnectionLift lift_connection(const Coupling& c);
/// Adds user-supplied inner derivations; throws ValidationError("NotInner...").
ConnectionLift lift_connection_shifted(const Coupling& c, const std::vector<Matrix>& shifts);

/// Curvature R(X_i, X_j) = [nabla_i, nabla_j] - nabla_[X_i,X_j] as a degree-2
/// cochain in Der(g) coordinates. Every value is checked to be inner.
Cochain curvature(const ConnectionLift& lift);

/// A lift of the curvature through ad: fiber-valued 2-cochain with
/// ad(omega(X_i,X_j)) = R(X_i,X_j).
struct OmegaLift {
    ConnectionLift lift;
    Cochain omega;   // degree 2, values in the fiber
};

/// Deterministic pivot solution of ad(u) = R(X_i, X_j) per tuple.
OmegaLift lift_omega(const ConnectionLift& lift);
/// Adds a center-valued 2-cochain; throws ValidationError when a shift value
/// is not central.
OmegaLift lift_omega_shifted(const ConnectionLift& lift, const Cochain& center_shift);

} // namespace lieobs

#endif
