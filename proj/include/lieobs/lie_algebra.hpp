#ifndef LIEOBS_LIE_ALGEBRA_HPP
#define LIEOBS_LIE_ALGEBRA_HPP

#include "lieobs/linalg.hpp"

#include <string>
#include <vector>

namespace lieobs {

struct BracketTerm {
    std::size_t k;
    Rational v;
};

/// One bracket [e_i, e_j] = sum_k v_k e_k, given for i < j only.
struct SparseBracket {
    std::size_t i;
    std::size_t j;
    std::vector<BracketTerm> terms;
};

struct AntisymmetryViolation {
    std::size_t i, j, k;
    Rational residual;   // c[i][j][k] + c[j][i][k]
};

struct JacobiViolation {
    std::size_t i, j, k;
    Vec residual;
};

struct ValidationReport {
    std::vector<AntisymmetryViolation> antisymmetry;
    std::vector<JacobiViolation> jacobi;
    bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
    std::string describe() const;
};

/// Finite-dimensional Lie algebra over Q presented by structure constants.
class LieAlgebra {
public:
    LieAlgebra() = default;

    static LieAlgebra abelian(std::size_t n, const std::string& prefix = "X");

    /// Builds from i<j brackets; antisymmetry is synthesized, never trusted.
    /// Throws ParseError on out-of-range indices or i >= j.
    static LieAlgebra from_brackets(std::size_t dim, std::vector<std::string> names,
                                    const std::vector<SparseBracket>& brackets);

    /// Unchecked dense constructor; used by quotients, sums and tests.
    static LieAlgebra from_structure_tensor(std::size_t dim, std::vector<std::string> names,
                                            std::vector<Rational> tensor);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// Structure constant of e_k in [e_i, e_j].
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * dim_ + j) * dim_ + k];
    }

    Vec bracket(const Vec& u, const Vec& v) const;
    Vec bracket_basis(std::size_t i, std::size_t j) const;

    /// Matrix of ad_u : v -> [u, v].
    Matrix ad(const Vec& u) const;
    Matrix ad_basis(std::size_t i) const;
    /// n^2 x n matrix whose column i is vec(ad_{e_i}); solves ad(u) = R.
    Matrix ad_stack() const;

    ValidationReport validate() const;
    bool is_valid() const { return validate().ok(); }

    /// { u : [u, v] = 0 for all v }, canonical. Requires a valid algebra.
    Subspace center() const;

    /// Structure constants only; names are informational.
    bool same_structure(const LieAlgebra& rhs) const {
        return dim_ == rhs.dim_ && structure_ == rhs.structure_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Rational> structure_;  // dense n^3 tensor
};

/// Lie algebra homomorphism presented by its matrix in the chosen bases.
struct LieHom {
    LieAlgebra source;
    LieAlgebra target;
    Matrix matrix;   // target.dim x source.dim
};

/// Checks the homomorphism law on all basis pairs; throws ValidationError.
LieHom make_lie_hom(LieAlgebra source, LieAlgebra target, Matrix matrix);

/// Direct sum with blockwise brackets; names are uniquified with primes.
LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

struct CentralQuotient {
    LieAlgebra algebra;
    LieHom projection;
    Matrix section;   // right inverse of the projection matrix
};

/// Quotient of g by a central subspace, on canonical complement coordinates.
/// Throws ValidationError when s is not contained in the center.
CentralQuotient quotient_by_central_subspace(const LieAlgebra& g, const Subspace& s);

} // namespace lieobs

#endif
