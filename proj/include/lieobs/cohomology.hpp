#ifndef LIEOBS_COHOMOLOGY_HPP
#define LIEOBS_COHOMOLOGY_HPP

#include "lieobs/cochain.hpp"

namespace lieobs {

/// Element of H^degree(T; module) in the canonical quotient coordinates.
/// Coordinate systems are derived deterministically from RREF data, so two
/// independently computed classes over the same module are comparable.
struct CohomologyClass {
    std::size_t degree = 0;
    TModule module;
    Vec coordinates;   // length = betti number

    bool is_zero() const { return lieobs::is_zero(coordinates); }
};

/// The degree-k slice of the Chevalley-Eilenberg cohomology of a flat module:
/// ker(d_k) / im(d_{k-1}) with a fixed canonical coordinate system.
class CohomologySpace {
public:
    CohomologySpace(TModule module, std::size_t degree);

    std::size_t betti() const { return betti_; }
    std::size_t degree() const { return degree_; }
    const TModule& module() const { return module_; }

    /// Throws ValidationError("NotCocycle...") when d(z) != 0.
    CohomologyClass class_of(const Cochain& z) const;
    /// Canonical cocycle representative of a class.
    Cochain representative(const CohomologyClass& cls) const;
    CohomologyClass zero_class() const;

private:
    TModule module_;
    std::size_t degree_;
    std::size_t betti_;
    Subspace kernel_;        // ambient C(m,k) * d
    Matrix class_projection_; // betti x dim(kernel)
    Matrix class_section_;    // dim(kernel) x betti
};

/// Betti number of H^k(T; module).
std::size_t betti_number(const TModule& module, std::size_t degree);

/// Exact coordinate comparison; throws ValidationError("ModuleMismatch...")
/// when the classes live in different groups.
bool classes_equal(const CohomologyClass& a, const CohomologyClass& b);

/// Checks that iso is invertible and intertwines the module actions, then
/// applies it valuewise. The class overload commutes with class_of.
Cochain pushforward(const Matrix& iso, const Cochain& c, const TModule& source,
                    const TModule& target);
CohomologyClass pushforward(const Matrix& iso, const CohomologyClass& cls,
                            const TModule& target);

/// Matrix of d_k over the flattened tuple bases (columns indexed by degree-k
/// cochain coordinates, rows by degree-(k+1) coordinates).
Matrix differential_matrix(const TModule& module, std::size_t degree);

} // namespace lieobs

#endif
