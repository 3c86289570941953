#ifndef LIEOBS_DERIVATIONS_HPP
#define LIEOBS_DERIVATIONS_HPP

#include "lieobs/lie_algebra.hpp"

namespace lieobs {

/// Der(g), Inn(g) and the quotient Out(g) = Der/Inn, all as concrete
/// coordinate data. Derivations live in gl(n) flattened row-major, so the
/// ambient dimension of der and inn is n^2. Out carries the induced bracket
/// computed once from section representatives.
struct DerivationSpaces {
    LieAlgebra algebra;
    Subspace der;               // ambient n^2
    Subspace inn;               // ambient n^2, contained in der
    std::size_t out_dim = 0;
    Matrix natural_projection;  // out_dim x dim(der): Der coordinates -> Out
    Matrix out_section;         // dim(der) x out_dim, right inverse
    LieAlgebra out_algebra;     // bracket induced on Out

    /// Der-coordinates -> n x n matrix.
    Matrix der_rep(const Vec& der_coords) const;
    /// Coordinates of an n x n matrix in the Der basis, if it is a derivation.
    std::optional<Vec> der_coords(const Matrix& d) const;
    /// Image of a derivation in Out coordinates.
    Vec out_of(const Matrix& d) const;
};

/// Solves the derivation equations D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j]
/// over gl(n) and assembles the quotient data. Throws ValidationError when
/// the algebra itself is invalid.
DerivationSpaces derivation_spaces(const LieAlgebra& g);

} // namespace lieobs

#endif
