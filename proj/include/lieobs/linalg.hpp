#ifndef LIEOBS_LINALG_HPP
#define LIEOBS_LINALG_HPP

#include "lieobs/matrix.hpp"

#include <optional>
#include <vector>

namespace lieobs {

struct RrefResult {
    Matrix mat;                        // zero rows removed
    std::vector<std::size_t> pivots;   // pivot column per remaining row
};

/// Unique reduced row echelon form via exact Gauss-Jordan elimination.
/// Deterministic: the first nonzero entry in each column becomes the pivot.
RrefResult rref(Matrix m);

/// A linear subspace of Q^ambient presented by its unique RREF row basis.
/// Two Subspace values are equal as sets iff they compare equal as data.
class Subspace {
public:
    Subspace() = default;

    /// Canonicalizes an arbitrary spanning set of rows.
    static Subspace span_of_rows(Matrix rows, std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Exact membership, decided by eliminating v against the RREF basis.
    bool contains(const Vec& v) const;
    /// Coordinates of v in the RREF basis, or nullopt when v is outside.
    std::optional<Vec> coordinates_of(const Vec& v) const;
    /// coords^T * basis.
    Vec from_coordinates(const Vec& coords) const;
    /// True iff every basis row of other lies in this subspace.
    bool contains_subspace(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;                     // dim x ambient, RREF
    std::vector<std::size_t> pivots_;
};

/// Kernel of m as a canonical subspace of Q^cols.
Subspace nullspace(const Matrix& m);

/// Deterministic solution of a x = b with all free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

struct QuotientCoordinates {
    Matrix projection;   // (ambient - dim sub) x ambient, kernel exactly sub
    Matrix section;      // ambient x (ambient - dim sub), right inverse
};

/// Canonical coordinates on Q^ambient / sub, read off the non-pivot
/// coordinates of sub's RREF basis.
QuotientCoordinates quotient_coordinates(std::size_t ambient_dim, const Subspace& sub);

} // namespace lieobs

#endif
