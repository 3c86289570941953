#ifndef LIEOBS_COCHAIN_HPP
#define LIEOBS_COCHAIN_HPP

#include "lieobs/tmodule.hpp"

namespace lieobs {

/// All strictly increasing k-tuples over {0..m-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t m, std::size_t k);
/// C(m, k).
std::size_t tuple_count(std::size_t m, std::size_t k);
/// Lexicographic rank of an increasing tuple among increasing_tuples(m, k).
std::size_t tuple_rank(std::size_t m, const std::vector<std::size_t>& tuple);

/// Alternating k-linear map Lambda^k T -> Q^value_dim, stored on increasing
/// tuples only and extended by sign elsewhere.
struct Cochain {
    std::size_t degree = 0;
    std::size_t base_dim = 0;
    std::size_t value_dim = 0;
    std::vector<Vec> values;   // tuple_count(base_dim, degree) entries

    static Cochain zero(std::size_t degree, std::size_t base_dim, std::size_t value_dim);

    const Vec& at(const std::vector<std::size_t>& increasing) const;
    Vec& at(const std::vector<std::size_t>& increasing);
    /// Evaluation on an arbitrary index tuple: sorts, applies the sign,
    /// returns zero on repeated indices.
    Vec evaluate(std::vector<std::size_t> indices) const;

    bool is_zero() const;
    Cochain operator+(const Cochain& rhs) const;
    Cochain operator-(const Cochain& rhs) const;
    Cochain scaled(const Rational& s) const;
    bool operator==(const Cochain& rhs) const = default;

    /// Concatenation of all values in tuple order; inverse of unflatten.
    Vec flatten() const;
    static Cochain unflatten(std::size_t degree, std::size_t base_dim,
                             std::size_t value_dim, const Vec& flat);
};

/// Chevalley-Eilenberg differential with an arbitrary (possibly non-flat)
/// connection action on the values:
///   (dc)(X_0..X_k) = sum_i (-1)^i rho(X_i) c(.. X_i^ ..)
///                  + sum_{i<j} (-1)^{i+j} c([X_i,X_j], .. X_i^ .. X_j^ ..).
/// Throws ValidationError("DegreeOverflow") when c.degree > dim T.
Cochain ce_differential(const LieAlgebra& base, const std::vector<Matrix>& action,
                        const Cochain& c);

/// Flat-module differential; the composite d(d(c)) vanishes exactly here.
Cochain ce_differential(const TModule& module, const Cochain& c);

/// Applies a linear map to every value of the cochain.
Cochain map_values(const Matrix& map, const Cochain& c);

} // namespace lieobs

#endif
