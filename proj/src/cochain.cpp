#include "lieobs/cochain.hpp"
#include "lieobs/errors.hpp"

#include <algorithm>

namespace lieobs {

std::size_t tuple_count(std::size_t m, std::size_t k) {
    if (k > m) return 0;
    std::size_t result = 1;
    for (std::size_t i = 0; i < k; ++i) {
        result *= m - i;
        result /= i + 1;
    }
    return result;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > m) return out;
    std::vector<std::size_t> tuple(k);
    for (std::size_t i = 0; i < k; ++i) tuple[i] = i;
    while (true) {
        out.push_back(tuple);
        if (k == 0) break;
        // advance: find rightmost slot that can move
        std::size_t i = k;
        while (i > 0 && tuple[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) break;
        ++tuple[i - 1];
        for (std::size_t j = i; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
    }
    return out;
}

std::size_t tuple_rank(std::size_t m, const std::vector<std::size_t>& tuple) {
    // Number of increasing tuples lexicographically before this one.
    const std::size_t k = tuple.size();
    std::size_t rank = 0;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v = prev; v < tuple[i]; ++v)
            rank += tuple_count(m - v - 1, k - i - 1);
        prev = tuple[i] + 1;
    }
    return rank;
}

Cochain Cochain::zero(std::size_t degree, std::size_t base_dim, std::size_t value_dim) {
    Cochain c;
    c.degree = degree;
    c.base_dim = base_dim;
    c.value_dim = value_dim;
    c.values.assign(tuple_count(base_dim, degree), Vec(value_dim, Rational(0)));
    return c;
}

const Vec& Cochain::at(const std::vector<std::size_t>& increasing) const {
    return values[tuple_rank(base_dim, increasing)];
}

Vec& Cochain::at(const std::vector<std::size_t>& increasing) {
    return values[tuple_rank(base_dim, increasing)];
}

Vec Cochain::evaluate(std::vector<std::size_t> indices) const {
    // Sort with sign; duplicates kill the value.
    int sign = 1;
    for (std::size_t i = 1; i < indices.size(); ++i)
        for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
            if (indices[j - 1] == indices[j]) return Vec(value_dim, Rational(0));
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    const Vec& v = at(indices);
    return sign == 1 ? v : scale(Rational(-1), v);
}

bool Cochain::is_zero() const {
    for (const auto& v : values)
        if (!lieobs::is_zero(v)) return false;
    return true;
}

Cochain Cochain::operator+(const Cochain& rhs) const {
    Cochain r = *this;
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = add(values[i], rhs.values[i]);
    return r;
}

Cochain Cochain::operator-(const Cochain& rhs) const {
    Cochain r = *this;
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = sub(values[i], rhs.values[i]);
    return r;
}

Cochain Cochain::scaled(const Rational& s) const {
    Cochain r = *this;
    for (auto& v : r.values) v = scale(s, v);
    return r;
}

Vec Cochain::flatten() const {
    Vec flat;
    flat.reserve(values.size() * value_dim);
    for (const auto& v : values) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

Cochain Cochain::unflatten(std::size_t degree, std::size_t base_dim, std::size_t value_dim,
                           const Vec& flat) {
    Cochain c = zero(degree, base_dim, value_dim);
    if (flat.size() != c.values.size() * value_dim)
        throw InternalCheckError("cochain unflatten size mismatch");
    for (std::size_t t = 0; t < c.values.size(); ++t)
        for (std::size_t v = 0; v < value_dim; ++v) c.values[t][v] = flat[t * value_dim + v];
    return c;
}

Cochain ce_differential(const LieAlgebra& base, const std::vector<Matrix>& action,
                        const Cochain& c) {
    const std::size_t m = base.dim();
    if (c.base_dim != m)
        throw InternalCheckError("cochain base dimension mismatch");
    if (c.degree > m)
        throw ValidationError("DegreeOverflow: cochain degree exceeds dim T");
    const std::size_t k = c.degree;
    Cochain d = Cochain::zero(k + 1, m, c.value_dim);

    for (const auto& tuple : increasing_tuples(m, k + 1)) {
        Vec value(c.value_dim, Rational(0));
        // rho terms
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t < tuple.size(); ++t)
                if (t != i) rest.push_back(tuple[t]);
            const Vec inner = c.at(rest);
            const Vec moved = action[tuple[i]].apply(inner);
            const int sign = (i % 2 == 0) ? 1 : -1;
            axpy(value, Rational(sign), moved);
        }
        // bracket terms
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                const Vec br = base.bracket_basis(tuple[i], tuple[j]);
                std::vector<std::size_t> rest;
                for (std::size_t t = 0; t < tuple.size(); ++t)
                    if (t != i && t != j) rest.push_back(tuple[t]);
                const int sign = ((i + j) % 2 == 0) ? 1 : -1;
                for (std::size_t l = 0; l < m; ++l) {
                    if (br[l] == 0) continue;
                    std::vector<std::size_t> args;
                    args.push_back(l);
                    args.insert(args.end(), rest.begin(), rest.end());
                    axpy(value, Rational(sign) * br[l], c.evaluate(std::move(args)));
                }
            }
        d.at(tuple) = std::move(value);
    }
    return d;
}

Cochain ce_differential(const TModule& module, const Cochain& c) {
    return ce_differential(module.base, module.action, c);
}

Cochain map_values(const Matrix& map, const Cochain& c) {
    Cochain r = Cochain::zero(c.degree, c.base_dim, map.rows());
    for (std::size_t t = 0; t < c.values.size(); ++t) r.values[t] = map.apply(c.values[t]);
    return r;
}

} // namespace lieobs
