#include "lieobs/lie_algebra.hpp"
#include "lieobs/errors.hpp"

#include <set>
#include <sstream>

namespace lieobs {

std::string ValidationReport::describe() const {
    std::ostringstream os;
    for (const auto& a : antisymmetry)
        os << "antisymmetry broken at (" << a.i << "," << a.j << "," << a.k
           << "): residual " << to_string(a.residual) << "\n";
    for (const auto& j : jacobi) {
        os << "Jacobi broken at (" << j.i << "," << j.j << "," << j.k << "): residual (";
        for (std::size_t t = 0; t < j.residual.size(); ++t)
            os << (t ? "," : "") << to_string(j.residual[t]);
        os << ")\n";
    }
    return os.str();
}

LieAlgebra LieAlgebra::abelian(std::size_t n, const std::string& prefix) {
    LieAlgebra g;
    g.dim_ = n;
    for (std::size_t i = 0; i < n; ++i) g.names_.push_back(prefix + std::to_string(i));
    g.structure_.assign(n * n * n, Rational(0));
    return g;
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, std::vector<std::string> names,
                                     const std::vector<SparseBracket>& brackets) {
    if (names.empty())
        for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    if (names.size() != dim)
        throw ParseError("basis name count does not match dimension");
    LieAlgebra g;
    g.dim_ = dim;
    g.names_ = std::move(names);
    g.structure_.assign(dim * dim * dim, Rational(0));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : brackets) {
        if (b.i >= b.j)
            throw ParseError("bracket pairs must have i < j");
        if (b.j >= dim)
            throw ParseError("bracket index out of range");
        if (!seen.insert({b.i, b.j}).second)
            throw ParseError("duplicate bracket pair");
        for (const auto& t : b.terms) {
            if (t.k >= dim)
                throw ParseError("bracket target index out of range");
            g.structure_[(b.i * dim + b.j) * dim + t.k] = t.v;
            g.structure_[(b.j * dim + b.i) * dim + t.k] = -t.v;
        }
    }
    return g;
}

LieAlgebra LieAlgebra::from_structure_tensor(std::size_t dim, std::vector<std::string> names,
                                             std::vector<Rational> tensor) {
    if (tensor.size() != dim * dim * dim)
        throw InternalCheckError("structure tensor size mismatch");
    if (names.empty())
        for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    LieAlgebra g;
    g.dim_ = dim;
    g.names_ = std::move(names);
    g.structure_ = std::move(tensor);
    return g;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw InternalCheckError("bracket operand size mismatch");
    Vec w(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            const Rational f = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k) w[k] += f * c(i, j, k);
        }
    }
    return w;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec w(dim_);
    for (std::size_t k = 0; k < dim_; ++k) w[k] = c(i, j, k);
    return w;
}

Matrix LieAlgebra::ad(const Vec& u) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) m(k, j) += u[i] * c(i, j, k);
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
    return m;
}

Matrix LieAlgebra::ad_stack() const {
    Matrix m(dim_ * dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        const Vec v = ad_basis(i).flatten();
        for (std::size_t r = 0; r < v.size(); ++r) m(r, i) = v[r];
    }
    return m;
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport report;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational r = c(i, j, k) + c(j, i, k);
                if (r != 0) report.antisymmetry.push_back({i, j, k, r});
            }
    if (!report.antisymmetry.empty()) return report;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                Vec r = bracket(bracket_basis(i, j), basis_vec(dim_, k));
                Vec r2 = bracket(bracket_basis(j, k), basis_vec(dim_, i));
                Vec r3 = bracket(bracket_basis(k, i), basis_vec(dim_, j));
                for (std::size_t t = 0; t < dim_; ++t) r[t] += r2[t] + r3[t];
                if (!is_zero(r)) report.jacobi.push_back({i, j, k, r});
            }
    return report;
}

Subspace LieAlgebra::center() const {
    // Stacked equations [u, e_j] = 0: row (j,k) has coefficient c(i,j,k) at u_i.
    Matrix m(dim_ * dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
            for (std::size_t i = 0; i < dim_; ++i) m(j * dim_ + k, i) = c(i, j, k);
    return nullspace(m);
}

LieHom make_lie_hom(LieAlgebra source, LieAlgebra target, Matrix matrix) {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
        throw ValidationError("homomorphism matrix shape mismatch");
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = i + 1; j < source.dim(); ++j) {
            const Vec lhs = matrix.apply(source.bracket_basis(i, j));
            const Vec rhs = target.bracket(matrix.col(i), matrix.col(j));
            if (lhs != rhs)
                throw ValidationError("not a Lie algebra homomorphism at basis pair (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return {std::move(source), std::move(target), std::move(matrix)};
}

namespace {

std::vector<std::string> merged_names(const LieAlgebra& g1, const LieAlgebra& g2) {
    std::vector<std::string> names = g1.basis_names();
    std::set<std::string> used(names.begin(), names.end());
    for (const auto& n : g2.basis_names()) {
        std::string candidate = n;
        while (used.count(candidate)) candidate += "'";
        used.insert(candidate);
        names.push_back(candidate);
    }
    return names;
}

} // namespace

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
    const std::size_t n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
    std::vector<Rational> tensor(n * n * n, Rational(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return tensor[(i * n + j) * n + k];
    };
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) at(i, j, k) = g1.c(i, j, k);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k) at(n1 + i, n1 + j, n1 + k) = g2.c(i, j, k);
    return LieAlgebra::from_structure_tensor(n, merged_names(g1, g2), std::move(tensor));
}

CentralQuotient quotient_by_central_subspace(const LieAlgebra& g, const Subspace& s) {
    if (s.ambient_dim() != g.dim())
        throw ValidationError("subspace ambient dimension does not match the algebra");
    const Subspace z = g.center();
    for (std::size_t i = 0; i < s.basis().rows(); ++i)
        if (!z.contains(s.basis().row(i)))
            throw ValidationError("NotCentral: subspace basis vector " + std::to_string(i) +
                                  " is not central");

    const auto qc = quotient_coordinates(g.dim(), s);
    const std::size_t q = qc.projection.rows();
    std::vector<Rational> tensor(q * q * q, Rational(0));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            const Vec br = qc.projection.apply(g.bracket(qc.section.col(a), qc.section.col(b)));
            for (std::size_t k = 0; k < q; ++k) tensor[(a * q + b) * q + k] = br[k];
        }

    // Quotient basis keeps the names of the complement coordinates.
    std::vector<std::size_t> free_cols;
    {
        std::vector<bool> is_pivot(g.dim(), false);
        for (auto p : s.pivots()) is_pivot[p] = true;
        for (std::size_t cidx = 0; cidx < g.dim(); ++cidx)
            if (!is_pivot[cidx]) free_cols.push_back(cidx);
    }
    std::vector<std::string> names;
    for (auto f : free_cols) names.push_back(g.basis_names()[f]);

    LieAlgebra quotient = LieAlgebra::from_structure_tensor(q, std::move(names), std::move(tensor));
    const auto report = quotient.validate();
    if (!report.ok())
        throw InternalCheckError("central quotient failed validation:\n" + report.describe());
    LieHom projection = make_lie_hom(g, quotient, qc.projection);
    return {std::move(quotient), std::move(projection), qc.section};
}

} // namespace lieobs
