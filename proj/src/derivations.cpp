#include "lieobs/derivations.hpp"
#include "lieobs/errors.hpp"

namespace lieobs {

Matrix DerivationSpaces::der_rep(const Vec& der_coords) const {
    const std::size_t n = algebra.dim();
    return Matrix::unflatten(n, n, der.from_coordinates(der_coords));
}

std::optional<Vec> DerivationSpaces::der_coords(const Matrix& d) const {
    return der.coordinates_of(d.flatten());
}

Vec DerivationSpaces::out_of(const Matrix& d) const {
    const auto coords = der_coords(d);
    if (!coords)
        throw InternalCheckError("out_of applied to a non-derivation");
    return natural_projection.apply(*coords);
}

DerivationSpaces derivation_spaces(const LieAlgebra& g) {
    const auto report = g.validate();
    if (!report.ok())
        throw ValidationError("InvalidAlgebra:\n" + report.describe());

    const std::size_t n = g.dim();
    // Unknown D in gl(n), entry D(a,b) at flat index a*n+b. One equation per
    // (i<j, k): sum_m c(i,j,m) D(k,m) - sum_a c(a,j,k) D(a,i) - sum_b c(i,b,k) D(b,j) = 0.
    const std::size_t pairs = n * (n - 1) / 2;
    Matrix system(pairs * n, n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++row) {
                for (std::size_t m = 0; m < n; ++m)
                    system(row, k * n + m) += g.c(i, j, m);
                for (std::size_t a = 0; a < n; ++a)
                    system(row, a * n + i) -= g.c(a, j, k);
                for (std::size_t b = 0; b < n; ++b)
                    system(row, b * n + j) -= g.c(i, b, k);
            }

    DerivationSpaces spaces;
    spaces.algebra = g;
    spaces.der = nullspace(system);

    Matrix inn_rows(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        inn_rows.set_row(i, g.ad_basis(i).flatten());
    spaces.inn = Subspace::span_of_rows(std::move(inn_rows), n * n);

    if (!spaces.der.contains_subspace(spaces.inn))
        throw InternalCheckError("inner derivations escaped Der(g)");

    // Inn expressed in Der coordinates, then canonical quotient coordinates.
    Matrix inn_in_der(spaces.inn.dim(), spaces.der.dim());
    for (std::size_t i = 0; i < spaces.inn.dim(); ++i) {
        const auto coords = spaces.der.coordinates_of(spaces.inn.basis().row(i));
        if (!coords)
            throw InternalCheckError("inn basis row has no Der coordinates");
        inn_in_der.set_row(i, *coords);
    }
    const Subspace inn_sub = Subspace::span_of_rows(std::move(inn_in_der), spaces.der.dim());
    const auto qc = quotient_coordinates(spaces.der.dim(), inn_sub);
    spaces.out_dim = spaces.der.dim() - spaces.inn.dim();
    spaces.natural_projection = qc.projection;
    spaces.out_section = qc.section;

    // Induced bracket on Out from section representatives. Well defined
    // because Inn is an ideal in Der; both facts are checked below.
    const std::size_t q = spaces.out_dim;
    std::vector<Rational> tensor(q * q * q, Rational(0));
    std::vector<Matrix> reps;
    for (std::size_t a = 0; a < q; ++a)
        reps.push_back(spaces.der_rep(spaces.out_section.col(a)));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            if (a == b) continue;
            const Matrix comm = Matrix::commutator(reps[a], reps[b]);
            const auto coords = spaces.der.coordinates_of(comm.flatten());
            if (!coords)
                throw InternalCheckError("Der(g) is not closed under commutators");
            const Vec out = spaces.natural_projection.apply(*coords);
            for (std::size_t k = 0; k < q; ++k) tensor[(a * q + b) * q + k] = out[k];
        }
    std::vector<std::string> out_names;
    for (std::size_t a = 0; a < q; ++a) out_names.push_back("o" + std::to_string(a));
    spaces.out_algebra = LieAlgebra::from_structure_tensor(q, std::move(out_names), std::move(tensor));
    const auto out_report = spaces.out_algebra.validate();
    if (!out_report.ok())
        throw InternalCheckError("induced Out bracket failed validation:\n" + out_report.describe());

    // Ideal property [Der, Inn] <= Inn.
    for (std::size_t a = 0; a < spaces.der.dim(); ++a) {
        const Matrix d = Matrix::unflatten(n, n, spaces.der.basis().row(a));
        for (std::size_t b = 0; b < spaces.inn.dim(); ++b) {
            const Matrix w = Matrix::unflatten(n, n, spaces.inn.basis().row(b));
            if (!spaces.inn.contains(Matrix::commutator(d, w).flatten()))
                throw InternalCheckError("Inn(g) is not an ideal in Der(g)");
        }
    }

    return spaces;
}

} // namespace lieobs
