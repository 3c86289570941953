#include "lieobs/coupling.hpp"
#include "lieobs/errors.hpp"

#include <sstream>

namespace lieobs {

namespace {

std::string matrix_text(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << to_string(m(i, j));
    }
    os << "]";
    return os.str();
}

// Residual of v after elimination against the subspace basis: zero iff member.
Vec inn_residual(const Subspace& inn, const Vec& v) {
    Vec residual = v;
    for (std::size_t i = 0; i < inn.basis().rows(); ++i) {
        const Rational f = residual[inn.pivots()[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < residual.size(); ++j)
            residual[j] -= f * inn.basis()(i, j);
    }
    return residual;
}

} // namespace

Coupling validate_coupling(LieAlgebra base, LieAlgebra fiber, std::vector<Matrix> xi_reps) {
    DerivationSpaces spaces = derivation_spaces(fiber);
    return validate_coupling(std::move(base), std::move(fiber), std::move(spaces),
                             std::move(xi_reps));
}

Coupling validate_coupling(LieAlgebra base, LieAlgebra fiber, DerivationSpaces spaces,
                           std::vector<Matrix> xi_reps) {
    const auto base_report = base.validate();
    if (!base_report.ok())
        throw ValidationError("base algebra invalid:\n" + base_report.describe());
    const auto fiber_report = fiber.validate();
    if (!fiber_report.ok())
        throw ValidationError("fiber algebra invalid:\n" + fiber_report.describe());
    if (xi_reps.size() != base.dim())
        throw ValidationError("coupling needs one representative per base basis vector");

    const std::size_t n = fiber.dim();
    for (std::size_t i = 0; i < xi_reps.size(); ++i) {
        if (xi_reps[i].rows() != n || xi_reps[i].cols() != n)
            throw ValidationError("NotDerivation(" + std::to_string(i) +
                                  "): representative has wrong shape");
        if (!spaces.der.contains(xi_reps[i].flatten()))
            throw ValidationError("NotDerivation(" + std::to_string(i) +
                                  "): representative is not a derivation of the fiber");
    }

    for (std::size_t i = 0; i < xi_reps.size(); ++i)
        for (std::size_t j = i + 1; j < xi_reps.size(); ++j) {
            Matrix defect = Matrix::commutator(xi_reps[i], xi_reps[j]);
            const Vec br = base.bracket_basis(i, j);
            for (std::size_t k = 0; k < base.dim(); ++k)
                if (br[k] != 0) defect = defect - xi_reps[k].scaled(br[k]);
            if (!spaces.inn.contains(defect.flatten())) {
                const Vec residual = inn_residual(spaces.inn, defect.flatten());
                throw ValidationError(
                    "NotCouplingHomomorphism(" + std::to_string(i) + "," + std::to_string(j) +
                    "): defect " + matrix_text(defect) + " has distance from Inn " +
                    matrix_text(Matrix::unflatten(n, n, residual)));
            }
        }

    Coupling c{std::move(base), std::move(fiber), std::move(spaces), std::move(xi_reps)};
    induced_center_module(c);   // re-checks restriction + flatness
    return c;
}

TModule induced_center_module(const Coupling& c) {
    const Subspace z = c.fiber.center();
    const std::size_t d = z.dim();

    // Inner derivations must kill the center; this is what makes the
    // restriction independent of the chosen representatives.
    for (std::size_t b = 0; b < c.spaces.inn.dim(); ++b) {
        const Matrix w = Matrix::unflatten(c.fiber.dim(), c.fiber.dim(),
                                           c.spaces.inn.basis().row(b));
        for (std::size_t a = 0; a < d; ++a)
            if (!lieobs::is_zero(w.apply(z.basis().row(a))))
                throw InternalCheckError("inner derivation acts nontrivially on the center");
    }

    std::vector<Matrix> action;
    for (std::size_t i = 0; i < c.base.dim(); ++i) {
        Matrix rho(d, d);
        for (std::size_t a = 0; a < d; ++a) {
            const Vec image = c.xi_reps[i].apply(z.basis().row(a));
            const auto coords = z.coordinates_of(image);
            if (!coords)
                throw InternalCheckError("derivation does not preserve the center");
            for (std::size_t b = 0; b < d; ++b) rho(b, a) = (*coords)[b];
        }
        action.push_back(std::move(rho));
    }
    if (const auto defect = flatness_defect(c.base, action))
        throw InternalCheckError("InternalCheckFailure: induced center action is not flat at (" +
                                 std::to_string(defect->first) + "," +
                                 std::to_string(defect->second) + ")");
    return {c.base, d, std::move(action)};
}

ConnectionLift lift_connection(const Coupling& c) {
    return {c, c.xi_reps};
}

ConnectionLift lift_connection_shifted(const Coupling& c, const std::vector<Matrix>& shifts) {
    if (shifts.size() != c.base.dim())
        throw ValidationError("expected one shift per base basis vector");
    std::vector<Matrix> nabla;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (!c.spaces.inn.contains(shifts[i].flatten()))
            throw ValidationError("NotInner(" + std::to_string(i) +
                                  "): connection shift is not an inner derivation");
        nabla.push_back(c.xi_reps[i] + shifts[i]);
    }
    return {c, std::move(nabla)};
}

Cochain curvature(const ConnectionLift& lift) {
    const Coupling& c = lift.coupling;
    const std::size_t m = c.base.dim();
    Cochain r = Cochain::zero(2, m, c.spaces.der.dim());
    for (const auto& tuple : increasing_tuples(m, 2)) {
        Matrix value = Matrix::commutator(lift.nabla[tuple[0]], lift.nabla[tuple[1]]);
        const Vec br = c.base.bracket_basis(tuple[0], tuple[1]);
        for (std::size_t k = 0; k < m; ++k)
            if (br[k] != 0) value = value - lift.nabla[k].scaled(br[k]);
        if (!c.spaces.inn.contains(value.flatten()))
            throw InternalCheckError("CurvatureNotInner at tuple (" +
                                     std::to_string(tuple[0]) + "," +
                                     std::to_string(tuple[1]) + ")");
        const auto coords = c.spaces.der.coordinates_of(value.flatten());
        if (!coords)
            throw InternalCheckError("curvature value is not a derivation");
        r.at(tuple) = *coords;
    }
    return r;
}

OmegaLift lift_omega(const ConnectionLift& lift) {
    const Coupling& c = lift.coupling;
    const std::size_t n = c.fiber.dim();
    const Matrix ad_stack = c.fiber.ad_stack();
    const Cochain r = curvature(lift);
    Cochain omega = Cochain::zero(2, c.base.dim(), n);
    for (const auto& tuple : increasing_tuples(c.base.dim(), 2)) {
        const Matrix value = c.spaces.der_rep(r.at(tuple));
        const auto u = solve(ad_stack, value.flatten());
        if (!u)
            throw InternalCheckError("NoPreimage: curvature value escaped ad(g)");
        omega.at(tuple) = *u;
    }
    return {lift, std::move(omega)};
}

OmegaLift lift_omega_shifted(const ConnectionLift& lift, const Cochain& center_shift) {
    OmegaLift base = lift_omega(lift);
    const Subspace z = lift.coupling.fiber.center();
    if (center_shift.degree != 2 || center_shift.base_dim != lift.coupling.base.dim() ||
        center_shift.value_dim != lift.coupling.fiber.dim())
        throw ValidationError("omega shift must be a fiber-valued 2-cochain over the base");
    for (const auto& v : center_shift.values)
        if (!z.contains(v))
            throw ValidationError("omega shift value is not central");
    base.omega = base.omega + center_shift;
    return base;
}

} // namespace lieobs
