#include "lieobs/obstruction.hpp"
#include "lieobs/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lieobs {

Cochain obstruction_cocycle(const OmegaLift& o, const TModule& zmodule) {
    const Coupling& c = o.lift.coupling;
    const Subspace z = c.fiber.center();
    const Cochain d_omega = ce_differential(c.base, o.lift.nabla, o.omega);

    Cochain u = Cochain::zero(3, c.base.dim(), z.dim());
    const auto tuples = increasing_tuples(c.base.dim(), 3);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto coords = z.coordinates_of(d_omega.values[t]);
        if (!coords)
            throw InternalCheckError("NotCentral: d-of-omega value escaped the center at tuple (" +
                                     std::to_string(tuples[t][0]) + "," +
                                     std::to_string(tuples[t][1]) + "," +
                                     std::to_string(tuples[t][2]) + ")");
        u.values[t] = *coords;
    }
    if (c.base.dim() >= 3 && !ce_differential(zmodule, u).is_zero())
        throw InternalCheckError("NotClosed: obstruction cocycle is not closed");
    return u;
}

ObstructionResult obstruction_class(const Coupling& c) {
    return obstruction_class_with_choices(c, std::vector<Matrix>(), Cochain());
}

ObstructionResult obstruction_class_with_choices(const Coupling& c,
                                                 const std::vector<Matrix>& nabla_shifts,
                                                 const Cochain& omega_shift) {
    const ConnectionLift lift = nabla_shifts.empty()
                                    ? lift_connection(c)
                                    : lift_connection_shifted(c, nabla_shifts);
    const OmegaLift o = (omega_shift.values.empty() && omega_shift.degree == 0)
                            ? lift_omega(lift)
                            : lift_omega_shifted(lift, omega_shift);
    TModule zmodule = induced_center_module(c);
    Cochain u = obstruction_cocycle(o, zmodule);
    const CohomologySpace h3(zmodule, 3);
    CohomologyClass cls = h3.class_of(u);
    const bool trivial = cls.is_zero();
    return {std::move(u), std::move(zmodule), std::move(cls), trivial};
}

namespace {

// Deterministic small-rational stream: numerators in [-5,5], denominators
// in {1,2,3}; each trial reseeds from (seed, trial) alone.
class RationalStream {
public:
    RationalStream(std::uint64_t seed, std::uint64_t trial)
        : state_(seed * 0x9e3779b97f4a7c15ULL + trial * 0xbf58476d1ce4e5b9ULL + 1) {
        next_raw();
        next_raw();
    }

    Rational next() {
        const std::int64_t num = static_cast<std::int64_t>(next_raw() % 11) - 5;
        const std::int64_t den = static_cast<std::int64_t>(next_raw() % 3) + 1;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

private:
    std::uint64_t next_raw() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 16;
    }
    std::uint64_t state_;
};

std::vector<Matrix> random_inner_shifts(const Coupling& c, RationalStream& stream) {
    const std::size_t n = c.fiber.dim();
    std::vector<Matrix> shifts;
    for (std::size_t i = 0; i < c.base.dim(); ++i) {
        Vec combo(n * n, Rational(0));
        for (std::size_t b = 0; b < c.spaces.inn.dim(); ++b)
            axpy(combo, stream.next(), c.spaces.inn.basis().row(b));
        shifts.push_back(Matrix::unflatten(n, n, combo));
    }
    return shifts;
}

Cochain random_center_shift(const Coupling& c, RationalStream& stream) {
    const Subspace z = c.fiber.center();
    Cochain shift = Cochain::zero(2, c.base.dim(), c.fiber.dim());
    for (auto& value : shift.values) {
        Vec coords(z.dim());
        for (auto& x : coords) x = stream.next();
        value = z.from_coordinates(coords);
    }
    return shift;
}

} // namespace

IndependenceReport verify_independence(const Coupling& c, std::size_t trials,
                                       std::uint64_t seed) {
    IndependenceReport report;
    report.trials = trials;
    report.seed = seed;

    const ObstructionResult base = obstruction_class(c);
    report.classes.push_back(base.cls);
    report.all_equal = true;

    std::vector<CohomologyClass> trial_classes(trials);
    std::vector<std::string> trial_witness(trials);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (trials > 4)
#endif
    for (std::size_t t = 0; t < trials; ++t) {
        try {
            RationalStream stream(seed, t);
            const auto shifts = random_inner_shifts(c, stream);
            const auto omega_shift = random_center_shift(c, stream);
            const ObstructionResult shifted =
                obstruction_class_with_choices(c, shifts, omega_shift);
            trial_classes[t] = shifted.cls;
            if (!classes_equal(shifted.cls, base.cls))
                trial_witness[t] = "trial " + std::to_string(t) +
                                   " produced a different class under seeded shifts";
        } catch (const std::exception& e) {
            trial_classes[t] = base.cls;
            trial_witness[t] = "trial " + std::to_string(t) + " failed: " + e.what();
        }
    }

    for (std::size_t t = 0; t < trials; ++t) {
        report.classes.push_back(trial_classes[t]);
        if (!trial_witness[t].empty() && report.witness.empty()) {
            report.all_equal = false;
            report.witness = trial_witness[t];
        }
    }
    return report;
}

std::optional<ExtensionResult> construct_extension(const Coupling& c) {
    const ObstructionResult obs = obstruction_class(c);
    if (!obs.trivial) return std::nullopt;

    const std::size_t m = c.base.dim();
    const std::size_t n = c.fiber.dim();
    const Subspace z = c.fiber.center();

    // Correct omega by a center-valued primitive x with d(x) = -U, so the
    // corrected lift satisfies d-of-omega = 0 identically.
    const ConnectionLift lift = lift_connection(c);
    Cochain omega = lift_omega(lift).omega;
    if (!obs.cocycle.is_zero()) {
        const Matrix d2 = differential_matrix(obs.zmodule, 2);
        Vec rhs = obs.cocycle.flatten();
        for (auto& x : rhs) x = -x;
        const auto primitive = solve(d2, rhs);
        if (!primitive)
            throw InternalCheckError("trivial class has no primitive: quotient data broken");
        const Cochain x = Cochain::unflatten(2, m, z.dim(), *primitive);
        Cochain embedded = Cochain::zero(2, m, n);
        for (std::size_t t = 0; t < x.values.size(); ++t)
            embedded.values[t] = z.from_coordinates(x.values[t]);
        omega = omega + embedded;
    }
    if (!ce_differential(c.base, lift.nabla, omega).is_zero())
        throw InternalCheckError("corrected omega still has nonzero differential");

    // E on T + g: [(X,u),(Y,v)] = ([X,Y], nabla_X v - nabla_Y u + [u,v] + omega(X,Y)).
    const std::size_t dim = m + n;
    std::vector<Rational> tensor(dim * dim * dim, Rational(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return tensor[(i * dim + j) * dim + k];
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const Vec br = c.base.bracket_basis(i, j);
            for (std::size_t k = 0; k < m; ++k) at(i, j, k) = br[k];
            const Vec w = omega.evaluate({i, j});
            for (std::size_t k = 0; k < n; ++k) at(i, j, m + k) = w[k];
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < n; ++a) {
            const Vec w = lift.nabla[i].col(a);
            for (std::size_t k = 0; k < n; ++k) {
                at(i, m + a, m + k) = w[k];
                at(m + a, i, m + k) = -w[k];
            }
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Vec w = c.fiber.bracket_basis(a, b);
            for (std::size_t k = 0; k < n; ++k) at(m + a, m + b, m + k) = w[k];
        }

    std::vector<std::string> names;
    {
        LieAlgebra shell = direct_sum(c.base, c.fiber);
        names = shell.basis_names();
    }
    LieAlgebra total = LieAlgebra::from_structure_tensor(dim, std::move(names), std::move(tensor));
    const auto report = total.validate();
    if (!report.ok())
        throw InternalCheckError("JacobiFailure in constructed extension:\n" + report.describe());

    Matrix anchor_matrix(m, dim);
    for (std::size_t i = 0; i < m; ++i) anchor_matrix(i, i) = 1;
    Matrix inclusion_matrix(dim, n);
    for (std::size_t a = 0; a < n; ++a) inclusion_matrix(m + a, a) = 1;

    LieHom anchor = make_lie_hom(total, c.base, std::move(anchor_matrix));
    LieHom inclusion = make_lie_hom(c.fiber, total, std::move(inclusion_matrix));
    return ExtensionResult{std::move(total), std::move(anchor), std::move(inclusion)};
}

std::vector<Matrix> derivation_adjoint_action(const ConnectionLift& lift) {
    const DerivationSpaces& spaces = lift.coupling.spaces;
    const std::size_t dim = spaces.der.dim();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < lift.nabla.size(); ++i) {
        Matrix rho(dim, dim);
        for (std::size_t b = 0; b < dim; ++b) {
            const Matrix d = spaces.der_rep(basis_vec(dim, b));
            const auto coords = spaces.der.coordinates_of(
                Matrix::commutator(lift.nabla[i], d).flatten());
            if (!coords)
                throw InternalCheckError("derivation adjoint action left Der(g)");
            for (std::size_t a = 0; a < dim; ++a) rho(a, b) = (*coords)[a];
        }
        action.push_back(std::move(rho));
    }
    return action;
}

Cochain ad_compose(const DerivationSpaces& spaces, const Cochain& fiber_valued) {
    Cochain r = Cochain::zero(fiber_valued.degree, fiber_valued.base_dim, spaces.der.dim());
    for (std::size_t t = 0; t < fiber_valued.values.size(); ++t) {
        const auto coords = spaces.der_coords(spaces.algebra.ad(fiber_valued.values[t]));
        if (!coords)
            throw InternalCheckError("ad of a fiber value is not a derivation");
        r.values[t] = *coords;
    }
    return r;
}

} // namespace lieobs
