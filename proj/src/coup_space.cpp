#include "lieobs/coup_space.hpp"
#include "lieobs/errors.hpp"

namespace lieobs {

CoupElement make_element(Coupling coupling, TModule reference, Matrix phi) {
    const TModule zmodule = induced_center_module(coupling);
    if (!coupling.base.same_structure(reference.base))
        throw ValidationError("BaseMismatch: reference module lives over a different base");
    if (phi.rows() != reference.module_dim || phi.cols() != zmodule.module_dim)
        throw ValidationError("DimensionMismatch: phi must map center(fiber) to the reference");
    if (reference.module_dim != zmodule.module_dim)
        throw ValidationError("DimensionMismatch: center and reference dimensions differ");
    if (rref(phi).pivots.size() != phi.cols())
        throw ValidationError("NotInvertible: phi is singular");
    if (const auto defect = flatness_defect(reference.base, reference.action))
        throw ValidationError("NotFlat: reference module is not flat");
    for (std::size_t i = 0; i < coupling.base.dim(); ++i)
        if (!(phi * zmodule.action[i] == reference.action[i] * phi))
            throw ValidationError("NotIntertwining(" + std::to_string(i) +
                                  "): phi does not preserve the connections");
    return {std::move(coupling), std::move(reference), std::move(phi)};
}

CohomologyClass uobs(const CoupElement& e) {
    const ObstructionResult obs = obstruction_class(e.coupling);
    return pushforward(e.phi, obs.cls, e.reference);
}

CoupElement direct_sum_element(const CoupElement& c1, const CoupElement& c2) {
    if (!c1.coupling.base.same_structure(c2.coupling.base))
        throw ValidationError("BaseMismatch: elements live over different bases");
    if (!(c1.reference == c2.reference))
        throw ValidationError("ReferenceMismatch: elements use different reference modules");

    LieAlgebra fiber_sum = direct_sum(c1.coupling.fiber, c2.coupling.fiber);
    std::vector<Matrix> xi;
    for (std::size_t i = 0; i < c1.coupling.base.dim(); ++i)
        xi.push_back(Matrix::block_diag(c1.coupling.xi_reps[i], c2.coupling.xi_reps[i]));
    Coupling sum = validate_coupling(c1.coupling.base, std::move(fiber_sum), std::move(xi));

    // The canonical center basis of the sum is the blockwise union, so the
    // blockwise phi is expressed in the right coordinates. Checked, not assumed.
    const Subspace z1 = c1.coupling.fiber.center();
    const Subspace z2 = c2.coupling.fiber.center();
    const Subspace zsum = sum.fiber.center();
    {
        Matrix expected(z1.dim() + z2.dim(), sum.fiber.dim());
        for (std::size_t i = 0; i < z1.dim(); ++i)
            for (std::size_t j = 0; j < z1.ambient_dim(); ++j)
                expected(i, j) = z1.basis()(i, j);
        for (std::size_t i = 0; i < z2.dim(); ++i)
            for (std::size_t j = 0; j < z2.ambient_dim(); ++j)
                expected(z1.dim() + i, z1.ambient_dim() + j) = z2.basis()(i, j);
        if (!(zsum.basis() == expected))
            throw InternalCheckError("center of the direct sum is not the blockwise center");
    }

    TModule reference_sum = direct_sum_module(c1.reference, c2.reference);
    Matrix phi_sum = Matrix::block_diag(c1.phi, c2.phi);
    return make_element(std::move(sum), std::move(reference_sum), std::move(phi_sum));
}

CombineResult combine(const CoupElement& c1, const CoupElement& c2,
                      const Rational& alpha, const Rational& beta) {
    if (alpha == 0 && beta == 0)
        throw ValidationError("ScalarsBothZero: (alpha, beta) = (0, 0) is rejected");

    const CoupElement sum = direct_sum_element(c1, c2);
    const std::size_t d = c1.reference.module_dim;
    const std::size_t n_sum = sum.coupling.fiber.dim();

    // theta(u, v) = alpha u + beta v on Z + Z; Z0 = ker theta has dimension d.
    Matrix theta(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        theta(i, i) = alpha;
        theta(i, d + i) = beta;
    }
    const Subspace z0 = nullspace(theta);
    if (z0.dim() != d)
        throw InternalCheckError("ker theta has unexpected dimension");

    // psi = (i_1 + i_2) . (phi_1 + phi_2)^{-1} . i_theta : Z0 -> L1 + L2.
    const Subspace zsum = sum.coupling.fiber.center();
    Matrix psi(n_sum, d);
    for (std::size_t a = 0; a < d; ++a) {
        const Vec in_zz = z0.basis().row(a);
        const auto center_coords = solve(sum.phi, in_zz);
        if (!center_coords)
            throw InternalCheckError("phi_1 + phi_2 failed to invert on ker theta");
        const Vec ambient = zsum.from_coordinates(*center_coords);
        for (std::size_t r = 0; r < n_sum; ++r) psi(r, a) = ambient[r];
    }
    const Subspace psi_z0 = Subspace::span_of_rows(psi.transposed(), n_sum);

    // Central quotient L3 = (L1 + L2)/psi(Z0).
    const CentralQuotient quotient = quotient_by_central_subspace(sum.coupling.fiber, psi_z0);
    const Matrix& proj = quotient.projection.matrix;

    // Induced coupling: blockwise representatives pushed through the quotient.
    // Each must preserve psi(Z0) for the induced map to be well defined.
    std::vector<Matrix> xi3;
    for (std::size_t i = 0; i < sum.coupling.base.dim(); ++i) {
        for (std::size_t a = 0; a < psi_z0.dim(); ++a)
            if (!psi_z0.contains(sum.coupling.xi_reps[i].apply(psi_z0.basis().row(a))))
                throw InternalCheckError("SubspaceNotPreserved(" + std::to_string(i) +
                                         "): induced derivation moves psi(Z0)");
        xi3.push_back(proj * sum.coupling.xi_reps[i] * quotient.section);
    }
    Coupling coupling3 = [&] {
        try {
            return validate_coupling(sum.coupling.base, quotient.algebra, std::move(xi3));
        } catch (const ValidationError& e) {
            throw InternalCheckError(std::string("induced coupling failed validation: ") +
                                     e.what());
        }
    }();

    // phi_3 on the image of the center of the sum; the image must be the
    // whole center of L3, otherwise the element leaves Coup(Z).
    const Subspace z3 = coupling3.fiber.center();
    Matrix image_rows(zsum.dim(), quotient.algebra.dim());
    for (std::size_t a = 0; a < zsum.dim(); ++a)
        image_rows.set_row(a, proj.apply(zsum.basis().row(a)));
    const Subspace image = Subspace::span_of_rows(std::move(image_rows), quotient.algebra.dim());
    if (!z3.contains_subspace(image))
        throw InternalCheckError("projected center escaped the center of L3");
    if (!(z3 == image))
        throw ValidationError("CenterGrew: center of L3 has dimension " +
                              std::to_string(z3.dim()) + " but the reference has " +
                              std::to_string(d));

    const Matrix proj_zsum_t = proj * zsum.basis().transposed();  // n3 x 2d
    Matrix phi3(d, z3.dim());
    for (std::size_t b = 0; b < z3.dim(); ++b) {
        // Any preimage works: theta kills the ambiguity, which is exactly Z0.
        const auto pre = solve(proj_zsum_t, z3.basis().row(b));
        if (!pre)
            throw InternalCheckError("center basis vector of L3 has no preimage");
        const Vec value = theta.apply(sum.phi.apply(*pre));
        for (std::size_t r = 0; r < d; ++r) phi3(r, b) = value[r];
    }

    CoupElement element3 = make_element(std::move(coupling3), c1.reference, std::move(phi3));

    CombineAudit audit;
    audit.z0 = z0;
    audit.psi = psi;
    audit.psi_z0 = psi_z0;
    audit.quotient_projection = proj;
    audit.class1 = uobs(c1);
    audit.class2 = uobs(c2);
    audit.class3 = uobs(element3);

    const Vec expected = add(scale(alpha, audit.class1.coordinates),
                             scale(beta, audit.class2.coordinates));
    if (audit.class3.coordinates != expected)
        throw InternalCheckError("LinearityViolation: uobs(c3) != alpha uobs(c1) + beta uobs(c2)");

    return {std::move(element3), std::move(audit)};
}

LinearityReport verify_linearity(const CoupElement& c1, const CoupElement& c2,
                                 const std::vector<std::pair<Rational, Rational>>& samples) {
    LinearityReport report;
    for (const auto& [alpha, beta] : samples) {
        LinearitySample sample;
        sample.alpha = alpha;
        sample.beta = beta;
        try {
            combine(c1, c2, alpha, beta);
            sample.pass = true;
        } catch (const std::exception& e) {
            sample.pass = false;
            sample.detail = e.what();
            report.pass = false;
        }
        report.samples.push_back(std::move(sample));
    }
    return report;
}

} // namespace lieobs
