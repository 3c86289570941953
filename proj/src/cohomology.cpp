#include "lieobs/cohomology.hpp"
#include "lieobs/errors.hpp"

namespace lieobs {

Matrix differential_matrix(const TModule& module, std::size_t degree) {
    const std::size_t m = module.base.dim();
    const std::size_t d = module.module_dim;
    const std::size_t cols = tuple_count(m, degree) * d;
    const std::size_t rows = tuple_count(m, degree + 1) * d;
    Matrix mat(rows, cols);
    const auto tuples = increasing_tuples(m, degree);
    for (std::size_t t = 0; t < tuples.size(); ++t)
        for (std::size_t v = 0; v < d; ++v) {
            Cochain delta = Cochain::zero(degree, m, d);
            delta.values[t][v] = 1;
            const Vec image = ce_differential(module, delta).flatten();
            for (std::size_t r = 0; r < rows; ++r) mat(r, t * d + v) = image[r];
        }
    return mat;
}

CohomologySpace::CohomologySpace(TModule module, std::size_t degree)
    : module_(std::move(module)), degree_(degree) {
    if (const auto defect = flatness_defect(module_.base, module_.action))
        throw ValidationError("NotFlat: module action violates flatness at base pair (" +
                              std::to_string(defect->first) + "," +
                              std::to_string(defect->second) + ")");
    const std::size_t m = module_.base.dim();
    const std::size_t d = module_.module_dim;
    const std::size_t space_dim = tuple_count(m, degree) * d;

    if (degree > m) {
        // Zero cochain space: everything collapses.
        kernel_ = Subspace::zero(space_dim);
        class_projection_ = Matrix(0, 0);
        class_section_ = Matrix(0, 0);
        betti_ = 0;
        return;
    }

    kernel_ = nullspace(differential_matrix(module_, degree));

    Subspace image = Subspace::zero(space_dim);
    if (degree > 0) {
        const Matrix d_prev = differential_matrix(module_, degree - 1);
        image = Subspace::span_of_rows(d_prev.transposed(), space_dim);
    }
    if (!kernel_.contains_subspace(image))
        throw InternalCheckError("im(d) escaped ker(d): differential is broken");

    // Express the image inside kernel coordinates and quotient there.
    Matrix image_in_kernel(image.dim(), kernel_.dim());
    for (std::size_t i = 0; i < image.dim(); ++i) {
        const auto coords = kernel_.coordinates_of(image.basis().row(i));
        if (!coords)
            throw InternalCheckError("image row has no kernel coordinates");
        image_in_kernel.set_row(i, *coords);
    }
    const Subspace image_sub = Subspace::span_of_rows(std::move(image_in_kernel), kernel_.dim());
    const auto qc = quotient_coordinates(kernel_.dim(), image_sub);
    class_projection_ = qc.projection;
    class_section_ = qc.section;
    betti_ = kernel_.dim() - image_sub.dim();
}

std::size_t betti_number(const TModule& module, std::size_t degree) {
    return CohomologySpace(module, degree).betti();
}

CohomologyClass CohomologySpace::class_of(const Cochain& z) const {
    if (z.degree != degree_ || z.base_dim != module_.base.dim() ||
        z.value_dim != module_.module_dim)
        throw ValidationError("ModuleMismatch: cochain does not live in this complex");
    if (degree_ <= module_.base.dim() &&
        !ce_differential(module_, z).is_zero())
        throw ValidationError("NotCocycle: the differential of the input is nonzero");
    const auto kernel_coords = kernel_.coordinates_of(z.flatten());
    if (!kernel_coords)
        throw InternalCheckError("closed cochain missing from kernel subspace");
    return {degree_, module_, class_projection_.apply(*kernel_coords)};
}

Cochain CohomologySpace::representative(const CohomologyClass& cls) const {
    if (cls.coordinates.size() != betti_)
        throw ValidationError("ModuleMismatch: class coordinates have wrong length");
    const Vec kernel_coords = class_section_.apply(cls.coordinates);
    return Cochain::unflatten(degree_, module_.base.dim(), module_.module_dim,
                              kernel_.from_coordinates(kernel_coords));
}

CohomologyClass CohomologySpace::zero_class() const {
    return {degree_, module_, Vec(betti_, Rational(0))};
}

bool classes_equal(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.degree != b.degree || !(a.module == b.module))
        throw ValidationError("ModuleMismatch: classes live in different groups");
    return a.coordinates == b.coordinates;
}

namespace {

void check_intertwining(const Matrix& iso, const TModule& source, const TModule& target) {
    if (iso.rows() != target.module_dim || iso.cols() != source.module_dim)
        throw ValidationError("pushforward map has wrong shape");
    if (source.module_dim != target.module_dim)
        throw ValidationError("NotInvertible: pushforward between different dimensions");
    if (rref(iso).pivots.size() != iso.cols())
        throw ValidationError("NotInvertible: pushforward map is singular");
    if (!source.base.same_structure(target.base))
        throw ValidationError("pushforward between modules over different bases");
    for (std::size_t i = 0; i < source.base.dim(); ++i)
        if (!(iso * source.action[i] == target.action[i] * iso))
            throw ValidationError("NotIntertwining: defect at base index " + std::to_string(i));
}

} // namespace

Cochain pushforward(const Matrix& iso, const Cochain& c, const TModule& source,
                    const TModule& target) {
    check_intertwining(iso, source, target);
    return map_values(iso, c);
}

CohomologyClass pushforward(const Matrix& iso, const CohomologyClass& cls,
                            const TModule& target) {
    check_intertwining(iso, cls.module, target);
    const CohomologySpace source_space(cls.module, cls.degree);
    const CohomologySpace target_space(target, cls.degree);
    const Cochain rep = source_space.representative(cls);
    return target_space.class_of(map_values(iso, rep));
}

} // namespace lieobs
