#include "lieobs/tmodule.hpp"
#include "lieobs/errors.hpp"

namespace lieobs {

std::optional<std::pair<std::size_t, std::size_t>>
flatness_defect(const LieAlgebra& base, const std::vector<Matrix>& action) {
    const std::size_t m = base.dim();
    const std::size_t d = action.empty() ? 0 : action[0].rows();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Matrix lhs(d, d);
            const Vec br = base.bracket_basis(i, j);
            for (std::size_t k = 0; k < m; ++k)
                if (br[k] != 0) lhs = lhs + action[k].scaled(br[k]);
            if (lhs != Matrix::commutator(action[i], action[j])) return {{i, j}};
        }
    return std::nullopt;
}

TModule make_tmodule(LieAlgebra base, std::size_t module_dim, std::vector<Matrix> action) {
    if (action.size() != base.dim())
        throw ValidationError("module needs one action matrix per base basis vector");
    for (const auto& a : action)
        if (a.rows() != module_dim || a.cols() != module_dim)
            throw ValidationError("action matrix shape does not match module_dim");
    if (const auto defect = flatness_defect(base, action))
        throw ValidationError("NotFlat: action violates flatness at base pair (" +
                              std::to_string(defect->first) + "," +
                              std::to_string(defect->second) + ")");
    return {std::move(base), module_dim, std::move(action)};
}

TModule trivial_module(const LieAlgebra& base, std::size_t d) {
    std::vector<Matrix> action(base.dim(), Matrix(d, d));
    return {base, d, std::move(action)};
}

TModule direct_sum_module(const TModule& a, const TModule& b) {
    if (!a.base.same_structure(b.base))
        throw ValidationError("direct sum of modules over different bases");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.base.dim(); ++i)
        action.push_back(Matrix::block_diag(a.action[i], b.action[i]));
    return {a.base, a.module_dim + b.module_dim, std::move(action)};
}

} // namespace lieobs
