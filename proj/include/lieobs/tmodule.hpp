#ifndef LIEOBS_TMODULE_HPP
#define LIEOBS_TMODULE_HPP

#include "lieobs/lie_algebra.hpp"

#include <optional>

namespace lieobs {

/// A flat action of the base algebra T on Q^module_dim: a genuine Lie
/// algebra representation, rho([X_i, X_j]) = [rho(X_i), rho(X_j)].
struct TModule {
    LieAlgebra base;
    std::size_t module_dim = 0;
    std::vector<Matrix> action;   // base.dim() matrices, module_dim x module_dim

    bool operator==(const TModule& rhs) const {
        return base.same_structure(rhs.base) && module_dim == rhs.module_dim &&
               action == rhs.action;
    }
};

/// First (i, j) pair violating flatness, if any.
std::optional<std::pair<std::size_t, std::size_t>>
flatness_defect(const LieAlgebra& base, const std::vector<Matrix>& action);

/// Validating constructor; throws ValidationError("NotFlat...") on failure.
TModule make_tmodule(LieAlgebra base, std::size_t module_dim, std::vector<Matrix> action);

/// The zero action on Q^d.
TModule trivial_module(const LieAlgebra& base, std::size_t d);

/// Blockwise direct sum of two modules over the same base.
TModule direct_sum_module(const TModule& a, const TModule& b);

} // namespace lieobs

#endif
