#pragma once

#include <optional>
#include <vector>

#include "povswb/semilin/constraint.hpp"

namespace povswb::semilin::detail {

/// Exact feasibility of a conjunction with strict inequalities: maximizes a
/// common slack e <= 1 on the strict rows with a dense rational simplex
/// (Bland's rule). Returns a point satisfying every row, or nullopt.
std::optional<Vector> strict_feasible_point(const std::vector<LinConstraint>& rows, std::size_t dim);

/// Removes rows implied by the others (an LP per row).
std::vector<LinConstraint> drop_redundant(std::vector<LinConstraint> rows, std::size_t dim);

}  // namespace povswb::semilin::detail
