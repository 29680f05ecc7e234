#pragma once

#include <vector>

#include "povswb/exactnum/matrix.hpp"
#include "povswb/order/closure.hpp"

namespace povswb::order {

/// X/A in coordinates: projection has kernel exactly A, section is a right
/// inverse of projection, and the quotient carries the image of a wedge.
struct QuotientPresentation {
  Subspace kernel;
  exact::Matrix projection;
  exact::Matrix section;
  PreOrderedSpace quotient;
};

/// Quotient of Q^dim by a, ordered by the image of `wedge`. The complement
/// is spanned by the lowest-index standard vectors outside a.
QuotientPresentation quotient_by(const SemiLinearSet& wedge, const Subspace& a);

/// X+ closed under ru-limits, then divided by its lineality space. The
/// quotient is checked to be an Archimedean cone, majorizing exactly when X+
/// is; a failure raises internal_check_failure.
QuotientPresentation archimedeanization(const PreOrderedSpace& space, std::size_t cap = kDefaultCap);

struct IdealTower {
  /// I_0 = {0}, I_1 = I(X), ... up to and including the first repeat.
  std::vector<Subspace> ideals;
  std::size_t lambda = 0;
};

/// Pulls back infinitesimals of successive quotients until the chain
/// stabilizes; throws cap_exceeded after `cap` strict steps.
IdealTower ideal_tower(const PreOrderedSpace& space, std::size_t cap = kDefaultCap);

}  // namespace povswb::order
