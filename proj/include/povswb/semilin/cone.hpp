#pragma once

#include <vector>

#include "povswb/semilin/semilinear_set.hpp"

namespace povswb::semilin {

/// Minkowski-Weyl conversion of a closed homogeneous cell (relations LE/EQ,
/// zero constants): finitely many primitive integer rays whose nonnegative
/// combinations give the cell. Extreme rays of the pointed part come first,
/// then each lineality basis vector v as v, -v.
/// Throws std::invalid_argument for strict or non-homogeneous input.
std::vector<Vector> cone_generators(const Cell& c);

/// {sum_i l_i g_i : l_i >= 0} as a semi-linear set (the origin alone for
/// an empty generator list).
SemiLinearSet cone_hull(const std::vector<Vector>& generators, std::size_t dim);

/// Linear span of a homogeneous semi-linear set: the span of the generators
/// of the closures of its nonempty cells.
exact::Subspace linear_span(const SemiLinearSet& s);

/// Sum of the generators of the closures of all nonempty cells of a wedge.
/// Lies in the relative interior of the closure of W (hence in W) and every
/// w in W satisfies c*u - w in W for some rational c > 0.
Vector regulator_point(const SemiLinearSet& wedge);

}  // namespace povswb::semilin
