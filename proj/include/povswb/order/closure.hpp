#pragma once

#include <vector>

#include "povswb/order/space.hpp"

namespace povswb::order {

inline constexpr std::size_t kDefaultCap = 16;

/// Limits of ru-convergent sequences from s, with the regulator fixed to the
/// space's regulator point and the sequence index relaxed to a real t > 0.
SemiLinearSet derived_set(const PreOrderedSpace& space, const SemiLinearSet& s);

/// Evidence that x is an ru-limit of points of s: approximants[n-1] lies in s
/// and satisfies ±(approximants[n-1] - x) <= regulator / n, from index_bound on.
struct RuWitness {
  Vector regulator;
  Rational index_bound;
  std::vector<Vector> approximants;
};

/// A witness sequence of length `terms` for x, or nullopt when x is not in
/// the derived set of s.
std::optional<RuWitness> ru_witness(const PreOrderedSpace& space, const SemiLinearSet& s, const Vector& x,
                                    std::size_t terms = 64);

struct ClosureTrace {
  SemiLinearSet closure = SemiLinearSet(0);
  std::size_t steps = 0;
  /// s, s', s'', ... ending with the fixpoint.
  std::vector<SemiLinearSet> iterates;
};

/// Iterates derived_set to a fixpoint; throws cap_exceeded after `cap`
/// strict growth steps.
ClosureTrace ru_closure(const PreOrderedSpace& space, const SemiLinearSet& s, std::size_t cap = kDefaultCap);

bool is_ru_closed(const PreOrderedSpace& space, const SemiLinearSet& s);

/// Number of derivations needed to close X+.
std::size_t alpha_type(const PreOrderedSpace& space, std::size_t cap = kDefaultCap);

}  // namespace povswb::order
