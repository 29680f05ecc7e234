#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "povswb/order/quotient.hpp"

namespace povswb::order {

struct AnalysisReport {
  bool is_wedge = false;
  bool is_cone = false;
  bool is_majorizing = false;
  bool is_almost_archimedean = false;
  bool is_archimedean = false;
  bool is_ru_closed = false;
  /// nullopt when the iteration hit its cap.
  std::optional<std::size_t> alpha_type;
  std::optional<std::size_t> lambda_type;
  std::size_t lineality_dim = 0;
  Vector regulator;
  std::optional<std::pair<Vector, Vector>> additivity_witness;
  std::optional<Vector> archimedean_witness;
  std::vector<SemiLinearSet> closure_steps;
  std::vector<Subspace> ideals;
};

/// Every predicate of the space. Predicates past is_wedge are only filled
/// in for valid wedges.
AnalysisReport analyze(const PreOrderedSpace& space, std::size_t cap = kDefaultCap);

/// Random valid wedges: unions of random homogeneous cells with the origin
/// (kept only when they pass validate_wedge) mixed with lexicographic-style
/// wedges {l > 0} ∪ ({l = 0} ∩ V) built recursively.
class WedgeGenerator {
 public:
  explicit WedgeGenerator(std::uint64_t seed) : rng_(seed) {}

  PreOrderedSpace next(std::size_t dim);
  std::size_t rejected() const { return rejected_; }

 private:
  long uniform(long lo, long hi);
  semilin::LinConstraint random_constraint(std::size_t dim, bool strict_allowed);
  SemiLinearSet random_candidate(std::size_t dim);
  SemiLinearSet lex_style(std::size_t dim, int depth);

  std::mt19937_64 rng_;
  std::size_t rejected_ = 0;
};

}  // namespace povswb::order
