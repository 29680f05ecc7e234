#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "povswb/exactnum/matrix.hpp"
#include "povswb/exactnum/subspace.hpp"
#include "povswb/semilin/cell.hpp"

namespace povswb::semilin {

/// A finite union of cells in Q^dim.
class SemiLinearSet {
 public:
  explicit SemiLinearSet(std::size_t dim, std::vector<Cell> cells = {});

  static SemiLinearSet empty(std::size_t dim) { return SemiLinearSet(dim); }
  static SemiLinearSet universe(std::size_t dim);
  static SemiLinearSet from_cell(Cell cell);
  static SemiLinearSet point(const Vector& p);
  static SemiLinearSet subspace(const exact::Subspace& s);

  std::size_t dim() const { return dim_; }
  const std::vector<Cell>& cells() const { return cells_; }

  bool contains(const Vector& x) const;
  bool is_empty() const;
  bool is_homogeneous() const;

  /// Some point of the set, if any.
  std::optional<Vector> sample() const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  bool operator==(const SemiLinearSet& other) const = default;

 private:
  std::size_t dim_;
  std::vector<Cell> cells_;
};

/// Drops empty cells, simplifies the rest, removes cells contained in other
/// cells and merges pairs differing in a single complementary bound.
SemiLinearSet normalize(const SemiLinearSet& s);

/// normalize, then replaces groups of cells with a convex union by that
/// union (checked exactly). Costlier; meant for results that are kept.
SemiLinearSet coalesce(const SemiLinearSet& s);

SemiLinearSet complement(const SemiLinearSet& s);
SemiLinearSet intersect(const SemiLinearSet& a, const SemiLinearSet& b);
SemiLinearSet unite(const SemiLinearSet& a, const SemiLinearSet& b);

/// A point of a \ b, or nullopt when a is a subset of b.
std::optional<Vector> subset_witness(const SemiLinearSet& a, const SemiLinearSet& b);
bool set_subset(const SemiLinearSet& a, const SemiLinearSet& b);
bool set_equal(const SemiLinearSet& a, const SemiLinearSet& b);

/// Relaxes every strict inequality of every nonempty cell.
SemiLinearSet topo_closure(const SemiLinearSet& s);

/// Existential projection; the eliminated columns remain as zero columns.
SemiLinearSet project_out(const SemiLinearSet& s, const std::vector<std::size_t>& vars);

/// Keeps the first `dim` coordinates; every dropped column must be zero.
SemiLinearSet truncate(const SemiLinearSet& s, std::size_t dim);

/// Places the set at coordinates [offset, offset + s.dim()) of Q^dim.
SemiLinearSet embed(const SemiLinearSet& s, std::size_t dim, std::size_t offset);

/// {Mx : x in s}.
SemiLinearSet linear_image(const SemiLinearSet& s, const exact::Matrix& m);

/// {x : Mx in s}.
SemiLinearSet preimage(const SemiLinearSet& s, const exact::Matrix& m);

/// {x : Mx + b in s}.
SemiLinearSet affine_preimage(const SemiLinearSet& s, const exact::Matrix& m, const Vector& b);

/// {v + x : x in s}.
SemiLinearSet translate(const SemiLinearSet& s, const Vector& v);

/// {-x : x in s}.
SemiLinearSet reflect(const SemiLinearSet& s);

}  // namespace povswb::semilin
