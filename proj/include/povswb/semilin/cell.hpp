#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "povswb/semilin/constraint.hpp"

namespace povswb::semilin {

/// Resource caps for elimination and set algebra. Exceeding either raises
/// capacity_error instead of returning an approximate answer.
struct Limits {
  std::size_t max_cells = 4096;
  std::size_t max_constraints = 1024;
};

const Limits& limits();
void set_limits(const Limits& l);

class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A conjunction of linear constraints over Q^dim. Always convex.
class Cell {
 public:
  explicit Cell(std::size_t dim, std::vector<LinConstraint> constraints = {});

  std::size_t dim() const { return dim_; }
  const std::vector<LinConstraint>& constraints() const { return constraints_; }

  bool contains(const Vector& x) const;
  bool is_homogeneous() const;
  bool has_strict() const;

  Cell with(const LinConstraint& c) const;
  Cell conjoin(const Cell& other) const;
  Cell relaxed() const;
  Cell embedded(std::size_t dim, std::size_t offset) const;

  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const Cell& other) const = default;

 private:
  std::size_t dim_;
  std::vector<LinConstraint> constraints_;
};

/// Exact emptiness via a rational simplex that maximizes a common slack on
/// the strict rows.
bool cell_is_empty(const Cell& c);

/// Plain Fourier-Motzkin emptiness test with strictness bookkeeping: a
/// resolvent is strict iff either parent is; equalities are substituted
/// first. Exponential; kept as an independent cross-check.
bool fm_is_empty(const Cell& c);

/// A rational point of the cell (strictly inside every strict bound), or
/// nullopt when the cell is empty.
std::optional<Vector> sample_point(const Cell& c);

/// Existentially eliminates `vars`; their columns stay in place as zeros.
/// nullopt when the cell is empty.
std::optional<Cell> project(const Cell& c, const std::vector<std::size_t>& vars);

/// Merges parallel bounds, detects emptiness and drops constraints implied
/// by the remaining ones. nullopt when the cell is empty.
std::optional<Cell> simplify(const Cell& c);

/// a is contained in b.
bool cell_subset(const Cell& a, const Cell& b);

}  // namespace povswb::semilin
