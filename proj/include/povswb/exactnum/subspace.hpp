#pragma once

#include <cstddef>
#include <vector>

#include "povswb/exactnum/matrix.hpp"
#include "povswb/exactnum/rational.hpp"

namespace povswb::exact {

/// A linear subspace of Q^n held by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  /// Span of arbitrary (possibly dependent or zero) vectors.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dimension() const { return basis_.size(); }
  bool is_trivial() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;

  /// Rows spanning the orthogonal complement: v is in the subspace iff
  /// every normal annihilates it.
  std::vector<Vector> normals() const;

  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

/// Canonical basis of {x : Mx = 0}.
Subspace kernel_basis(const Matrix& m);

/// Standard basis vectors of smallest index that extend s to the ambient space.
Subspace complement_basis(const Subspace& s);

/// The greedy extension itself, in index order (not re-echelonized).
std::vector<Vector> complement_vectors(const Subspace& s);

bool subspace_equal(const Subspace& a, const Subspace& b);

}  // namespace povswb::exact
