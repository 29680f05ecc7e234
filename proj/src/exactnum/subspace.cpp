#include "povswb/exactnum/subspace.hpp"

#include <string>

namespace povswb::exact {

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const EchelonForm e = rref(Matrix::from_rows(ambient_dim, vectors));
  for (std::size_t r = 0; r < e.rank(); ++r) s.basis_.push_back(e.reduced.row(r));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, units);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw dimension_error("vector outside the ambient space");
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(ambient_dim_, rows)) == basis_.size();
}

std::vector<Vector> Subspace::normals() const {
  if (basis_.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < ambient_dim_; ++i) all.push_back(unit_vector(ambient_dim_, i));
    return all;
  }
  return kernel_basis(Matrix::from_rows(ambient_dim_, basis_)).basis();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw dimension_error("subspace sum across ambient dimensions");
  std::vector<Vector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_dim_, rows);
}

Subspace kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

std::vector<Vector> complement_vectors(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  std::vector<Vector> current = s.basis();
  std::vector<Vector> added;
  for (std::size_t i = 0; i < n && current.size() < n; ++i) {
    Vector e = unit_vector(n, i);
    current.push_back(e);
    if (rank(Matrix::from_rows(n, current)) == current.size()) {
      added.push_back(std::move(e));
    } else {
      current.pop_back();
    }
  }
  return added;
}

Subspace complement_basis(const Subspace& s) {
  return Subspace::span(s.ambient_dim(), complement_vectors(s));
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw dimension_error("comparing subspaces of Q^" + std::to_string(a.ambient_dim()) + " and Q^" +
                          std::to_string(b.ambient_dim()));
  return a.basis() == b.basis();
}

}  // namespace povswb::exact
