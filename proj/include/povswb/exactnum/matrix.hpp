#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "povswb/exactnum/rational.hpp"

namespace povswb::exact {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Vector apply(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  Matrix reduced;                   // reduced row-echelon form, zero rows kept at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Some x with Mx = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace povswb::exact
