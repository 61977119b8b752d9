#pragma once

#include "hodgekit/gaussian_rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hodgekit {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static ExactMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  bool is_zero() const;
  ExactMatrix transpose() const;
  ExactMatrix conj() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend Vector operator*(const ExactMatrix& a, const Vector& v);
  ExactMatrix operator-() const { return *this * GaussianRational(-1); }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  /// Rows as "[a, b; c, d]".
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Reduced row echelon form with its pivot columns (one per nonzero row).
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the first nonzero entry of a column is the pivot.
RowEchelon rref(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// Writes some x with a*x = b; false when the system is inconsistent.
bool solve(const ExactMatrix& a, const Vector& b, Vector& x);

bool is_zero(const Vector& v);
std::string to_string(const Vector& v);

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace hodgekit
