#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace specmono {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& data() const { return v_; }
  bool is_finite() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> v_;
};

/// Symmetric matrix; only the upper triangle (i <= j) is stored.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * (n + 1) / 2, 0.0) {}

  static SymMatrix identity(std::size_t n);
  /// The all-ones matrix J.
  static SymMatrix ones(std::size_t n);

  double operator()(std::size_t i, std::size_t j) const { return a_[slot(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) { a_[slot(i, j)] = v; }

  std::size_t order() const { return n_; }
  double trace() const;
  /// Sum of a_ij^2 over all ordered (i,j).
  double sum_squares() const;
  bool is_finite() const;
  Matrix full() const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  std::size_t n_;
  std::vector<double> a_;
};

}  // namespace specmono
