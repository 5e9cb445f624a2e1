#include "specmono/matrix.hpp"

#include <cmath>

namespace specmono {

bool Matrix::is_finite() const {
  for (double x : v_)
    if (!std::isfinite(x)) return false;
  return true;
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::ones(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, 1.0);
  return m;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::sum_squares() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    s += (*this)(i, i) * (*this)(i, i);
    for (std::size_t j = i + 1; j < n_; ++j) s += 2.0 * (*this)(i, j) * (*this)(i, j);
  }
  return s;
}

bool SymMatrix::is_finite() const {
  for (double x : a_)
    if (!std::isfinite(x)) return false;
  return true;
}

Matrix SymMatrix::full() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) m(i, j) = m(j, i) = (*this)(i, j);
  return m;
}

}  // namespace specmono
