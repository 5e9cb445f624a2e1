#include "specmono/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specmono/common.hpp"

namespace specmono {

namespace {

// Rotates the value pair (x[j], y[j]) for j in [begin, end): the contiguous
// form of the classic Jacobi update with tau = s / (1 + c).
inline void rotate_span(double* x, double* y, std::size_t begin, std::size_t end, double s,
                        double tau) {
  for (std::size_t j = begin; j < end; ++j) {
    const double g = x[j];
    const double h = y[j];
    x[j] = g - s * (h + g * tau);
    y[j] = h + s * (g - h * tau);
  }
}

// Flips eigenvector signs so the largest-magnitude coordinate is positive,
// ties broken by lowest index. Keeps reports byte-reproducible.
void fix_signs(Matrix& vecs) {
  const std::size_t n = vecs.rows();
  for (std::size_t k = 0; k < vecs.cols(); ++k) {
    std::size_t arg = 0;
    double best = std::fabs(vecs(0, k));
    for (std::size_t r = 1; r < n; ++r) {
      const double m = std::fabs(vecs(r, k));
      if (m > best) {
        best = m;
        arg = r;
      }
    }
    if (vecs(arg, k) < 0.0)
      for (std::size_t r = 0; r < n; ++r) vecs(r, k) = -vecs(r, k);
  }
}

}  // namespace

EigenDecomposition eig_sym(const SymMatrix& m) {
  if (!m.is_finite()) throw precondition_error("eig_sym: matrix has non-finite entries");
  const std::size_t n = m.order();
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  if (n == 0) return out;

  // Both triangles of the work matrix are kept in sync so every rotation
  // touches rows p and q contiguously; the eigenvector accumulator is stored
  // transposed (row k = eigenvector k) for the same reason.
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  std::vector<double> vt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

  std::vector<double> d(n), b(n), z(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) b[i] = d[i] = a[i * n + i];

  bool converged = false;
  for (int sweep = 1; sweep <= 50; ++sweep) {
    double sm = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) sm += std::fabs(a[p * n + q]);
    if (sm == 0.0) {
      converged = true;
      break;
    }
    const double tresh = sweep < 4 ? 0.2 * sm / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::fabs(a[p * n + q]);
        if (sweep > 4 && std::fabs(d[p]) + g == std::fabs(d[p]) &&
            std::fabs(d[q]) + g == std::fabs(d[q])) {
          a[p * n + q] = a[q * n + p] = 0.0;
        } else if (std::fabs(a[p * n + q]) > tresh) {
          double h = d[q] - d[p];
          double t;
          if (std::fabs(h) + g == std::fabs(h)) {
            t = a[p * n + q] / h;
          } else {
            const double theta = 0.5 * h / a[p * n + q];
            t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double tau = s / (1.0 + c);
          h = t * a[p * n + q];
          z[p] -= h;
          z[q] += h;
          d[p] -= h;
          d[q] += h;
          a[p * n + q] = a[q * n + p] = 0.0;

          double* row_p = a.data() + p * n;
          double* row_q = a.data() + q * n;
          rotate_span(row_p, row_q, 0, p, s, tau);
          rotate_span(row_p, row_q, p + 1, q, s, tau);
          rotate_span(row_p, row_q, q + 1, n, s, tau);
          for (std::size_t j = 0; j < n; ++j) {
            if (j == p || j == q) continue;
            a[j * n + p] = row_p[j];
            a[j * n + q] = row_q[j];
          }
          rotate_span(vt.data() + p * n, vt.data() + q * n, 0, n, s, tau);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      b[i] += z[i];
      d[i] = b[i];
      z[i] = 0.0;
    }
  }
  if (!converged) throw std::runtime_error("eig_sym: Jacobi iteration did not converge");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return d[x] > d[y]; });

  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = d[idx[k]];
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = vt[idx[k] * n + r];
  }
  fix_signs(out.eigenvectors);
  return out;
}

PsdReport psd_check(const SymMatrix& m, double tol) {
  const auto ed = eig_sym(m);
  const double lmin = ed.eigenvalues.empty() ? 0.0 : ed.eigenvalues.back();
  return {lmin >= -tol, lmin};
}

Embedding gram_factor(const SymMatrix& g, double tol) {
  const auto ed = eig_sym(g);
  const std::size_t n = g.order();
  if (!ed.eigenvalues.empty() && ed.eigenvalues.back() < -tol)
    throw precondition_error("gram_factor: matrix is not PSD (min eigenvalue " +
                             std::to_string(ed.eigenvalues.back()) + ")");
  std::size_t d = 0;
  while (d < n && ed.eigenvalues[d] > tol) ++d;

  Embedding e;
  e.n = n;
  e.d = std::max<std::size_t>(d, 1);
  e.coords = Matrix(n, e.d);
  for (std::size_t k = 0; k < d; ++k) {
    const double s = std::sqrt(ed.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) e.coords(i, k) = s * ed.eigenvectors(i, k);
  }
  return e;
}

SymMatrix breve_transform(const SymMatrix& a) {
  const std::size_t n = a.order();
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.set(i, j, 2.0 * a(i, j) - a(i, i) - a(j, j) + 1.0);
  return out;
}

double rank_lower_bound(const SymMatrix& x) {
  const double s = x.sum_squares();
  if (s == 0.0) throw precondition_error("rank_lower_bound: zero matrix");
  const double t = x.trace();
  return t * t / s;
}

std::size_t numerical_rank(const EigenDecomposition& ed, double rel_tol) {
  double lmax = 0.0;
  for (double l : ed.eigenvalues) lmax = std::max(lmax, std::fabs(l));
  if (lmax == 0.0) return 0;
  std::size_t r = 0;
  for (double l : ed.eigenvalues)
    if (std::fabs(l) > rel_tol * lmax) ++r;
  return r;
}

}  // namespace specmono
