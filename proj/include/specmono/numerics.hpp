#pragma once

#include <cstddef>
#include <vector>

#include "specmono/common.hpp"
#include "specmono/embedding.hpp"
#include "specmono/matrix.hpp"

namespace specmono {

inline constexpr double kEigResidualTol = 1e-9;
inline constexpr double kPsdTol = 1e-8;
inline constexpr double kRankTol = 1e-8;

/// Eigenvalues sorted descending; column k of eigenvectors pairs with
/// eigenvalues[k]. Each eigenvector is normalized so its largest-magnitude
/// coordinate is positive (ties broken by lowest index).
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

/// Cyclic Jacobi eigensolver. Deterministic: fixed sweep order, single thread.
EigenDecomposition eig_sym(const SymMatrix& m);

struct PsdReport {
  bool psd;
  double min_eigenvalue;
};

/// True iff lambda_min(m) >= -tol.
PsdReport psd_check(const SymMatrix& m, double tol = kPsdTol);

/// Factors a PSD matrix g as V V^t and returns the rows of V as points.
/// Dimension = number of eigenvalues > tol; negatives in [-tol, 0] are
/// clamped to zero. Throws if lambda_min < -tol.
Embedding gram_factor(const SymMatrix& g, double tol = kPsdTol);

/// a  ->  2a - C(a) - R(a) + J, i.e. entry (i,j) becomes 2a_ij - a_ii - a_jj + 1.
/// For a Gram matrix this is the matrix of 1 - squared point distances.
SymMatrix breve_transform(const SymMatrix& a);

/// (tr x)^2 / sum_ij x_ij^2, a lower bound on rank(x). Throws on the zero matrix.
double rank_lower_bound(const SymMatrix& x);

/// Count of eigenvalues above rel_tol * max |eigenvalue|.
std::size_t numerical_rank(const EigenDecomposition& ed, double rel_tol = kRankTol);

}  // namespace specmono
