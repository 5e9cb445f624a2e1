#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "specmono/graphs.hpp"
#include "specmono/matrix.hpp"

namespace specmono {

enum class CertificateKind { margin, sphericity };

struct FeasibilityTolerances {
  double psd = 1e-8;      // lambda_min(A) >= -psd
  double row_sum = 1e-9;  // |sum_j A_ij| <= row_sum
  double sign = 1e-9;     // per-kind sign constraints within this slack
};

struct Residuals {
  double min_eigenvalue = 0.0;
  double max_row_sum = 0.0;
  double worst_sign_violation = 0.0;  // positive means a constraint is broken
};

/// Explicit dual-feasible matrix certifying a margin upper bound
/// (A = I + alpha J - beta M) or a sphericity lower bound
/// (A = (alpha d - n) I + J - alpha M).
struct DualCertificate {
  CertificateKind kind = CertificateKind::margin;
  std::size_t n = 0;
  std::size_t degree = 0;
  double delta = 0.0;  // degree / n
  double lambda2 = 0.0;
  double alpha = 0.0;
  std::optional<double> beta;  // margin kind only
  SymMatrix a{0};
  /// margin: tr A / sum_{i != j} |A_ij|; sphericity: S* = tr A / 2.
  double objective = 0.0;
  Residuals residuals;
  bool feasible = false;
};

/// Requires a regular graph with lambda2 > 2/n. Sets beta = 1/lambda2 and
/// alpha = beta * delta - 1/n.
DualCertificate margin_certificate(const Graph& g, const FeasibilityTolerances& tols = {});

struct MarginBound {
  double ratio = 0.0;        // tr A / sum_{i != j} |A_ij|, an upper bound on the margin
  double closed_form = 0.0;  // 4 (lambda2 + delta) / (delta n)
};

MarginBound margin_bound_value(const DualCertificate& c);

/// Requires a connected regular graph with lambda2 >= d - n/2 (alpha >= 2,
/// alpha = n / (d - lambda2)).
DualCertificate sphericity_certificate(const Graph& g, const FeasibilityTolerances& tols = {});

/// Reports residuals without throwing; feasibility is judged by the caller's
/// tolerances.
Residuals verify_dual_feasibility(const DualCertificate& c, const Graph& g);

struct SphericityBound {
  std::size_t bound = 0;  // max(1, ceil(n^2 / (n + 2 D^2 S*)) - 3)
  DualCertificate certificate;
  std::size_t diameter = 0;
  double objective = 0.0;  // S*
};

SphericityBound sphericity_lower_bound(const Graph& g, const FeasibilityTolerances& tols = {});

/// JSON with fixed key order:
/// {kind, n, d, lambda2, alpha, beta?, objective, residuals{psd, rowsum, sign}, bound?, diameter?}
std::string certificate_report_json(const DualCertificate& c, const MarginBound& bound);
std::string certificate_report_json(const SphericityBound& b);

}  // namespace specmono
