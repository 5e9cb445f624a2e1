#include "specmono/certificates.hpp"

#include <algorithm>
#include <cmath>

#include "specmono/json_writer.hpp"
#include "specmono/numerics.hpp"

namespace specmono {

namespace {

struct RegularSpectrum {
  std::size_t degree;
  double lambda2;
};

// Degree and second eigenvalue, with a numeric guard on the Perron eigenvalue.
RegularSpectrum regular_spectrum(const Graph& g) {
  if (g.n() < 2) throw precondition_error("certificate: need at least 2 vertices");
  if (!g.is_regular()) throw precondition_error("certificate: graph must be regular");
  const std::size_t d = g.degree_min();
  const auto ev = eig_sym(g.adjacency()).eigenvalues;
  if (std::fabs(ev[0] - static_cast<double>(d)) > 1e-6)
    throw precondition_error("certificate: top eigenvalue differs from the degree");
  return {d, ev[1]};
}

Residuals compute_residuals(const DualCertificate& c, const Graph& g) {
  Residuals r;
  r.min_eigenvalue = eig_sym(c.a).eigenvalues.back();
  const std::size_t n = c.a.order();
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += c.a(i, j);
    r.max_row_sum = std::max(r.max_row_sum, std::fabs(row));
  }
  double worst = -1e300;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = c.a(i, j);
      double slack;  // positive when the constraint is violated
      if (c.kind == CertificateKind::margin)
        slack = g.has_edge(i, j) ? v : -v;  // edges need v <= 0, non-edges v >= 0
      else
        slack = g.has_edge(i, j) ? v + 1.0 : 1.0 - v;  // v <= -1 resp. v >= 1
      worst = std::max(worst, slack);
    }
  r.worst_sign_violation = worst == -1e300 ? 0.0 : worst;
  return r;
}

bool residuals_ok(const Residuals& r, const FeasibilityTolerances& tols) {
  return r.min_eigenvalue >= -tols.psd && r.max_row_sum <= tols.row_sum &&
         r.worst_sign_violation <= tols.sign;
}

// ceil with snapping: values within 1e-9 (relative) of an integer are taken
// as that integer, so eigenvalue noise cannot push an exact quotient up.
std::size_t ceil_snapped(double x) {
  const double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x)))
    return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::ceil(x));
}

}  // namespace

DualCertificate margin_certificate(const Graph& g, const FeasibilityTolerances& tols) {
  const auto [d, lambda2] = regular_spectrum(g);
  const std::size_t n = g.n();
  if (!(lambda2 > 2.0 / static_cast<double>(n)))
    throw precondition_error("margin_certificate: hypothesis lambda2 > 2/n violated");

  DualCertificate c;
  c.kind = CertificateKind::margin;
  c.n = n;
  c.degree = d;
  c.delta = static_cast<double>(d) / static_cast<double>(n);
  c.lambda2 = lambda2;
  const double beta = 1.0 / lambda2;
  c.beta = beta;
  c.alpha = beta * c.delta - 1.0 / static_cast<double>(n);

  c.a = SymMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.a.set(i, i, 1.0 + c.alpha);
    for (std::size_t j = i + 1; j < n; ++j)
      c.a.set(i, j, c.alpha - (g.has_edge(i, j) ? beta : 0.0));
  }

  double off_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off_abs += std::fabs(c.a(i, j));
  c.objective = c.a.trace() / off_abs;

  c.residuals = compute_residuals(c, g);
  c.feasible = residuals_ok(c.residuals, tols);
  return c;
}

MarginBound margin_bound_value(const DualCertificate& c) {
  if (c.kind != CertificateKind::margin)
    throw precondition_error("margin_bound_value: not a margin certificate");
  if (!c.feasible) throw precondition_error("margin_bound_value: certificate is infeasible");
  MarginBound b;
  b.ratio = c.objective;
  b.closed_form = 4.0 * (c.lambda2 + c.delta) / (c.delta * static_cast<double>(c.n));
  return b;
}

DualCertificate sphericity_certificate(const Graph& g, const FeasibilityTolerances& tols) {
  if (!g.is_connected()) throw precondition_error("sphericity_certificate: graph is disconnected");
  const auto [d, lambda2] = regular_spectrum(g);
  const std::size_t n = g.n();
  const double alpha = static_cast<double>(n) / (static_cast<double>(d) - lambda2);
  // hypothesis lambda2 >= d - n/2, i.e. alpha >= 2, with room for eigenvalue noise
  if (!(alpha >= 2.0 - 1e-9))
    throw precondition_error("sphericity_certificate: hypothesis lambda2 >= d - n/2 violated");

  DualCertificate c;
  c.kind = CertificateKind::sphericity;
  c.n = n;
  c.degree = d;
  c.delta = static_cast<double>(d) / static_cast<double>(n);
  c.lambda2 = lambda2;
  c.alpha = alpha;

  const double diag = alpha * static_cast<double>(d) - static_cast<double>(n) + 1.0;
  c.a = SymMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.a.set(i, i, diag);
    for (std::size_t j = i + 1; j < n; ++j)
      c.a.set(i, j, 1.0 - (g.has_edge(i, j) ? alpha : 0.0));
  }
  c.objective = 0.5 * c.a.trace();
  c.residuals = compute_residuals(c, g);
  c.feasible = residuals_ok(c.residuals, tols);
  return c;
}

Residuals verify_dual_feasibility(const DualCertificate& c, const Graph& g) {
  if (c.a.order() != g.n()) throw precondition_error("verify_dual_feasibility: size mismatch");
  return compute_residuals(c, g);
}

SphericityBound sphericity_lower_bound(const Graph& g, const FeasibilityTolerances& tols) {
  SphericityBound out;
  out.certificate = sphericity_certificate(g, tols);
  const auto diam = g.diameter();
  if (!diam) throw precondition_error("sphericity_lower_bound: infinite diameter");
  out.diameter = *diam;
  out.objective = out.certificate.objective;

  const double n = static_cast<double>(g.n());
  const double dd = static_cast<double>(out.diameter);
  // rank(breve(Gram)) >= n^2 / (n + 2 D^2 S*); the 2 converts the unordered-pair
  // program value to the ordered-pair sum, the -3 absorbs the breve rank slack.
  const double quotient = n * n / (n + 2.0 * dd * dd * out.objective);
  const std::size_t raw = ceil_snapped(quotient);
  out.bound = raw > 4 ? raw - 3 : 1;
  return out;
}

namespace {

void residuals_json(JsonWriter& w, const Residuals& r) {
  w.begin_object();
  w.key("psd").value(r.min_eigenvalue);
  w.key("rowsum").value(r.max_row_sum);
  w.key("sign").value(r.worst_sign_violation);
  w.end_object();
}

}  // namespace

std::string certificate_report_json(const DualCertificate& c, const MarginBound& bound) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("margin");
  w.key("n").value(c.n);
  w.key("d").value(c.degree);
  w.key("lambda2").value(c.lambda2);
  w.key("alpha").value(c.alpha);
  w.key("beta").value(c.beta.value_or(0.0));
  w.key("objective").value(c.objective);
  w.key("residuals");
  residuals_json(w, c.residuals);
  w.key("bound").value(bound.closed_form);
  w.end_object();
  return w.str();
}

std::string certificate_report_json(const SphericityBound& b) {
  const DualCertificate& c = b.certificate;
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("sphericity");
  w.key("n").value(c.n);
  w.key("d").value(c.degree);
  w.key("lambda2").value(c.lambda2);
  w.key("alpha").value(c.alpha);
  w.key("objective").value(c.objective);
  w.key("residuals");
  residuals_json(w, c.residuals);
  w.key("bound").value(b.bound);
  w.key("diameter").value(b.diameter);
  w.end_object();
  return w.str();
}

}  // namespace specmono
