#include "specmono/recovery.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "specmono/json_writer.hpp"
#include "specmono/numerics.hpp"

namespace specmono {

RecoveryReport spectral_bipartite_recovery(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 4) throw precondition_error("spectral_bipartite_recovery: need n >= 4");
  if (!g.is_connected()) throw precondition_error("spectral_bipartite_recovery: graph is disconnected");

  const auto ed = eig_sym(g.adjacency());
  RecoveryReport r;
  r.n = n;
  r.lambda2 = ed.eigenvalues[1];
  r.lambda_n = ed.eigenvalues[n - 1];
  r.lambda_n_minus_1 = ed.eigenvalues[n - 2];
  r.lambda_n_gap = std::fabs(r.lambda_n + static_cast<double>(n) / 2.0);
  r.hoffman_value = ed.eigenvalues[0] + r.lambda_n_minus_1 + r.lambda_n;
  const double mult_tol = 1e-8 * (1.0 + std::fabs(r.lambda_n));
  r.eigen_multiplicity = 0;
  for (double l : ed.eigenvalues)
    if (std::fabs(l - r.lambda_n) <= mult_tol) ++r.eigen_multiplicity;

  // The sign convention of eig_sym already puts the largest-magnitude
  // coordinate at +1 after the sup-norm scaling.
  std::vector<double> x(n);
  double sup = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    x[v] = ed.eigenvectors(v, n - 1);
    sup = std::max(sup, std::fabs(x[v]));
  }
  for (auto& xv : x) xv /= sup;

  std::vector<int> side(n, -1);  // 0 = A, 1 = B, -1 = unassigned
  for (std::size_t v = 0; v < n; ++v) {
    if (x[v] >= 0.5) side[v] = 1;
    else if (x[v] <= -0.5) side[v] = 0;
    else r.leftover.push_back(static_cast<std::uint32_t>(v));
  }

  std::size_t size_a = 0, size_b = 0;
  for (int s : side) {
    if (s == 0) ++size_a;
    if (s == 1) ++size_b;
  }
  for (auto v : r.leftover) {
    std::size_t in_a = 0, in_b = 0;
    for (auto u : g.neighbors(v)) {
      if (side[u] == 0) ++in_a;
      if (side[u] == 1) ++in_b;
    }
    int pick;
    if (in_a != in_b) pick = in_a < in_b ? 0 : 1;
    else if (size_a != size_b) pick = size_a < size_b ? 0 : 1;
    else pick = 0;
    side[v] = pick;
    (pick == 0 ? size_a : size_b)++;
  }

  for (std::uint32_t v = 0; v < n; ++v)
    (side[v] == 0 ? r.side_a : r.side_b).push_back(v);

  // Edits against the complete bipartite graph on (side_a, side_b):
  // internal edges get deleted, missing cross pairs get added.
  r.per_vertex_edits.assign(n, 0);
  std::size_t cross_edges = 0;
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == side[v]) {
      ++r.total_edits;
      ++r.per_vertex_edits[u];
      ++r.per_vertex_edits[v];
    } else {
      ++cross_edges;
    }
  }
  r.total_edits += size_a * size_b - cross_edges;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t other = side[v] == 0 ? size_b : size_a;
    std::size_t cross_v = 0;
    for (auto u : g.neighbors(v))
      if (side[u] != side[v]) ++cross_v;
    r.per_vertex_edits[v] += other - cross_v;
  }
  return r;
}

double closeness_ratio(const Graph& g, const RecoveryReport& r) {
  if (g.n() != r.n) throw precondition_error("closeness_ratio: size mismatch");
  return static_cast<double>(r.total_edits) / (static_cast<double>(g.n()) * static_cast<double>(g.n()));
}

BruteForceResult brute_force_min_edits(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0 || n > 12) throw precondition_error("brute_force_min_edits: requires 1 <= n <= 12");

  std::vector<std::uint32_t> adj_mask(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj_mask[u] |= 1u << v;
    adj_mask[v] |= 1u << u;
  }
  const std::uint32_t all = (1u << n) - 1;

  auto edits_for = [&](std::uint32_t s) {
    const std::uint32_t t = all & ~s;
    const std::size_t ka = std::popcount(s), kb = std::popcount(t);
    std::size_t internal2 = 0, cross = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (s & (1u << u)) {
        internal2 += std::popcount(adj_mask[u] & s);
        cross += std::popcount(adj_mask[u] & t);
      } else {
        internal2 += std::popcount(adj_mask[u] & t);
      }
    }
    return internal2 / 2 + (ka * kb - cross);
  };

  auto vertex_list = [n](std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < n; ++v)
      if (mask & (1u << v)) out.push_back(v);
    return out;
  };
  auto lex_less = [&](std::uint32_t a, std::uint32_t b) {
    const auto la = vertex_list(a), lb = vertex_list(b);
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
  };

  std::uint32_t best_mask = 1;
  std::size_t best = edits_for(1);
  for (std::uint32_t high = 1; high < (1u << (n - 1)); ++high) {
    const std::uint32_t s = (high << 1) | 1u;  // vertex 0 always on side A
    const std::size_t e = edits_for(s);
    if (e < best || (e == best && lex_less(s, best_mask))) {
      best = e;
      best_mask = s;
    }
  }

  BruteForceResult res;
  res.min_edits = best;
  for (std::uint32_t v = 0; v < n; ++v)
    ((best_mask & (1u << v)) ? res.side_a : res.side_b).push_back(v);
  return res;
}

HoffmanDiagnostic hoffman_diagnostic(const Graph& g) {
  HoffmanDiagnostic h;
  h.is_bipartite = g.two_coloring().has_value();
  if (g.n() == 0) return h;
  const auto ev = eig_sym(g.adjacency()).eigenvalues;
  const std::size_t n = ev.size();
  h.lambda_n_minus_1 = n >= 2 ? ev[n - 2] : ev[0];
  h.hoffman_value = ev[0] + h.lambda_n_minus_1 + ev[n - 1];
  return h;
}

std::string recovery_report_json(const Graph& g, const RecoveryReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("n").value(r.n);
  w.key("sideA").begin_array();
  for (auto v : r.side_a) w.value(static_cast<std::uint64_t>(v));
  w.end_array();
  w.key("sideB").begin_array();
  for (auto v : r.side_b) w.value(static_cast<std::uint64_t>(v));
  w.end_array();
  w.key("total_edits").value(r.total_edits);
  w.key("per_vertex_edits").begin_array();
  for (auto e : r.per_vertex_edits) w.value(e);
  w.end_array();
  w.key("closeness_ratio").value(closeness_ratio(g, r));
  w.key("lambda2").value(r.lambda2);
  w.key("lambda_n").value(r.lambda_n);
  w.key("lambda_n_minus_1").value(r.lambda_n_minus_1);
  w.key("lambda_n_gap").value(r.lambda_n_gap);
  w.key("hoffman_value").value(r.hoffman_value);
  w.key("eigen_multiplicity").value(r.eigen_multiplicity);
  w.end_object();
  return w.str();
}

}  // namespace specmono
