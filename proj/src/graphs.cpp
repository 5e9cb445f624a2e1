#include "specmono/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "specmono/numerics.hpp"

namespace specmono {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw precondition_error("Graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (v >= n_) throw precondition_error("Graph: vertex index " + std::to_string(v) + " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw precondition_error("Graph: duplicate edge");
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  if (u == v) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(v));
}

std::size_t Graph::degree_min() const {
  std::size_t m = adj_.empty() ? 0 : adj_[0].size();
  for (const auto& list : adj_) m = std::min(m, list.size());
  return m;
}

std::size_t Graph::degree_max() const {
  std::size_t m = 0;
  for (const auto& list : adj_) m = std::max(m, list.size());
  return m;
}

SymMatrix Graph::adjacency() const {
  SymMatrix m(n_);
  for (const auto& [u, v] : edges_) m.set(u, v, 1.0);
  return m;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : adj_[u])
      if (!seen[v]) {
        seen[v] = true;
        ++visited;
        queue.push_back(v);
      }
  }
  return visited == n_;
}

std::optional<std::size_t> Graph::diameter() const {
  if (n_ <= 1) return 0;
  std::size_t diam = 0;
  std::vector<std::int64_t> dist(n_);
  for (std::uint32_t s = 0; s < n_; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<std::uint32_t> queue{s};
    dist[s] = 0;
    std::size_t visited = 1;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : adj_[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          ++visited;
          queue.push_back(v);
        }
    }
    if (visited != n_) return std::nullopt;
    for (auto d : dist) diam = std::max(diam, static_cast<std::size_t>(d));
  }
  return diam;
}

std::optional<std::vector<int>> Graph::two_coloring() const {
  std::vector<int> color(n_, -1);
  for (std::uint32_t s = 0; s < n_; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<std::uint32_t> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : adj_[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw precondition_error("complete_bipartite: sides must be nonempty");
  std::vector<Graph::Edge> edges;
  edges.reserve(a * b);
  for (std::uint32_t i = 0; i < a; ++i)
    for (std::uint32_t j = 0; j < b; ++j) edges.emplace_back(i, static_cast<std::uint32_t>(a + j));
  return Graph(a + b, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw precondition_error("cycle: need at least 3 vertices");
  std::vector<Graph::Edge> edges;
  edges.reserve(n);
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<std::uint32_t>(n - 1));
  return Graph(n, std::move(edges));
}

Graph hamming_halfcube(unsigned k) {
  if (k < 3) throw precondition_error("hamming_halfcube: need k >= 3");
  if (k > 20) throw precondition_error("hamming_halfcube: k too large");
  const std::uint32_t size = 1u << k;
  const unsigned threshold = k / 2;
  std::vector<Graph::Edge> edges;
  for (std::uint32_t u = 0; u < size; ++u)
    for (std::uint32_t v = u + 1; v < size; ++v) {
      const unsigned h = std::popcount(u ^ v);
      if (h >= 1 && h <= threshold) edges.emplace_back(u, v);
    }
  return Graph(size, std::move(edges));
}

Graph bipartite_minus_matching(std::size_t m) {
  if (m < 2) throw precondition_error("bipartite_minus_matching: need m >= 2");
  std::vector<Graph::Edge> edges;
  edges.reserve(m * (m - 1));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      if (i != j) edges.emplace_back(i, static_cast<std::uint32_t>(m + j));
  return Graph(2 * m, std::move(edges));
}

Graph double_graph(const Graph& g) {
  if (!g.is_regular()) throw precondition_error("double_graph: input must be regular");
  const std::size_t n = g.n();
  const std::size_t d = g.degree_min();
  if (2 * d > n) throw precondition_error("double_graph: requires degree <= n/2");
  std::vector<Graph::Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(static_cast<std::uint32_t>(n + u), static_cast<std::uint32_t>(n + v));
  }
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (u == v || !g.has_edge(u, v)) edges.emplace_back(u, static_cast<std::uint32_t>(n + v));
  return Graph(2 * n, std::move(edges));
}

namespace {

long long binomial_ll(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  long long acc = 1;
  for (unsigned t = 1; t <= r; ++t) acc = acc * static_cast<long long>(n - r + t) / t;
  return acc;
}

}  // namespace

long long krawtchouk(unsigned k, unsigned s, unsigned i) {
  if (s > k || i > k) throw precondition_error("krawtchouk: need 0 <= s, i <= k");
  long long acc = 0;
  for (unsigned j = 0; j <= s; ++j) {
    const long long term = binomial_ll(i, j) * binomial_ll(k - i, s - j);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

std::vector<std::pair<long long, std::uint64_t>> hamming_spectrum_analytic(unsigned k) {
  if (k < 3 || k % 2 == 0)
    throw precondition_error("hamming_spectrum_analytic: k must be odd and >= 3");
  const unsigned half = (k - 1) / 2;
  std::vector<std::pair<long long, std::uint64_t>> spec;
  long long degree = 0;
  for (unsigned s = 1; s <= half; ++s) degree += binomial_ll(k, s);
  spec.emplace_back(degree, 1);
  for (unsigned w = 1; w <= k; ++w)
    spec.emplace_back(krawtchouk(k - 1, half, w - 1) - 1,
                      static_cast<std::uint64_t>(binomial_ll(k, w)));
  std::sort(spec.begin(), spec.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<long long, std::uint64_t>> merged;
  for (const auto& [val, mult] : spec) {
    if (!merged.empty() && merged.back().first == val)
      merged.back().second += mult;
    else
      merged.emplace_back(val, mult);
  }
  return merged;
}

SpectralSummary spectral_summary(const Graph& g) {
  SpectralSummary s;
  s.eigenvalues = eig_sym(g.adjacency()).eigenvalues;
  s.degree_min = g.degree_min();
  s.degree_max = g.degree_max();
  s.is_regular = g.is_regular();
  if (s.is_regular && g.n() > 0) {
    s.regular_degree = s.degree_min;
    s.delta = static_cast<double>(s.degree_min) / static_cast<double>(g.n());
  }
  s.diameter = g.diameter();
  return s;
}

namespace {

void require_half_regular(const Graph& g) {
  if (g.n() == 0 || g.n() % 2 != 0 || !g.is_regular() || g.degree_min() * 2 != g.n())
    throw precondition_error("mixing bound: graph must be exactly n/2-regular");
}

double second_eigenvalue(const Graph& g) {
  const auto ev = eig_sym(g.adjacency()).eigenvalues;
  if (ev.size() < 2) throw precondition_error("mixing bound: need at least 2 vertices");
  return ev[1];
}

}  // namespace

MixingCheck mixing_bound_check(const Graph& g, const std::vector<std::uint32_t>& subset,
                               double lambda2) {
  require_half_regular(g);
  if (subset.empty()) throw precondition_error("mixing bound: empty subset");
  std::vector<bool> in(g.n(), false);
  for (auto v : subset) {
    if (v >= g.n()) throw precondition_error("mixing bound: vertex out of range");
    if (in[v]) throw precondition_error("mixing bound: duplicate vertex in subset");
    in[v] = true;
  }
  MixingCheck c;
  c.subset_size = subset.size();
  c.lambda2 = lambda2;
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) ++c.internal_edges;
  const double k = static_cast<double>(c.subset_size);
  c.bound = 0.25 * k * k + 0.5 * lambda2 * k;
  c.ok = static_cast<double>(c.internal_edges) <= c.bound + 1e-8;
  return c;
}

MixingCheck mixing_bound_check(const Graph& g, const std::vector<std::uint32_t>& subset) {
  require_half_regular(g);
  return mixing_bound_check(g, subset, second_eigenvalue(g));
}

MixingScan mixing_scan(const Graph& g) {
  require_half_regular(g);
  const std::size_t n = g.n();
  if (n > 24) throw precondition_error("mixing_scan: exhaustive scan limited to n <= 24");
  const double lambda2 = second_eigenvalue(g);

  std::vector<std::uint32_t> adj_mask(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj_mask[u] |= 1u << v;
    adj_mask[v] |= 1u << u;
  }

  const std::size_t total = (std::size_t{1} << n) - 1;  // masks 1 .. 2^n - 1
  const std::size_t chunk = 1 << 12;
  const std::size_t chunks = (total + chunk - 1) / chunk;
  struct Partial {
    std::size_t violations = 0;
    double worst = -1e300;
  };
  std::vector<Partial> parts(chunks);

  for_each_chunk(total, chunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Partial p;
    for (std::size_t off = begin; off < end; ++off) {
      const std::uint32_t mask = static_cast<std::uint32_t>(off + 1);
      const double k = static_cast<double>(std::popcount(mask));
      std::size_t internal = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (mask & (1u << u)) internal += std::popcount(adj_mask[u] & mask);
      internal /= 2;
      const double bound = 0.25 * k * k + 0.5 * lambda2 * k;
      const double slack = static_cast<double>(internal) - bound;
      p.worst = std::max(p.worst, slack);
      if (slack > 1e-8) ++p.violations;
    }
    parts[c] = p;
  });

  MixingScan scan;
  scan.subsets_checked = total;
  scan.lambda2 = lambda2;
  scan.worst_slack = -1e300;
  for (const auto& p : parts) {
    scan.violations += p.violations;
    scan.worst_slack = std::max(scan.worst_slack, p.worst);
  }
  scan.ok = scan.violations == 0;
  return scan;
}

std::size_t edge_edit_distance(const Graph& g, const Graph& h) {
  if (g.n() != h.n()) throw precondition_error("edge_edit_distance: vertex counts differ");
  std::size_t common = 0;
  auto it_g = g.edges().begin();
  auto it_h = h.edges().begin();
  while (it_g != g.edges().end() && it_h != h.edges().end()) {
    if (*it_g == *it_h) {
      ++common;
      ++it_g;
      ++it_h;
    } else if (*it_g < *it_h) {
      ++it_g;
    } else {
      ++it_h;
    }
  }
  return g.num_edges() + h.num_edges() - 2 * common;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty edge-list file", 1);
  std::size_t n = 0, m = 0;
  {
    std::istringstream hdr(line);
    char extra = 0;
    if (!(hdr >> n >> m) || (hdr >> extra)) throw parse_error("expected header \"n m\"", 1);
  }
  std::vector<Graph::Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t line_no = e + 2;
    if (!std::getline(in, line))
      throw parse_error("missing edge line (expected " + std::to_string(m) + " edges)", line_no);
    std::istringstream row(line);
    long long u = -1, v = -1;
    char extra = 0;
    if (!(row >> u >> v) || (row >> extra)) throw parse_error("expected \"u v\"", line_no);
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw parse_error("vertex index out of range", line_no);
    if (u == v) throw parse_error("self-loop", line_no);
    if (u > v) throw parse_error("edge not written as u < v", line_no);
    const Graph::Edge edge{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)};
    if (!edges.empty() && !(edges.back() < edge))
      throw parse_error(edges.back() == edge ? "duplicate edge" : "edges not in lexicographic order",
                        line_no);
    edges.push_back(edge);
  }
  return Graph(n, std::move(edges));
}

}  // namespace specmono
