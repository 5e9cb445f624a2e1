#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "specmono/common.hpp"
#include "specmono/matrix.hpp"

namespace specmono {

/// Simple undirected graph on vertices 0 .. n-1.
class Graph {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  /// Edges may arrive in any orientation/order; they are normalized to u < v
  /// and sorted. Self-loops, duplicates and out-of-range indices throw.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& neighbors(std::size_t v) const { return adj_[v]; }

  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::size_t degree_min() const;
  std::size_t degree_max() const;
  bool is_regular() const { return n_ == 0 || degree_min() == degree_max(); }

  SymMatrix adjacency() const;
  bool is_connected() const;
  /// Breadth-first eccentricity maximum; absent for disconnected graphs.
  std::optional<std::size_t> diameter() const;
  /// Bipartition classes via 2-coloring, absent when an odd cycle exists.
  std::optional<std::vector<int>> two_coloring() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

// Generators.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
/// Vertices are all k-bit strings numbered by integer value; u ~ v iff
/// 1 <= HammingDistance(u, v) <= floor(k/2). Requires k >= 3.
Graph hamming_halfcube(unsigned k);
/// K_{m,m} minus the identity perfect matching. Requires m >= 2.
Graph bipartite_minus_matching(std::size_t m);
/// Block graph [[M, J-M], [J-M, M]] of a d-regular graph with d <= n/2:
/// both copies keep G's edges, u and n+v are adjacent iff u = v or
/// (u,v) is a non-edge of G. The result is n-regular on 2n vertices.
Graph double_graph(const Graph& g);

/// Exact integer Krawtchouk value K_s^(k)(i) = sum_j (-1)^j C(i,j) C(k-i, s-j).
long long krawtchouk(unsigned k, unsigned s, unsigned i);

/// Closed-form spectrum of hamming_halfcube(k) for odd k: weight-w characters
/// give eigenvalue K_{(k-1)/2}^(k-1)(w-1) - 1 with multiplicity C(k,w); the
/// identity generator is excluded from the graph, hence the -1 offset. The
/// weight-0 character gives the degree. Equal eigenvalues are merged.
std::vector<std::pair<long long, std::uint64_t>> hamming_spectrum_analytic(unsigned k);

struct SpectralSummary {
  std::vector<double> eigenvalues;  // descending
  std::size_t degree_min = 0;
  std::size_t degree_max = 0;
  bool is_regular = false;
  std::optional<std::size_t> regular_degree;
  std::optional<double> delta;  // degree / n when regular
  std::optional<std::size_t> diameter;
};

SpectralSummary spectral_summary(const Graph& g);

struct MixingCheck {
  std::size_t subset_size = 0;
  std::size_t internal_edges = 0;
  double bound = 0.0;  // k^2/4 + lambda2 * k / 2
  double lambda2 = 0.0;
  bool ok = false;
};

/// Edge-distribution bound for exactly n/2-regular graphs. Throws otherwise.
MixingCheck mixing_bound_check(const Graph& g, const std::vector<std::uint32_t>& subset);
MixingCheck mixing_bound_check(const Graph& g, const std::vector<std::uint32_t>& subset,
                               double lambda2);

struct MixingScan {
  std::size_t subsets_checked = 0;
  std::size_t violations = 0;
  double lambda2 = 0.0;
  double worst_slack = 0.0;  // max over subsets of e(U) - bound
  bool ok = false;
};

/// Checks every nonempty vertex subset. Requires n/2-regularity and n <= 24.
MixingScan mixing_scan(const Graph& g);

/// |E(g) symmetric-difference E(h)| under the given labeling.
std::size_t edge_edit_distance(const Graph& g, const Graph& h);

/// Text format: line 1 "n m", then m lines "u v" with u < v, sorted.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace specmono
