#include "specmono/orders.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace specmono {

PairOrder::PairOrder(std::size_t n, std::vector<std::uint32_t> rank_by_pair)
    : n_(n), rank_(std::move(rank_by_pair)) {
  if (n_ < 2) throw precondition_error("PairOrder: need at least 2 points");
  const std::size_t p = pair_count(n_);
  if (rank_.size() != p)
    throw precondition_error("PairOrder: expected " + std::to_string(p) + " ranks, got " +
                             std::to_string(rank_.size()));
  by_rank_.assign(p, 0);
  std::vector<bool> seen(p, false);
  for (std::size_t idx = 0; idx < p; ++idx) {
    const std::uint32_t r = rank_[idx];
    if (r >= p || seen[r]) throw precondition_error("PairOrder: ranks are not a bijection");
    seen[r] = true;
    by_rank_[r] = static_cast<std::uint32_t>(idx);
  }
}

PairOrder PairOrder::lexicographic(std::size_t n) {
  std::vector<std::uint32_t> ranks(pair_count(n));
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = static_cast<std::uint32_t>(i);
  return PairOrder(n, std::move(ranks));
}

PairOrder PairOrder::from_ranked_pairs(std::size_t n,
                                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  if (pairs.size() != pair_count(n))
    throw precondition_error("PairOrder: expected " + std::to_string(pair_count(n)) + " pairs");
  std::vector<std::uint32_t> ranks(pairs.size(), 0);
  std::vector<bool> seen(pairs.size(), false);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto [i, j] = pairs[r];
    if (i >= j || j >= n) throw precondition_error("PairOrder: bad pair in rank list");
    const std::size_t idx = pair_index(n, i, j);
    if (seen[idx]) throw precondition_error("PairOrder: duplicate pair in rank list");
    seen[idx] = true;
    ranks[idx] = static_cast<std::uint32_t>(r);
  }
  return PairOrder(n, std::move(ranks));
}

std::pair<std::uint32_t, std::uint32_t> PairOrder::pair_at_rank(std::size_t r) const {
  return pair_from_index(n_, by_rank_.at(r));
}

FiniteMetric::FiniteMetric(SymMatrix dist) : dist_(std::move(dist)) {
  const std::size_t n = dist_.order();
  if (!dist_.is_finite()) throw precondition_error("FiniteMetric: non-finite distance");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_(i, i) != 0.0) throw precondition_error("FiniteMetric: nonzero diagonal");
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist_(i, j) <= 0.0) throw precondition_error("FiniteMetric: non-positive distance");
  }
}

bool FiniteMetric::triangle_ok() const {
  const std::size_t n = dist_.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (dist_(i, j) > dist_(i, k) + dist_(k, j)) return false;
      }
  return true;
}

FiniteMetric epsilon_metric(const PairOrder& order, double eps_max) {
  if (!(eps_max > 0.0 && eps_max < 1.0))
    throw precondition_error("epsilon_metric: eps_max must lie in (0, 1)");
  const std::size_t n = order.n();
  const double p = static_cast<double>(order.num_pairs());
  SymMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d.set(i, j, 1.0 + eps_max * (static_cast<double>(order.rank(i, j)) + 1.0) / p);
  return FiniteMetric(std::move(d));
}

bool consistent(const FiniteMetric& metric, const PairOrder& order) {
  if (metric.n() != order.n()) throw precondition_error("consistent: point counts differ");
  const std::size_t n = metric.n();
  const std::size_t p = pair_count(n);
  std::vector<double> dist(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dist[pair_index(n, i, j)] = metric(i, j);
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = x + 1; y < p; ++y)
      if ((order.rank_at(x) < order.rank_at(y)) != (dist[x] < dist[y])) return false;
  return true;
}

PairOrder order_from_metric(const FiniteMetric& metric) {
  const std::size_t n = metric.n();
  const std::size_t p = pair_count(n);
  std::vector<std::uint32_t> idx(p);
  std::vector<double> dist(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) dist[pair_index(n, i, j)] = metric(i, j);
  for (std::size_t k = 0; k < p; ++k) idx[k] = static_cast<std::uint32_t>(k);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return dist[a] < dist[b]; });
  for (std::size_t r = 0; r + 1 < p; ++r) {
    if (dist[idx[r]] == dist[idx[r + 1]]) {
      const auto a = pair_from_index(n, idx[r]);
      const auto b = pair_from_index(n, idx[r + 1]);
      std::ostringstream msg;
      msg << "order_from_metric: tied distances for pairs (" << a.first << "," << a.second
          << ") and (" << b.first << "," << b.second << ")";
      throw precondition_error(msg.str());
    }
  }
  std::vector<std::uint32_t> ranks(p);
  for (std::size_t r = 0; r < p; ++r) ranks[idx[r]] = static_cast<std::uint32_t>(r);
  return PairOrder(n, std::move(ranks));
}

SymMatrix canonical_epsilon_matrix(const PairOrder& order) {
  const std::size_t n = order.n();
  const double denom = static_cast<double>(n) * (static_cast<double>(order.num_pairs()) + 1.0);
  SymMatrix eps(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      eps.set(i, j, (static_cast<double>(order.rank(i, j)) + 1.0) / denom);
  return eps;
}

void write_order_file(std::ostream& out, const PairOrder& order) {
  out << order.n() << '\n';
  for (std::size_t r = 0; r < order.num_pairs(); ++r) {
    const auto [i, j] = order.pair_at_rank(r);
    out << i << ' ' << j << '\n';
  }
}

PairOrder read_order_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("empty order file", 1);
  std::size_t n = 0;
  {
    std::istringstream hdr(line);
    char extra = 0;
    if (!(hdr >> n) || n < 2 || (hdr >> extra))
      throw parse_error("expected point count \"n\" (n >= 2)", 1);
  }
  const std::size_t p = pair_count(n);
  std::vector<std::uint32_t> ranks(p, 0);
  std::vector<bool> seen(p, false);
  for (std::size_t r = 0; r < p; ++r) {
    const std::size_t line_no = r + 2;
    if (!std::getline(in, line))
      throw parse_error("missing rank line (expected " + std::to_string(p) + " pairs)", line_no);
    std::istringstream row(line);
    long long i = -1, j = -1;
    char extra = 0;
    if (!(row >> i >> j) || (row >> extra)) throw parse_error("expected \"i j\"", line_no);
    if (i < 0 || j < 0 || static_cast<std::size_t>(j) >= n)
      throw parse_error("point index out of range", line_no);
    if (i == j) throw parse_error("pair with identical points", line_no);
    if (i > j) throw parse_error("pair not written as i < j", line_no);
    const std::size_t idx = pair_index(n, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (seen[idx]) throw parse_error("duplicate pair", line_no);
    seen[idx] = true;
    ranks[idx] = static_cast<std::uint32_t>(r);
  }
  return PairOrder(n, std::move(ranks));
}

}  // namespace specmono
