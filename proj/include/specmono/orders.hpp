#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "specmono/common.hpp"
#include "specmono/matrix.hpp"

namespace specmono {

/// A strict linear order on the unordered point pairs of [n]: a bijection
/// from pairs to ranks 0 .. C(n,2)-1 (rank 0 = smallest distance).
class PairOrder {
 public:
  /// rank_by_pair is indexed by pair_index(n, i, j) and must be a permutation
  /// of 0 .. C(n,2)-1.
  PairOrder(std::size_t n, std::vector<std::uint32_t> rank_by_pair);

  /// Pair (i,j) ranked before (k,l) iff (i,j) < (k,l) lexicographically.
  static PairOrder lexicographic(std::size_t n);
  static PairOrder from_ranked_pairs(std::size_t n,
                                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

  std::size_t n() const { return n_; }
  std::size_t num_pairs() const { return rank_.size(); }
  std::uint32_t rank(std::size_t i, std::size_t j) const { return rank_[pair_index(n_, i, j)]; }
  std::uint32_t rank_at(std::size_t pair_idx) const { return rank_[pair_idx]; }
  std::pair<std::uint32_t, std::uint32_t> pair_at_rank(std::size_t r) const;
  const std::vector<std::uint32_t>& ranks() const { return rank_; }

  bool operator==(const PairOrder&) const = default;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> rank_;     // pair index -> rank
  std::vector<std::uint32_t> by_rank_;  // rank -> pair index
};

/// Distance matrix on n points: zero diagonal, positive off-diagonal entries.
class FiniteMetric {
 public:
  explicit FiniteMetric(SymMatrix dist);

  std::size_t n() const { return dist_.order(); }
  double operator()(std::size_t i, std::size_t j) const { return dist_(i, j); }
  const SymMatrix& matrix() const { return dist_; }

  /// Exhaustive triangle-inequality scan over all ordered triples.
  bool triangle_ok() const;

 private:
  SymMatrix dist_;
};

/// The standard epsilon-construction: delta(i,j) = 1 + eps_max * (rank+1)/C(n,2).
/// Requires 0 < eps_max < 1; the result is consistent with `order` and always
/// satisfies the triangle inequality (all distances lie in (1, 2)).
FiniteMetric epsilon_metric(const PairOrder& order, double eps_max);

/// True iff every pair-of-pairs comparison of distances agrees with the order.
bool consistent(const FiniteMetric& metric, const PairOrder& order);

/// Ranks pairs by distance. Throws naming the two pairs on a tied distance.
PairOrder order_from_metric(const FiniteMetric& metric);

/// eps_ij = (rank(i,j)+1) / (n * (C(n,2)+1)): zero diagonal, strictly
/// increasing in rank, every entry in (0, 1/n), so all row sums stay below 1.
SymMatrix canonical_epsilon_matrix(const PairOrder& order);

/// Text format: line 1 "n", then C(n,2) lines "i j" in increasing rank order.
void write_order_file(std::ostream& out, const PairOrder& order);
PairOrder read_order_file(std::istream& in);

}  // namespace specmono
