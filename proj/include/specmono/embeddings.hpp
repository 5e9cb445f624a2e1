#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "specmono/embedding.hpp"
#include "specmono/graphs.hpp"
#include "specmono/orders.hpp"

namespace specmono {

using BigInt = boost::multiprecision::cpp_int;

enum class Norm { euclidean, max };

/// Unit-sphere embedding realizing `order`: factor I - eps with eps from
/// canonical_epsilon_matrix, so ||v_i - v_j||^2 = 2 + 2 eps_ij.
Embedding monotone_embed_l2(const PairOrder& order);

struct MonotoneCheck {
  bool ok = true;
  /// Lexicographically first violating pair-of-pairs when !ok.
  std::optional<std::pair<std::array<std::uint32_t, 2>, std::array<std::uint32_t, 2>>> violation;
};

/// Exhaustive scan of all C(C(n,2),2) distance comparisons.
MonotoneCheck verify_monotone(const Embedding& e, const PairOrder& order,
                              Norm norm = Norm::euclidean);

struct MarginReport {
  std::optional<double> a;  // max squared edge distance; absent without edges
  std::optional<double> b;  // min squared non-edge distance; absent without non-edges
  bool feasible = false;    // a < 1 < b, judged on the present sides
  std::optional<double> margin;  // min(1-a, b-1) over the present sides
  std::optional<double> gap;     // b - a when both sides exist
};

/// Does `e` realize g as a proximity graph at threshold 1?
MarginReport verify_spherical(const Embedding& e, const Graph& g);

/// Order on 2n+2 points arranged in n+1 pairs (2i, 2i+1) whose within-pair
/// distances occupy the top n+1 ranks; everything else is filled
/// lexicographically. A linear extension of the l_inf lower-bound instance.
PairOrder linf_hard_instance(std::size_t n);

/// Order on base^n + 1 points where every pair containing point 0 ranks below
/// all other pairs; the packing instance that defeats any n-dimensional norm.
PairOrder norm_hard_instance(std::size_t n, std::size_t base = 5, std::size_t cap = 3126);

/// Sign-pattern bound 2kd * (4kd - 1)^ceil(l + m/k - 1) for m polynomials of
/// degree d in l variables, exact in big integers. Requires 1 <= k <= m.
BigInt milnor_thom_bound(std::size_t m, std::size_t k, std::size_t d, std::size_t l);

struct OrderSampleResult {
  std::size_t distinct = 0;
  std::size_t rejected = 0;
};

/// Samples `trials` point sets uniformly from [0,1]^(n x d) and counts the
/// distinct induced distance orders, after relabeling each sample into the
/// canonical (lexicographically sorted) point order. Samples with a relative
/// distance gap below 1e-9 are rejected. Each trial's RNG stream is derived
/// from (seed, trial index), so results do not depend on the parallelism
/// degree.
OrderSampleResult count_realized_orders_mc(std::size_t n, std::size_t d, std::size_t trials,
                                           std::uint64_t seed);

/// The sampler's ceiling instantiated for l_2^d and n points: C(C(n,2),2)
/// difference-of-squared-distance polynomials of degree 2 in n*d variables,
/// minimized over the free parameter k.
BigInt realized_orders_ceiling(std::size_t n, std::size_t d);

}  // namespace specmono
