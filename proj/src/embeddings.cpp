#include "specmono/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "specmono/numerics.hpp"

namespace specmono {

Embedding monotone_embed_l2(const PairOrder& order) {
  const std::size_t n = order.n();
  const SymMatrix eps = canonical_epsilon_matrix(order);
  SymMatrix gram = SymMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gram.set(i, j, -eps(i, j));
  // Row sums of eps stay below 1, so I - eps is positive definite and the
  // factorization keeps the full dimension n.
  return gram_factor(gram);
}

MonotoneCheck verify_monotone(const Embedding& e, const PairOrder& order, Norm norm) {
  if (e.n != order.n()) throw precondition_error("verify_monotone: point counts differ");
  const std::size_t n = e.n;
  const std::size_t p = pair_count(n);
  std::vector<double> dist(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      dist[pair_index(n, i, j)] =
          norm == Norm::euclidean ? squared_distance(e, i, j) : max_norm_distance(e, i, j);

  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = x + 1; y < p; ++y) {
      if ((order.rank_at(x) < order.rank_at(y)) == (dist[x] < dist[y])) continue;
      const auto a = pair_from_index(n, x);
      const auto b = pair_from_index(n, y);
      MonotoneCheck c;
      c.ok = false;
      c.violation = {{a.first, a.second}, {b.first, b.second}};
      return c;
    }
  return {};
}

MarginReport verify_spherical(const Embedding& e, const Graph& g) {
  if (e.n != g.n()) throw precondition_error("verify_spherical: point counts differ");
  MarginReport r;
  for (std::size_t i = 0; i < e.n; ++i)
    for (std::size_t j = i + 1; j < e.n; ++j) {
      const double sq = squared_distance(e, i, j);
      if (g.has_edge(i, j)) {
        if (!r.a || sq > *r.a) r.a = sq;
      } else {
        if (!r.b || sq < *r.b) r.b = sq;
      }
    }
  r.feasible = (!r.a || *r.a < 1.0) && (!r.b || *r.b > 1.0);
  if (r.a && r.b) {
    r.margin = std::min(1.0 - *r.a, *r.b - 1.0);
    r.gap = *r.b - *r.a;
  } else if (r.a) {
    r.margin = 1.0 - *r.a;
  } else if (r.b) {
    r.margin = *r.b - 1.0;
  }
  return r;
}

PairOrder linf_hard_instance(std::size_t n) {
  if (n < 1) throw precondition_error("linf_hard_instance: need n >= 1");
  const std::size_t points = 2 * n + 2;
  const std::size_t p = pair_count(points);
  const std::size_t designated = n + 1;
  std::vector<std::uint32_t> ranks(p);
  std::uint32_t low = 0;
  std::uint32_t high = static_cast<std::uint32_t>(p - designated);
  for (std::size_t i = 0; i < points; ++i)
    for (std::size_t j = i + 1; j < points; ++j) {
      const bool within_pair = (i % 2 == 0) && (j == i + 1);
      ranks[pair_index(points, i, j)] = within_pair ? high++ : low++;
    }
  return PairOrder(points, std::move(ranks));
}

PairOrder norm_hard_instance(std::size_t n, std::size_t base, std::size_t cap) {
  if (n < 1) throw precondition_error("norm_hard_instance: need n >= 1");
  if (base < 2) throw precondition_error("norm_hard_instance: base must be >= 2");
  std::size_t points = 1;  // base^n + 1, with overflow guard against the cap
  for (std::size_t t = 0; t < n; ++t) {
    if (points > cap / base + 1)
      throw precondition_error("norm_hard_instance: point count exceeds cap " + std::to_string(cap));
    points *= base;
  }
  points += 1;
  if (points > cap)
    throw precondition_error("norm_hard_instance: point count " + std::to_string(points) +
                             " exceeds cap " + std::to_string(cap));
  const std::size_t p = pair_count(points);
  std::vector<std::uint32_t> ranks(p);
  std::uint32_t low = 0;                                      // pairs touching point 0
  std::uint32_t high = static_cast<std::uint32_t>(points - 1);  // everything else
  for (std::size_t i = 0; i < points; ++i)
    for (std::size_t j = i + 1; j < points; ++j)
      ranks[pair_index(points, i, j)] = (i == 0) ? low++ : high++;
  return PairOrder(points, std::move(ranks));
}

BigInt milnor_thom_bound(std::size_t m, std::size_t k, std::size_t d, std::size_t l) {
  if (k < 1 || k > m) throw precondition_error("milnor_thom_bound: need 1 <= k <= m");
  if (d < 1 || l < 1) throw precondition_error("milnor_thom_bound: need d, l >= 1");
  const std::size_t exponent = l - 1 + (m + k - 1) / k;  // ceil(l + m/k - 1)
  const BigInt base = BigInt(4) * k * d - 1;
  BigInt value = BigInt(2) * k * d;
  BigInt power = 1;
  BigInt sq = base;
  std::size_t e = exponent;
  while (e) {
    if (e & 1) power *= sq;
    sq *= sq;
    e >>= 1;
  }
  return value * power;
}

namespace {

// splitmix64: mixes (seed, trial) into an independent per-trial stream key.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct TrialRng {
  std::uint64_t state;
  TrialRng(std::uint64_t seed, std::uint64_t trial) : state(mix64(seed) ^ mix64(trial * 0x9e3779b97f4a7c15ull + 1)) {}
  std::uint64_t next() {
    state = mix64(state);
    return state;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

OrderSampleResult count_realized_orders_mc(std::size_t n, std::size_t d, std::size_t trials,
                                           std::uint64_t seed) {
  if (n < 3 || d < 1 || trials < 1)
    throw precondition_error("count_realized_orders_mc: need n >= 3, d >= 1, trials >= 1");
  const std::size_t p = pair_count(n);

  using OrderKey = std::vector<std::uint32_t>;
  struct Partial {
    std::set<OrderKey> orders;
    std::size_t rejected = 0;
  };
  const std::size_t chunk = 256;
  const std::size_t chunks = (trials + chunk - 1) / chunk;
  std::vector<Partial> parts(chunks);

  for_each_chunk(trials, chunk, [&](std::size_t c, std::size_t begin, std::size_t end) {
    Partial part;
    std::vector<double> coords(n * d);
    std::vector<std::uint32_t> srt(n);
    std::vector<double> dist(p);
    std::vector<std::uint32_t> perm(p);
    for (std::size_t trial = begin; trial < end; ++trial) {
      TrialRng rng(seed, trial);
      for (auto& x : coords) x = rng.uniform();
      // canonical labeling: points sorted lexicographically by coordinates,
      // so relabeled copies of one configuration induce one order
      std::iota(srt.begin(), srt.end(), 0u);
      std::sort(srt.begin(), srt.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(coords.begin() + a * d, coords.begin() + (a + 1) * d,
                                            coords.begin() + b * d, coords.begin() + (b + 1) * d);
      });
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          double s = 0.0;
          for (std::size_t t = 0; t < d; ++t) {
            const double diff = coords[srt[i] * d + t] - coords[srt[j] * d + t];
            s += diff * diff;
          }
          dist[pair_index(n, i, j)] = s;
        }
      std::iota(perm.begin(), perm.end(), 0u);
      std::sort(perm.begin(), perm.end(),
                [&](std::uint32_t a, std::uint32_t b) { return dist[a] < dist[b]; });
      bool tied = false;
      for (std::size_t r = 0; r + 1 < p; ++r) {
        const double lo = dist[perm[r]], hi = dist[perm[r + 1]];
        if (hi - lo < 1e-9 * std::max(hi, 1e-300)) {
          tied = true;
          break;
        }
      }
      if (tied) {
        ++part.rejected;
        continue;
      }
      part.orders.insert(perm);
    }
    parts[c] = std::move(part);
  });

  std::set<OrderKey> all;
  OrderSampleResult res;
  for (auto& part : parts) {
    res.rejected += part.rejected;
    all.merge(part.orders);
  }
  res.distinct = all.size();
  return res;
}

BigInt realized_orders_ceiling(std::size_t n, std::size_t d) {
  const std::size_t m = pair_count(pair_count(n));
  const std::size_t l = n * d;
  BigInt best = milnor_thom_bound(m, 1, 2, l);
  for (std::size_t k = 2; k <= m; ++k) best = std::min(best, milnor_thom_bound(m, k, 2, l));
  return best;
}

}  // namespace specmono
