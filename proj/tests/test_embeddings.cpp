#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include "specmono/embeddings.hpp"
#include "specmono/numerics.hpp"

using namespace specmono;

namespace {

PairOrder random_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> ranks(pair_count(n));
  std::iota(ranks.begin(), ranks.end(), 0u);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return PairOrder(n, std::move(ranks));
}

Embedding line_points() {
  Embedding e;
  e.n = 3;
  e.d = 1;
  e.coords = Matrix(3, 1);
  e.coords(0, 0) = 0.0;
  e.coords(1, 0) = 1.0;
  e.coords(2, 0) = 3.0;
  return e;
}

/// Binary-string coordinates of the k-cube scaled by sqrt(2/k), so squared
/// distances are (2/k) * HammingDistance.
Embedding scaled_hamming_embedding(unsigned k) {
  const std::size_t n = std::size_t{1} << k;
  Embedding e;
  e.n = n;
  e.d = k;
  e.coords = Matrix(n, k);
  const double s = std::sqrt(2.0 / static_cast<double>(k));
  for (std::size_t v = 0; v < n; ++v)
    for (unsigned bit = 0; bit < k; ++bit) e.coords(v, bit) = (v >> bit & 1u) ? s : 0.0;
  return e;
}

}  // namespace

TEST_CASE("monotone_embed_l2 realizes the canonical epsilon distances") {
  const auto order = PairOrder::lexicographic(3);
  const auto e = monotone_embed_l2(order);
  CHECK(e.d <= 3);
  CHECK(squared_distance(e, 0, 1) == doctest::Approx(13.0 / 6.0).epsilon(1e-12));
  CHECK(squared_distance(e, 0, 2) == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
  CHECK(squared_distance(e, 1, 2) == doctest::Approx(5.0 / 2.0).epsilon(1e-12));
  CHECK(verify_monotone(e, order).ok);

  const auto e2 = monotone_embed_l2(PairOrder::lexicographic(2));
  CHECK(squared_distance(e2, 0, 1) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("monotone_embed_l2 places every point on the unit sphere") {
  std::mt19937_64 rng(101);
  for (std::size_t n : {2, 6, 13}) {
    const auto e = monotone_embed_l2(random_order(n, rng));
    for (std::size_t i = 0; i < n; ++i) {
      double norm_sq = 0.0;
      for (std::size_t k = 0; k < e.d; ++k) norm_sq += e.coords(i, k) * e.coords(i, k);
      CHECK(std::fabs(norm_sq - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("monotone_embed_l2 matches 2 + 2 eps entrywise and verifies monotone") {
  std::mt19937_64 rng(2025);
  for (std::size_t n : {5, 10, 15}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto order = random_order(n, rng);
      const auto eps = canonical_epsilon_matrix(order);
      const auto e = monotone_embed_l2(order);
      CHECK(e.d <= n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          CHECK(std::fabs(squared_distance(e, i, j) - (2.0 + 2.0 * eps(i, j))) <= 1e-9);
      CHECK(verify_monotone(e, order).ok);
    }
  }
}

TEST_CASE("verify_monotone on collinear points") {
  // order (0,1) < (1,2) < (0,2) matches distances 1 < 2 < 3
  const PairOrder order(3, {0, 2, 1});
  CHECK(verify_monotone(line_points(), order).ok);

  const PairOrder reversed(3, {2, 0, 1});
  const auto check = verify_monotone(line_points(), reversed);
  CHECK_FALSE(check.ok);
  REQUIRE(check.violation.has_value());
  CHECK(check.violation->first == std::array<std::uint32_t, 2>{0, 1});
  CHECK(check.violation->second == std::array<std::uint32_t, 2>{0, 2});
}

TEST_CASE("verify_monotone flags tied distances") {
  Embedding e;
  e.n = 3;
  e.d = 1;
  e.coords = Matrix(3, 1);
  e.coords(0, 0) = 0.0;
  e.coords(1, 0) = 1.0;
  e.coords(2, 0) = 2.0;  // d(0,1) == d(1,2)
  CHECK_FALSE(verify_monotone(e, PairOrder::lexicographic(3)).ok);
}

TEST_CASE("verify_monotone in the max norm") {
  std::mt19937_64 rng(313);
  const auto order = random_order(4, rng);
  const auto e = monotone_embed_l2(order);
  // max-norm distances of this embedding need not respect the order, but the
  // checker itself must agree with a direct scan
  const auto check = verify_monotone(e, order, Norm::max);
  bool expect = true;
  std::vector<double> dist(pair_count(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      dist[pair_index(4, i, j)] = max_norm_distance(e, i, j);
  for (std::size_t x = 0; x < dist.size() && expect; ++x)
    for (std::size_t y = x + 1; y < dist.size(); ++y)
      if ((order.rank_at(x) < order.rank_at(y)) != (dist[x] < dist[y])) {
        expect = false;
        break;
      }
  CHECK(check.ok == expect);
}

TEST_CASE("verify_spherical on the scaled Hamming half-cube") {
  const auto g = hamming_halfcube(5);
  const auto e = scaled_hamming_embedding(5);
  const auto r = verify_spherical(e, g);
  REQUIRE(r.a.has_value());
  REQUIRE(r.b.has_value());
  CHECK(*r.a == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(*r.b == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(r.feasible);
  CHECK(*r.margin == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(*r.gap == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("verify_spherical on a single edge") {
  const Graph k2(2, {{0, 1}});
  Embedding close;
  close.n = 2;
  close.d = 1;
  close.coords = Matrix(2, 1);
  close.coords(1, 0) = 0.5;
  const auto ok = verify_spherical(close, k2);
  CHECK(*ok.a == doctest::Approx(0.25));
  CHECK_FALSE(ok.b.has_value());
  CHECK(ok.feasible);
  CHECK(*ok.margin == doctest::Approx(0.75));

  Embedding far = close;
  far.coords(1, 0) = 2.0;
  const auto bad = verify_spherical(far, k2);
  CHECK(*bad.a == doctest::Approx(4.0));
  CHECK_FALSE(bad.feasible);
}

TEST_CASE("linf_hard_instance pins the designated pairs to the top ranks") {
  {
    const auto o = linf_hard_instance(1);
    CHECK(o.n() == 4);
    CHECK(o.num_pairs() == 6);
    CHECK(o.rank(0, 1) == 4);
    CHECK(o.rank(2, 3) == 5);
  }
  {
    const auto o = linf_hard_instance(2);
    CHECK(o.n() == 6);
    CHECK(o.num_pairs() == 15);
    CHECK(o.rank(0, 1) == 12);
    CHECK(o.rank(2, 3) == 13);
    CHECK(o.rank(4, 5) == 14);
  }
  for (std::size_t n : {1, 2, 3, 5}) CHECK(linf_hard_instance(n).n() == 2 * n + 2);
}

TEST_CASE("norm_hard_instance keeps point 0 closest to everything") {
  {
    const auto o = norm_hard_instance(1);
    CHECK(o.n() == 6);
    for (std::uint32_t j = 1; j < 6; ++j) CHECK(o.rank(0, j) < 5);
    for (std::size_t r = 0; r < 5; ++r) CHECK(o.pair_at_rank(r).first == 0);
  }
  {
    const auto o = norm_hard_instance(2);
    CHECK(o.n() == 26);
    for (std::size_t r = 0; r < 25; ++r) CHECK(o.pair_at_rank(r).first == 0);
    CHECK(o.pair_at_rank(25).first != 0);
  }
  CHECK_THROWS_AS(norm_hard_instance(6), precondition_error);
  CHECK(norm_hard_instance(3, 3, 3126).n() == 28);  // base is a parameter
}

TEST_CASE("milnor_thom_bound exact values") {
  CHECK(milnor_thom_bound(2, 1, 2, 3) == BigInt(9604));  // 4 * 7^4
  // m = k collapses the exponent to l
  CHECK(milnor_thom_bound(3, 3, 2, 2) == BigInt(12) * 23 * 23);
  CHECK(milnor_thom_bound(7, 7, 1, 1) == BigInt(14) * 27);
  // conservative ceil on fractional m/k: exponent = l - 1 + ceil(m/k)
  CHECK(milnor_thom_bound(3, 2, 1, 1) == BigInt(4) * 7 * 7);
  CHECK_THROWS_AS(milnor_thom_bound(2, 0, 2, 3), precondition_error);
  CHECK_THROWS_AS(milnor_thom_bound(2, 3, 2, 3), precondition_error);
  CHECK_THROWS_AS(milnor_thom_bound(2, 1, 0, 3), precondition_error);
}

TEST_CASE("count_realized_orders_mc frozen small cases") {
  // 3 collinear points: the extreme pair always carries the largest distance,
  // so exactly 2 of the 6 orders appear
  CHECK(count_realized_orders_mc(3, 1, 10000, 0).distinct == 2);
  // generic triangles realize every order of the 3 distances
  CHECK(count_realized_orders_mc(3, 2, 10000, 0).distinct == 6);
}

TEST_CASE("count_realized_orders_mc is deterministic and monotone in trials") {
  const auto a = count_realized_orders_mc(4, 2, 3000, 12345);
  const auto b = count_realized_orders_mc(4, 2, 3000, 12345);
  CHECK(a.distinct == b.distinct);
  CHECK(a.rejected == b.rejected);

  std::size_t prev = 0;
  for (std::size_t trials : {100, 500, 2500, 5000}) {
    const auto r = count_realized_orders_mc(4, 2, trials, 99);
    CHECK(r.distinct >= prev);
    prev = r.distinct;
  }
}

TEST_CASE("count_realized_orders_mc is independent of the thread count") {
  setenv("SPECMONO_THREADS", "1", 1);
  const auto one = count_realized_orders_mc(4, 1, 4000, 7);
  setenv("SPECMONO_THREADS", "4", 1);
  const auto four = count_realized_orders_mc(4, 1, 4000, 7);
  unsetenv("SPECMONO_THREADS");
  CHECK(one.distinct == four.distinct);
  CHECK(one.rejected == four.rejected);
}

TEST_CASE("sampled order counts stay below the sign-pattern ceiling") {
  for (std::size_t d : {1, 2, 3}) {
    const auto count = count_realized_orders_mc(3, d, 2000, 5).distinct;
    CHECK(BigInt(count) <= realized_orders_ceiling(3, d));
  }
  const auto c4 = count_realized_orders_mc(4, 2, 2000, 5).distinct;
  CHECK(BigInt(c4) <= realized_orders_ceiling(4, 2));
}

TEST_CASE("embedding CSV round trip") {
  std::mt19937_64 rng(404);
  const auto e = monotone_embed_l2(random_order(5, rng));
  std::ostringstream out;
  write_embedding_csv(out, e);
  std::istringstream in(out.str());
  const auto back = read_embedding_csv(in);
  CHECK(back.n == e.n);
  CHECK(back.d == e.d);
  CHECK(back.coords.data() == e.coords.data());  // 17 significant digits: exact

  std::ostringstream out2;
  write_embedding_csv(out2, back);
  CHECK(out.str() == out2.str());
}
