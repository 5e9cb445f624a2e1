#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specmono/recovery.hpp"

using namespace specmono;

namespace {

Graph kmm_plus_internal_edge(std::size_t m) {
  auto edges = complete_bipartite(m, m).edges();
  edges.push_back({0, 1});
  return Graph(2 * m, std::move(edges));
}

Graph kmm_minus_edge(std::size_t m) {
  auto edges = complete_bipartite(m, m).edges();
  edges.pop_back();
  return Graph(2 * m, std::move(edges));
}

void check_per_vertex_sum(const RecoveryReport& r) {
  const auto sum = std::accumulate(r.per_vertex_edits.begin(), r.per_vertex_edits.end(),
                                   std::size_t{0});
  CHECK(sum == 2 * r.total_edits);
}

}  // namespace

TEST_CASE("recovery is exact on complete bipartite graphs") {
  const auto r = spectral_bipartite_recovery(complete_bipartite(4, 4));
  CHECK(r.total_edits == 0);
  CHECK(r.leftover.empty());
  const std::vector<std::uint32_t> left{0, 1, 2, 3}, right{4, 5, 6, 7};
  const bool classes = (r.side_a == left && r.side_b == right) ||
                       (r.side_a == right && r.side_b == left);
  CHECK(classes);
  CHECK(r.lambda_n == doctest::Approx(-4.0).epsilon(1e-9));
  CHECK(r.lambda_n_gap <= 1e-9);
  check_per_vertex_sum(r);

  // unbalanced sides, including one whose eigenvector entries fall below the
  // 1/2 threshold and take the leftover-assignment path
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 4}, {2, 8}, {2, 9}, {3, 7}}) {
    const auto rr = spectral_bipartite_recovery(complete_bipartite(a, b));
    CHECK(rr.total_edits == 0);
    check_per_vertex_sum(rr);
  }
}

TEST_CASE("recovery repairs the missing matching") {
  const auto g = bipartite_minus_matching(4);
  const auto r = spectral_bipartite_recovery(g);
  CHECK(r.total_edits == 4);
  for (auto e : r.per_vertex_edits) CHECK(e == 1);
  CHECK(r.lambda_n == doctest::Approx(-3.0).epsilon(1e-9));
  CHECK(r.lambda_n_gap == doctest::Approx(1.0).epsilon(1e-9));
  check_per_vertex_sum(r);

  const auto oracle = brute_force_min_edits(g);
  CHECK(oracle.min_edits == 4);
  CHECK(r.total_edits == oracle.min_edits);
}

TEST_CASE("recovery deletes a planted internal edge") {
  const auto g = kmm_plus_internal_edge(4);
  const auto r = spectral_bipartite_recovery(g);
  CHECK(r.total_edits == 1);
  CHECK(brute_force_min_edits(g).min_edits == 1);
  check_per_vertex_sum(r);
}

TEST_CASE("recovery preconditions") {
  CHECK_THROWS_AS(spectral_bipartite_recovery(Graph(4, {{0, 1}, {2, 3}})), precondition_error);
  CHECK_THROWS_AS(spectral_bipartite_recovery(Graph(3, {{0, 1}, {1, 2}})), precondition_error);
}

TEST_CASE("recovery reports are deterministic") {
  const auto g = bipartite_minus_matching(5);
  const auto r1 = spectral_bipartite_recovery(g);
  const auto r2 = spectral_bipartite_recovery(g);
  CHECK(r1.side_a == r2.side_a);
  CHECK(r1.side_b == r2.side_b);
  CHECK(r1.total_edits == r2.total_edits);
  CHECK(recovery_report_json(g, r1) == recovery_report_json(g, r2));
}

TEST_CASE("closeness_ratio") {
  const auto kmm = complete_bipartite(6, 6);
  const auto r = spectral_bipartite_recovery(kmm);
  CHECK(closeness_ratio(kmm, r) == 0.0);

  for (std::size_t m : {3, 4, 5, 6}) {
    const auto g = bipartite_minus_matching(m);
    const auto rm = spectral_bipartite_recovery(g);
    CHECK(closeness_ratio(g, rm) ==
          doctest::Approx(1.0 / (4.0 * static_cast<double>(m))).epsilon(1e-12));
  }

  // vanishing in m, always within [0, 1/2]
  double prev = 1.0;
  for (std::size_t m : {3, 5, 7, 9}) {
    const auto g = bipartite_minus_matching(m);
    const double ratio = closeness_ratio(g, spectral_bipartite_recovery(g));
    CHECK(ratio >= 0.0);
    CHECK(ratio <= 0.5);
    CHECK(ratio < prev);
    prev = ratio;
  }
}

TEST_CASE("brute force oracle on small graphs") {
  {
    const auto r = brute_force_min_edits(complete_bipartite(3, 3));
    CHECK(r.min_edits == 0);
    CHECK(r.side_a == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(r.side_b == std::vector<std::uint32_t>{3, 4, 5});
  }
  CHECK(brute_force_min_edits(kmm_minus_edge(3)).min_edits == 1);
  // C6 reaches K_{3,3} by adding the three long chords
  CHECK(brute_force_min_edits(cycle_graph(6)).min_edits == 3);
  CHECK_THROWS_AS(brute_force_min_edits(complete_bipartite(7, 7)), precondition_error);
}

TEST_CASE("recovery never beats the brute-force oracle") {
  std::vector<Graph> zoo;
  zoo.push_back(complete_bipartite(3, 3));
  zoo.push_back(complete_bipartite(2, 5));
  zoo.push_back(complete_bipartite(5, 5));
  zoo.push_back(bipartite_minus_matching(3));
  zoo.push_back(bipartite_minus_matching(5));
  zoo.push_back(bipartite_minus_matching(6));
  zoo.push_back(kmm_minus_edge(4));
  zoo.push_back(kmm_plus_internal_edge(5));
  zoo.push_back(cycle_graph(6));
  zoo.push_back(cycle_graph(9));
  zoo.push_back(cycle_graph(12));
  zoo.push_back(hamming_halfcube(3));
  zoo.push_back(double_graph(cycle_graph(5)));
  for (const auto& g : zoo) {
    const auto r = spectral_bipartite_recovery(g);
    const auto oracle = brute_force_min_edits(g);
    CHECK(r.total_edits >= oracle.min_edits);
    check_per_vertex_sum(r);
  }
  // equality on the families the recovery is built for
  for (std::size_t m : {3, 4, 5, 6}) {
    CHECK(spectral_bipartite_recovery(bipartite_minus_matching(m)).total_edits ==
          brute_force_min_edits(bipartite_minus_matching(m)).min_edits);
    CHECK(spectral_bipartite_recovery(complete_bipartite(m, m)).total_edits == 0);
    CHECK(spectral_bipartite_recovery(kmm_minus_edge(m)).total_edits ==
          brute_force_min_edits(kmm_minus_edge(m)).min_edits);
  }
}

TEST_CASE("hoffman diagnostic") {
  const auto k44 = hoffman_diagnostic(complete_bipartite(4, 4));
  CHECK(k44.is_bipartite);
  CHECK(std::fabs(k44.lambda_n_minus_1) <= 1e-9);

  const auto c5 = hoffman_diagnostic(cycle_graph(5));
  CHECK_FALSE(c5.is_bipartite);
  // 2 + 2*2*cos(4pi/5) = 2 - 2*golden
  CHECK(c5.hoffman_value == doctest::Approx(2.0 + 4.0 * std::cos(4.0 * M_PI / 5.0)).epsilon(1e-9));
  CHECK(c5.hoffman_value == doctest::Approx(-1.2360679774997896).epsilon(1e-9));
  CHECK(c5.hoffman_value < 0.0);  // reported, never asserted non-negative

  const auto bmm = hoffman_diagnostic(bipartite_minus_matching(4));
  CHECK(bmm.is_bipartite);
  CHECK(bmm.lambda_n_minus_1 == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(bmm.hoffman_value == doctest::Approx(-1.0).epsilon(1e-9));  // 3 - 1 - 3
}

TEST_CASE("spectral gap diagnostic on the target families") {
  for (std::size_t m : {3, 4, 5, 8}) {
    CHECK(spectral_bipartite_recovery(complete_bipartite(m, m)).lambda_n_gap <= 1.0 + 1e-9);
    CHECK(spectral_bipartite_recovery(bipartite_minus_matching(m)).lambda_n_gap <= 1.0 + 1e-9);
  }
}

TEST_CASE("recovery JSON report shape") {
  const auto g = bipartite_minus_matching(3);
  const auto json = recovery_report_json(g, spectral_bipartite_recovery(g));
  for (const char* key : {"\"n\":", "\"sideA\":", "\"sideB\":", "\"total_edits\":",
                          "\"per_vertex_edits\":", "\"closeness_ratio\":", "\"lambda2\":",
                          "\"lambda_n\":", "\"lambda_n_minus_1\":", "\"lambda_n_gap\":",
                          "\"hoffman_value\":", "\"eigen_multiplicity\":"})
    CHECK(json.find(key) != std::string::npos);
}
