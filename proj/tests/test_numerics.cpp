#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "specmono/numerics.hpp"

using namespace specmono;

namespace {

SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, u(rng));
  return m;
}

SymMatrix random_gram(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix v(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d; ++k) v(i, k) = u(rng);
  SymMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += v(i, k) * v(j, k);
      g.set(i, j, s);
    }
  return g;
}

double reconstruction_error(const SymMatrix& m, const EigenDecomposition& ed) {
  const std::size_t n = m.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += ed.eigenvalues[k] * ed.eigenvectors(i, k) * ed.eigenvectors(j, k);
      worst = std::max(worst, std::fabs(s - m(i, j)));
    }
  return worst;
}

SymMatrix k22_adjacency() {
  SymMatrix m(4);
  m.set(0, 2, 1.0);
  m.set(0, 3, 1.0);
  m.set(1, 2, 1.0);
  m.set(1, 3, 1.0);
  return m;
}

}  // namespace

TEST_CASE("eig_sym on identity and all-ones") {
  const auto id = eig_sym(SymMatrix::identity(3));
  for (double l : id.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-12));

  const auto ones = eig_sym(SymMatrix::ones(3));
  CHECK(ones.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::fabs(ones.eigenvalues[1]) < 1e-12);
  CHECK(std::fabs(ones.eigenvalues[2]) < 1e-12);
}

TEST_CASE("eig_sym on K_{2,2} adjacency") {
  const auto ed = eig_sym(k22_adjacency());
  CHECK(ed.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::fabs(ed.eigenvalues[1]) < 1e-12);
  CHECK(std::fabs(ed.eigenvalues[2]) < 1e-12);
  CHECK(ed.eigenvalues[3] == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("eig_sym residuals, orthonormality and determinism") {
  std::mt19937_64 rng(20240517);
  for (std::size_t n : {2, 5, 11, 30}) {
    const auto m = random_symmetric(n, rng);
    const auto ed = eig_sym(m);

    for (std::size_t k = 0; k < n; ++k) {
      double resid = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double av = 0.0;
        for (std::size_t j = 0; j < n; ++j) av += m(i, j) * ed.eigenvectors(j, k);
        resid = std::max(resid, std::fabs(av - ed.eigenvalues[k] * ed.eigenvectors(i, k)));
      }
      CHECK(resid <= kEigResidualTol * (1.0 + std::fabs(ed.eigenvalues[k])));
    }

    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p; q < n; ++q) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += ed.eigenvectors(i, p) * ed.eigenvectors(i, q);
        CHECK(std::fabs(dot - (p == q ? 1.0 : 0.0)) < 1e-10);
      }

    const auto again = eig_sym(m);
    CHECK(again.eigenvalues == ed.eigenvalues);
    CHECK(again.eigenvectors.data() == ed.eigenvectors.data());
  }
}

TEST_CASE("eig_sym sign convention") {
  // (1,-1)/sqrt(2) vs (-1,1)/sqrt(2): ties on magnitude resolve to a
  // positive lowest-index coordinate.
  SymMatrix edge(2);
  edge.set(0, 1, 1.0);
  const auto ed = eig_sym(edge);
  CHECK(ed.eigenvectors(0, 0) > 0.0);
  CHECK(ed.eigenvectors(0, 1) > 0.0);
  CHECK(ed.eigenvectors(1, 1) < 0.0);
}

TEST_CASE("eig_sym reconstruction on random matrices") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {3, 8, 17, 30}) {
    const auto m = random_symmetric(n, rng);
    CHECK(reconstruction_error(m, eig_sym(m)) < 1e-8);
  }
}

TEST_CASE("eig_sym rejects non-finite input") {
  SymMatrix m(2);
  m.set(0, 1, std::nan(""));
  CHECK_THROWS_AS(eig_sym(m), precondition_error);
}

TEST_CASE("psd_check basics") {
  const auto ones = psd_check(SymMatrix::ones(3), 1e-9);
  CHECK(ones.psd);
  CHECK(std::fabs(ones.min_eigenvalue) < 1e-12);

  SymMatrix k2(2);
  k2.set(0, 1, 1.0);
  const auto edge = psd_check(k2, 1e-9);
  CHECK_FALSE(edge.psd);
  CHECK(edge.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("psd_check accepts I - eps whenever eps rows sum below 1") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n : {3, 6, 12}) {
    SymMatrix m = SymMatrix::identity(n);
    // off-diagonal entries in (0, 1/n) keep every row sum strictly below 1
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        m.set(i, j, -u(rng) / static_cast<double>(n) * 0.999);
    CHECK(psd_check(m, 1e-9).psd);
  }
}

TEST_CASE("gram_factor examples") {
  const auto id = gram_factor(SymMatrix::identity(2));
  CHECK(id.d == 2);
  CHECK(squared_distance(id, 0, 1) == doctest::Approx(2.0).epsilon(1e-12));

  SymMatrix g(2);
  g.set(0, 0, 1.0);
  g.set(1, 1, 1.0);
  g.set(0, 1, -0.1);
  const auto e = gram_factor(g);
  CHECK(squared_distance(e, 0, 1) == doctest::Approx(2.2).epsilon(1e-12));

  const auto ones = gram_factor(SymMatrix::ones(3));
  CHECK(ones.d == 1);
  CHECK(squared_distance(ones, 0, 1) < 1e-12);
  CHECK(squared_distance(ones, 1, 2) < 1e-12);
}

TEST_CASE("gram_factor rejects indefinite matrices") {
  SymMatrix m(2);
  m.set(0, 1, 1.0);
  CHECK_THROWS_AS(gram_factor(m), precondition_error);
}

TEST_CASE("gram_factor reproduces the distances of any Gram input") {
  std::mt19937_64 rng(4242);
  for (std::size_t n : {4, 9, 20}) {
    const auto g = random_gram(n, 3, rng);
    const auto e = gram_factor(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double want = g(i, i) + g(j, j) - 2.0 * g(i, j);
        CHECK(std::fabs(squared_distance(e, i, j) - want) < 1e-8);
      }
  }
}

TEST_CASE("breve_transform examples") {
  const auto from_id = breve_transform(SymMatrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(from_id(i, i) == 1.0);
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(from_id(i, j) == -1.0);
  }

  const auto from_ones = breve_transform(SymMatrix::ones(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) CHECK(from_ones(i, j) == 1.0);

  SymMatrix gram_e1_e2 = SymMatrix::identity(2);  // Gram of the standard basis in R^2
  const auto breve = breve_transform(gram_e1_e2);
  CHECK(breve(0, 0) == 1.0);
  CHECK(breve(0, 1) == -1.0);
  CHECK(breve(1, 1) == 1.0);
}

TEST_CASE("breve_transform equals 1 - squared distance on Gram matrices") {
  std::mt19937_64 rng(31337);
  const auto g = random_gram(8, 4, rng);
  const auto e = gram_factor(g);
  const auto breve = breve_transform(g);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      CHECK(breve(i, j) == doctest::Approx(1.0 - squared_distance(e, i, j)).epsilon(1e-8));
}

TEST_CASE("breve_transform changes rank by at most 3") {
  std::mt19937_64 rng(5150);
  for (std::size_t d : {1, 2, 4}) {
    const auto g = random_gram(10, d, rng);
    const auto rank_g = numerical_rank(eig_sym(g));
    const auto rank_b = numerical_rank(eig_sym(breve_transform(g)));
    const auto diff = rank_g > rank_b ? rank_g - rank_b : rank_b - rank_g;
    CHECK(diff <= 3);
  }
}

TEST_CASE("rank_lower_bound examples") {
  CHECK(rank_lower_bound(SymMatrix::identity(5)) == doctest::Approx(5.0));
  CHECK(rank_lower_bound(SymMatrix::ones(7)) == doctest::Approx(1.0));

  SymMatrix diag(3);
  diag.set(0, 0, 2.0);
  diag.set(1, 1, 1.0);
  diag.set(2, 2, 1.0);
  CHECK(rank_lower_bound(diag) == doctest::Approx(16.0 / 6.0));

  CHECK_THROWS_AS(rank_lower_bound(SymMatrix(4)), precondition_error);
}

TEST_CASE("rank_lower_bound never exceeds the numerical rank") {
  std::mt19937_64 rng(2718);
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = random_gram(9, 1 + rep % 5, rng);
    CHECK(rank_lower_bound(g) <= static_cast<double>(numerical_rank(eig_sym(g))) + 1e-9);
  }
  // also on indefinite matrices
  for (int rep = 0; rep < 10; ++rep) {
    auto m = random_symmetric(7, rng);
    if (m.sum_squares() == 0.0) continue;
    CHECK(rank_lower_bound(m) <= static_cast<double>(numerical_rank(eig_sym(m))) + 1e-9);
  }
}
