#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ldp/rng.hpp"
#include "ldp/toeplitz.hpp"

using ldp::DomainRegion;
using ldp::LambdaPair;
using ldp::TriDiag;

namespace {

Eigen::MatrixXd dense_tridiag(const TriDiag& m) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.n),
                                            static_cast<Eigen::Index>(m.n));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    a(i, i) = (i == 0 || i + 1 == a.rows()) ? m.corner : m.interior;
    if (i + 1 < a.rows()) {
      a(i, i + 1) = m.off;
      a(i + 1, i) = m.off;
    }
  }
  return a;
}

// Uniform double in [lo, hi] from the library's deterministic generator.
double uniform(ldp::SplitMix64& gen, double lo, double hi) {
  return lo + (hi - lo) * gen.next_u01();
}

}  // namespace

TEST_CASE("AR(1) precision matrix: entries and determinant") {
  const TriDiag p = ldp::ar1_precision(0.5, 6);
  CHECK(p.n == 6);
  CHECK(p.corner == doctest::Approx(1.0));
  CHECK(p.interior == doctest::Approx(1.25));
  CHECK(p.off == doctest::Approx(-0.5));

  // det = product of pivots = 1 - theta^2, independent of n.
  for (double theta : {0.5, -0.8, 0.0}) {
    for (std::size_t n : {std::size_t{2}, std::size_t{5}, std::size_t{64}}) {
      const std::vector<double> r = ldp::pivot_sequence(ldp::ar1_precision(theta, n));
      double det = 1.0;
      for (double v : r) det *= v;
      CHECK(det == doctest::Approx(1.0 - theta * theta).epsilon(1e-12));
    }
  }
}

TEST_CASE("shifted matrix entries") {
  const TriDiag d = ldp::d_matrix(LambdaPair{0.1, -0.3}, 0.5, 8);
  CHECK(d.corner == doctest::Approx(1.0 - 0.2));
  CHECK(d.interior == doctest::Approx(1.25 - 0.2));
  CHECK(d.off == doctest::Approx(-0.5 + 0.3));
}

TEST_CASE("pivot recursion: worked example and failure padding") {
  const std::vector<double> r = ldp::pivot_sequence(TriDiag{4, 1.0, 5.0, 2.0});
  REQUIRE(r.size() == 4);
  CHECK(r[0] == doctest::Approx(1.0));
  CHECK(r[1] == doctest::Approx(1.0));
  CHECK(r[2] == doctest::Approx(1.0));
  CHECK(r[3] == doctest::Approx(-3.0));

  // A nonpositive pivot freezes the rest of the sequence.
  const std::vector<double> bad = ldp::pivot_sequence(TriDiag{5, 1.0, 1.0, 2.0});
  REQUIRE(bad.size() == 5);
  CHECK(bad[0] == doctest::Approx(1.0));
  for (std::size_t k = 1; k < 5; ++k) CHECK(bad[k] == doctest::Approx(-3.0));
}

TEST_CASE("positive definiteness agrees with a dense eigensolver") {
  ldp::SplitMix64 gen(2024);
  int checked = 0;
  while (checked < 400) {
    TriDiag m;
    m.n = 2 + static_cast<std::size_t>(gen.next() % 63);
    m.corner = uniform(gen, -1.0, 3.0);
    m.interior = uniform(gen, -1.0, 3.0);
    m.off = uniform(gen, -1.5, 1.5);
    const Eigen::MatrixXd dense = dense_tridiag(m);
    const double min_eig =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense, Eigen::EigenvaluesOnly)
            .eigenvalues()
            .minCoeff();
    // Skip numerically borderline draws; the classification there depends on
    // rounding, not on the algorithm.
    if (std::abs(min_eig) < 1e-9 * dense.norm()) continue;
    CHECK(ldp::is_positive_definite(m) == (min_eig > 0.0));
    ++checked;
  }
}

TEST_CASE("pivot-map fixed points: worked examples and precondition") {
  const ldp::FixedPoints f = ldp::g_map_fixed_points(5.0, 2.0);
  CHECK(f.repulsor == doctest::Approx(1.0));
  CHECK(f.attractor == doctest::Approx(4.0));
  const ldp::FixedPoints g = ldp::g_map_fixed_points(2.0, 0.0);
  CHECK(g.repulsor == doctest::Approx(0.0));
  CHECK(g.attractor == doctest::Approx(2.0));
  CHECK_THROWS_AS(ldp::g_map_fixed_points(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ldp::g_map_fixed_points(1.0, 0.7), std::invalid_argument);
  // Negative p is fine as long as p^2 > 4 q^2; both fixed points go negative.
  const ldp::FixedPoints neg = ldp::g_map_fixed_points(-5.0, 2.0);
  CHECK(neg.repulsor == doctest::Approx(-4.0));
  CHECK(neg.attractor == doctest::Approx(-1.0));
}

TEST_CASE("pivot iteration converges to the attractor") {
  const double p = 3.0, q = 1.1;
  const ldp::FixedPoints f = ldp::g_map_fixed_points(p, q);
  const std::vector<double> r = ldp::pivot_sequence(TriDiag{64, 1.0, p, q});
  CHECK(std::abs(r[32] - f.attractor) < 1e-10);
  // Fixed points really are fixed.
  CHECK(p - q * q / f.attractor == doctest::Approx(f.attractor).epsilon(1e-12));
  CHECK(p - q * q / f.repulsor == doctest::Approx(f.repulsor).epsilon(1e-12));
}

TEST_CASE("domain classification: pinned points") {
  CHECK(ldp::domain_membership(LambdaPair{0.0, 0.0}, 0.7) == DomainRegion::D1);
  CHECK(ldp::domain_membership(LambdaPair{0.5, 0.0}, 0.5) == DomainRegion::Outside);
  // Between (1-theta^2)/2 and 1/2 with the off-diagonal nearly cancelled.
  CHECK(ldp::domain_membership(LambdaPair{0.3, -0.9}, 0.9) == DomainRegion::D2);
  CHECK(ldp::domain_membership(LambdaPair{0.3, -0.3}, 0.9) == DomainRegion::Outside);
  CHECK(ldp::in_domain(LambdaPair{0.0, 0.0}, 0.0));
  CHECK_FALSE(ldp::in_domain(LambdaPair{2.0, 0.0}, 0.0));
}

TEST_CASE("domain membership predicts positive definiteness for large n") {
  // Sample pairs that are clearly inside or outside and compare with the
  // factorization at n = 192.
  ldp::SplitMix64 gen(99);
  int inside_seen = 0, outside_seen = 0;
  for (int draws = 0; draws < 4000 && (inside_seen < 40 || outside_seen < 40); ++draws) {
    const double theta = uniform(gen, -0.9, 0.9);
    const LambdaPair lambda{uniform(gen, -2.0, 0.6), uniform(gen, -2.0, 2.0)};
    const bool inside = ldp::in_domain(lambda, theta);
    // Margin filter: skip pairs whose classification flips under a small
    // perturbation of lambda1 (boundary cases converge only as n -> infinity).
    const bool stable = ldp::in_domain(LambdaPair{lambda.lambda1 + 5e-3, lambda.lambda2}, theta) ==
                            inside &&
                        ldp::in_domain(LambdaPair{lambda.lambda1 - 5e-3, lambda.lambda2}, theta) ==
                            inside &&
                        ldp::in_domain(LambdaPair{lambda.lambda1, lambda.lambda2 + 5e-3}, theta) ==
                            inside &&
                        ldp::in_domain(LambdaPair{lambda.lambda1, lambda.lambda2 - 5e-3}, theta) ==
                            inside;
    if (!stable) continue;
    CHECK(ldp::is_positive_definite(ldp::d_matrix(lambda, theta, 192)) == inside);
    (inside ? inside_seen : outside_seen) += 1;
  }
  CHECK(inside_seen >= 40);
  CHECK(outside_seen >= 40);
}

TEST_CASE("product eigenvalues: trace and determinant identities") {
  const double theta = 0.4;
  const LambdaPair lambda{0.2, -0.5};
  const std::size_t n = 32;
  const std::vector<double> eig = ldp::product_eigenvalues(lambda, theta, n);
  REQUIRE(eig.size() == n);
  for (std::size_t k = 1; k < n; ++k) CHECK(eig[k - 1] <= eig[k] + 1e-14);

  // trace(Sigma * T) has a closed form from the covariances gamma_0, gamma_1.
  const double gamma0 = 1.0 / (1.0 - theta * theta);
  const double gamma1 = theta * gamma0;
  double trace = 0.0;
  for (double v : eig) trace += v;
  const double expected =
      static_cast<double>(n) * lambda.lambda1 * gamma0 +
      static_cast<double>(n - 1) * lambda.lambda2 * gamma1;
  CHECK(trace == doctest::Approx(expected).epsilon(1e-10));

  // det(Sigma) = 1 / (1 - theta^2) for every n (the precision determinant is
  // 1 - theta^2); take lambda = (1, 0) so T = I.
  const std::vector<double> cov_eig = ldp::product_eigenvalues(LambdaPair{1.0, 0.0}, theta, 24);
  double logdet = 0.0;
  for (double v : cov_eig) logdet += std::log(v);
  CHECK(logdet == doctest::Approx(-std::log(1.0 - theta * theta)).epsilon(1e-10));
}

TEST_CASE("product eigenvalues: match a nonsymmetric dense solve") {
  ldp::SplitMix64 gen(7);
  for (int rep = 0; rep < 10; ++rep) {
    const double theta = uniform(gen, -0.85, 0.85);
    const LambdaPair lambda{uniform(gen, -1.0, 1.0), uniform(gen, -1.0, 1.0)};
    const std::size_t n = 8 + static_cast<std::size_t>(gen.next() % 25);
    const std::vector<double> eig = ldp::product_eigenvalues(lambda, theta, n);

    Eigen::MatrixXd cov(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < cov.rows(); ++i)
      for (Eigen::Index j = 0; j < cov.cols(); ++j)
        cov(i, j) = std::pow(theta, std::abs(i - j)) / (1.0 - theta * theta);
    const Eigen::MatrixXd sym = dense_tridiag(TriDiag{n, lambda.lambda1, lambda.lambda1,
                                                      lambda.lambda2 / 2.0});
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(cov * sym);
    std::vector<double> reference(n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(solver.eigenvalues()[static_cast<Eigen::Index>(k)].imag()) < 1e-9);
      reference[k] = solver.eigenvalues()[static_cast<Eigen::Index>(k)].real();
    }
    std::sort(reference.begin(), reference.end());
    for (std::size_t k = 0; k < n; ++k)
      CHECK(eig[k] == doctest::Approx(reference[k]).epsilon(1e-7));
  }
}

TEST_CASE("product eigenvalues: dense-size cap") {
  CHECK_THROWS_AS(ldp::product_eigenvalues(LambdaPair{0.1, 0.1}, 0.3, 64, 32),
                  std::invalid_argument);
  CHECK_NOTHROW(ldp::product_eigenvalues(LambdaPair{0.1, 0.1}, 0.3, 32, 32));
}
