#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ldp/model.hpp"
#include "ldp/rng.hpp"

using ldp::Ar1Params;
using ldp::Ma1Params;
using ldp::SamplePath;

TEST_CASE("AR(1) parameters: stationarity guard") {
  CHECK_NOTHROW(Ar1Params{0.999});
  CHECK_THROWS_AS(Ar1Params{1.0}, std::invalid_argument);
  CHECK_THROWS_AS(Ar1Params{-1.0}, std::invalid_argument);
  CHECK_THROWS_AS(Ar1Params{3.0}, std::invalid_argument);
}

TEST_CASE("simulation is deterministic in (params, n, seed)") {
  const Ar1Params params{0.6};
  const SamplePath a = ldp::simulate_ar1(params, 64, 42);
  const SamplePath b = ldp::simulate_ar1(params, 64, 42);
  const SamplePath c = ldp::simulate_ar1(params, 64, 43);
  REQUIRE(a.n() == 64);
  CHECK(a.seed == 42);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);

  // Extending n keeps the shared prefix: the innovation stream only depends
  // on the seed.
  const SamplePath longer = ldp::simulate_ar1(params, 128, 42);
  for (std::size_t k = 0; k < a.n(); ++k) CHECK(longer.values[k] == a.values[k]);
}

TEST_CASE("AR(1) paths match the stationary moments") {
  const double theta = 0.6;
  const SamplePath path = ldp::simulate_ar1(Ar1Params{theta}, 20000, 7);
  const ldp::BivariateStat w = ldp::stat_w(path);
  const double gamma0 = 1.0 / (1.0 - theta * theta);  // 1.5625
  CHECK(w.first > 0.92 * gamma0);
  CHECK(w.first < 1.08 * gamma0);
  CHECK(std::abs(w.second / w.first - theta) < 0.03);
  const ldp::BivariateStat s = ldp::stat_s(path);
  CHECK(std::abs(s.first) < 0.1);  // mean ~ N(0, gamma0 * O(1/n))
}

TEST_CASE("MA(1) paths match the stationary moments") {
  const double phi = 0.5;
  const SamplePath path = ldp::simulate_ma1(Ma1Params{phi}, 20000, 11);
  const ldp::BivariateStat w = ldp::stat_w(path);
  CHECK(std::abs(w.first - (1.0 + phi * phi)) < 0.1);
  CHECK(std::abs(w.second - phi) < 0.05);
  CHECK(std::abs(ldp::stat_s(path).first) < 0.06);
}

TEST_CASE("path statistics: worked examples") {
  const SamplePath ones{{1.0, 1.0, 1.0}, 0};
  const ldp::BivariateStat w = ldp::stat_w(ones);
  CHECK(w.first == doctest::Approx(1.0));
  CHECK(w.second == doctest::Approx(2.0 / 3.0));

  const SamplePath ramp{{1.0, 2.0, 3.0}, 0};
  const ldp::BivariateStat s = ldp::stat_s(ramp);
  CHECK(s.first == doctest::Approx(2.0));
  CHECK(s.second == doctest::Approx(14.0 / 3.0));

  CHECK(ldp::yule_walker(SamplePath{{1.0, 2.0, 1.0}, 0}) == doctest::Approx(2.0 / 3.0));
  // Constant paths give (n-1)/n.
  CHECK(ldp::yule_walker(SamplePath{{2.0, 2.0, 2.0, 2.0, 2.0}, 0}) == doctest::Approx(0.8));
}

TEST_CASE("path statistics: length and degeneracy guards") {
  const SamplePath single{{1.0}, 0};
  CHECK_THROWS_AS(ldp::stat_w(single), std::invalid_argument);
  CHECK_THROWS_AS(ldp::yule_walker(single), std::invalid_argument);
  CHECK_NOTHROW(ldp::stat_s(single));
  const SamplePath zeros{{0.0, 0.0, 0.0}, 0};
  CHECK_THROWS_AS(ldp::yule_walker(zeros), std::invalid_argument);
}

TEST_CASE("ratio estimator is consistent on long paths") {
  for (double theta : {-0.5, 0.0, 0.7}) {
    const SamplePath path = ldp::simulate_ar1(Ar1Params{theta}, 40000, 3);
    CHECK(std::abs(ldp::yule_walker(path) - theta) < 0.02);
  }
}

TEST_CASE("seed mixing separates replicate streams") {
  // Adjacent replicate indices must give unrelated streams.
  const std::uint64_t a = ldp::mix_seed(0, 0);
  const std::uint64_t b = ldp::mix_seed(0, 1);
  CHECK(a != b);
  const SamplePath pa = ldp::simulate_ar1(Ar1Params{0.3}, 8, a);
  const SamplePath pb = ldp::simulate_ar1(Ar1Params{0.3}, 8, b);
  CHECK(pa.values != pb.values);
}

TEST_CASE("uniform draws stay inside (0, 1]") {
  ldp::SplitMix64 gen(123);
  for (int i = 0; i < 100000; ++i) {
    const double u = gen.next_u01();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("gaussian stream has standard moments") {
  ldp::GaussianStream gen(5);
  double sum = 0.0, sumsq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = gen.next();
    sum += z;
    sumsq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sumsq / n - 1.0) < 0.02);
}
