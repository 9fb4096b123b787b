#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ldp/empirics.hpp"
#include "ldp/extended_real.hpp"
#include "ldp/rates.hpp"

using ldp::Ar1Params;
using ldp::EstimateOptions;
using ldp::EventKind;
using ldp::EventSpec;
using ldp::kInf;
using ldp::Ma1Params;
using ldp::ProcessParams;
using ldp::RateEstimate;
using ldp::Statistic;

namespace {

EventSpec tail(Statistic s, EventKind k, double level) {
  EventSpec e;
  e.statistic = s;
  e.kind = k;
  e.level = level;
  return e;
}

EventSpec ball(Statistic s, double c0, double c1, double radius) {
  EventSpec e;
  e.statistic = s;
  e.kind = EventKind::ball;
  e.center[0] = c0;
  e.center[1] = c1;
  e.radius = radius;
  return e;
}

}  // namespace

TEST_CASE("estimates are deterministic and thread-count independent") {
  const ProcessParams params = Ar1Params{0.0};
  const EventSpec event = tail(Statistic::quad_mean, EventKind::tail_ge, 2.0);
  const std::vector<std::size_t> grid{20, 30, 40};
  EstimateOptions one;
  one.threads = 1;
  EstimateOptions four;
  four.threads = 4;
  const RateEstimate a = ldp::estimate_rate(params, event, grid, 20000, 5, one);
  const RateEstimate b = ldp::estimate_rate(params, event, grid, 20000, 5, four);
  CHECK(a.counts == b.counts);
  CHECK(a.slope == b.slope);
  const RateEstimate c = ldp::estimate_rate(params, event, grid, 20000, 6, one);
  CHECK(a.counts != c.counts);
}

TEST_CASE("certain event has zero decay") {
  const ProcessParams params = Ar1Params{0.3};
  const RateEstimate r = ldp::estimate_rate(
      params, tail(Statistic::quad_mean, EventKind::tail_ge, -1.0), {10, 20, 30}, 500, 1);
  for (std::size_t i = 0; i < r.counts.size(); ++i) CHECK(r.counts[i] == 500);
  CHECK(r.slope == doctest::Approx(0.0));
  CHECK(r.std_error == doctest::Approx(0.0));
  CHECK(r.dropped.empty());
}

TEST_CASE("impossible event drops every cell and fails the fit") {
  const ProcessParams params = Ar1Params{0.3};
  CHECK_THROWS_AS(ldp::estimate_rate(params, tail(Statistic::quad_mean, EventKind::tail_le, -1.0),
                                     {10, 20, 30}, 200, 1),
                  std::runtime_error);
}

TEST_CASE("slope recovers the known decay rate of a chi-square tail") {
  // theta = 0: quad_mean is a chi-square mean; P(>= 2) decays at rate
  // (1 - log 2)/2 = 0.1534...
  const ProcessParams params = Ar1Params{0.0};
  const RateEstimate r = ldp::estimate_rate(
      params, tail(Statistic::quad_mean, EventKind::tail_ge, 2.0), {25, 35, 45}, 200000, 1);
  REQUIRE(r.n_grid.size() == 3);
  CHECK(r.slope > 0.10);
  CHECK(r.slope < 0.25);
  // Counts decrease roughly geometrically.
  CHECK(r.counts[0] > r.counts[1]);
  CHECK(r.counts[1] > r.counts[2]);
}

TEST_CASE("zero-hit cells are dropped with a warning, fit uses the rest") {
  const ProcessParams params = Ar1Params{0.0};
  const RateEstimate r = ldp::estimate_rate(
      params, tail(Statistic::quad_mean, EventKind::tail_ge, 2.2), {20, 30, 40, 400}, 30000, 2);
  REQUIRE(!r.dropped.empty());
  CHECK(r.dropped.back() == 400);
  CHECK(r.n_grid.size() + r.dropped.size() == 4);
  CHECK(!r.warnings.empty());
  CHECK(r.slope > 0.0);
}

TEST_CASE("estimate guards: grid size and pair tails") {
  const ProcessParams params = Ar1Params{0.0};
  CHECK_THROWS_AS(
      ldp::estimate_rate(params, tail(Statistic::quad_mean, EventKind::tail_ge, 2.0), {10, 20},
                         100, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(ldp::estimate_rate(params, tail(Statistic::w_pair, EventKind::tail_ge, 2.0),
                                     {10, 20, 30}, 100, 1),
                  std::invalid_argument);
}

TEST_CASE("theoretical rates: scalar tails use the boundary value") {
  const ProcessParams ar0 = Ar1Params{0.0};
  CHECK(ldp::theoretical_event_rate(ar0, tail(Statistic::quad_mean, EventKind::tail_ge, 2.0)) ==
        doctest::Approx((1.0 - std::log(2.0)) / 2.0).epsilon(1e-12));
  // Tail on the other side of the limit point: the boundary still carries the
  // infimum.
  CHECK(ldp::theoretical_event_rate(ar0, tail(Statistic::quad_mean, EventKind::tail_le, 0.5)) ==
        doctest::Approx(ldp::rate_i1(0.5, 0.0)).epsilon(1e-12));
  // Events containing the limit point have zero rate.
  CHECK(ldp::theoretical_event_rate(ar0, tail(Statistic::quad_mean, EventKind::tail_ge, 0.8)) ==
        doctest::Approx(0.0));

  const ProcessParams ar5 = Ar1Params{0.5};
  CHECK(ldp::theoretical_event_rate(ar5, tail(Statistic::yule_walker, EventKind::tail_ge, 0.7)) ==
        doctest::Approx(ldp::rate_yule_walker(0.7, 0.5)).epsilon(1e-12));
  CHECK(ldp::theoretical_event_rate(ar5, tail(Statistic::sample_mean, EventKind::tail_ge, 1.0)) ==
        doctest::Approx(0.125).epsilon(1e-12));

  const ProcessParams ma = Ma1Params{0.5};
  CHECK(ldp::theoretical_event_rate(ma, tail(Statistic::quad_mean, EventKind::tail_ge, 2.0)) ==
        doctest::Approx(ldp::rate_k_phi(2.0, 0.5)).epsilon(1e-10));
}

TEST_CASE("theoretical rates: scalar balls minimize over the interval") {
  const ProcessParams ar = Ar1Params{0.2};
  // Ball [1, 3] around 2 for the sample mean: nearest point to the limit 0 is
  // 1, so the rate is 1^2 (1-theta)^2/2.
  const double got =
      ldp::theoretical_event_rate(ar, ball(Statistic::sample_mean, 2.0, 0.0, 1.0));
  CHECK(got == doctest::Approx(ldp::rate_sample_mean_ar1(1.0, 0.2)).epsilon(1e-6));
  // Ball containing the limit point: zero.
  CHECK(ldp::theoretical_event_rate(ar, ball(Statistic::sample_mean, 0.1, 0.0, 0.5)) ==
        doctest::Approx(0.0));
}

TEST_CASE("theoretical rates: pair ball against the pair rate on the circle") {
  const ProcessParams ar = Ar1Params{0.0};
  // w_pair ball centered at (2, 0), radius 0.5; limit point is (1, 0).
  // The circle minimum of the pair rate sits at (1.5, 0) by symmetry.
  const double got = ldp::theoretical_event_rate(ar, ball(Statistic::w_pair, 2.0, 0.0, 0.5));
  CHECK(got == doctest::Approx(ldp::rate_j(1.5, 0.0, 0.0)).epsilon(1e-6));
  // Ball covering the limit point.
  CHECK(ldp::theoretical_event_rate(ar, ball(Statistic::w_pair, 1.1, 0.1, 0.6)) ==
        doctest::Approx(0.0));
  // s_pair ball far from the limit (0, gamma_0).
  const double s_got = ldp::theoretical_event_rate(ar, ball(Statistic::s_pair, 0.0, 3.0, 0.5));
  CHECK(s_got == doctest::Approx(ldp::rate_js(0.0, 2.5, 0.0)).epsilon(1e-5));
}

TEST_CASE("theoretical rates: statistics without a closed form are rejected") {
  const ProcessParams ma = Ma1Params{0.4};
  CHECK_THROWS_AS(
      ldp::theoretical_event_rate(ma, tail(Statistic::lag1_cov, EventKind::tail_ge, 1.0)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      ldp::theoretical_event_rate(ma, tail(Statistic::yule_walker, EventKind::tail_ge, 0.5)),
      std::invalid_argument);
  CHECK_THROWS_AS(ldp::theoretical_event_rate(ma, ball(Statistic::w_pair, 1.0, 0.0, 0.2)),
                  std::invalid_argument);
}

TEST_CASE("monte-carlo and theory agree on a moderate-deviation event") {
  // Small-n pilot: the empirical slope has O(1/n) bias, so compare loosely.
  const ProcessParams params = Ar1Params{0.5};
  const EventSpec event = tail(Statistic::yule_walker, EventKind::tail_ge, 0.8);
  const double ideal = ldp::theoretical_event_rate(params, event);
  const RateEstimate r =
      ldp::estimate_rate(params, event, {30, 45, 60, 75}, 150000, 3);
  CHECK(r.slope > 0.5 * ideal);
  CHECK(r.slope < 2.0 * ideal);
}
