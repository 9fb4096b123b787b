#include <doctest.h>

#include <array>
#include <cmath>

#include "ldp/extended_real.hpp"
#include "ldp/legendre.hpp"

using ldp::Bracket;
using ldp::ContractionOptions;
using ldp::FlOptions;
using ldp::kInf;
using ldp::LambdaPair;
using ldp::OptimizationReport;

namespace {

constexpr auto kEverywhere = [](const LambdaPair&) { return true; };

}  // namespace

TEST_CASE("2-D transform of a quadratic has the linear-algebra closed form") {
  // cgf = (1/2) lambda' A lambda with A = [[2, .5], [.5, 1]]; the transform at
  // x is (1/2) x' A^{-1} x attained at lambda = A^{-1} x.
  const auto cgf = [](const LambdaPair& l) {
    return 0.5 * (2.0 * l.lambda1 * l.lambda1 + l.lambda2 * l.lambda2 +
                  l.lambda1 * l.lambda2);
  };
  const struct {
    double x, y;
  } points[] = {{1.0, 2.0}, {-0.3, 0.7}, {2.0, -1.0}, {0.0, 0.0}};
  for (const auto& p : points) {
    const double det = 2.0 * 1.0 - 0.5 * 0.5;
    const double l1 = (1.0 * p.x - 0.5 * p.y) / det;
    const double l2 = (-0.5 * p.x + 2.0 * p.y) / det;
    const double expected = 0.5 * (p.x * l1 + p.y * l2);
    const OptimizationReport r = ldp::fenchel_legendre_2d(cgf, kEverywhere, p.x, p.y);
    CHECK(r.converged);
    CHECK(r.dim == 2);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-8));
    CHECK(r.argopt[0] == doctest::Approx(l1).epsilon(1e-6));
    CHECK(r.argopt[1] == doctest::Approx(l2).epsilon(1e-6));
    CHECK_FALSE(r.boundary_limit);
  }
}

TEST_CASE("2-D transform with a restricted domain and maximizer outside the start box") {
  // cgf = -log(1-l1) - log(1-l2) on {l < 1}: transform at (x, y), x,y > 0, is
  // (x - 1 - log x) + (y - 1 - log y) at lambda = (1 - 1/x, 1 - 1/y).
  // For (2, 3) the maximizer (0.5, 2/3) lies beyond the default start box in
  // lambda1; the ascent must leave the box to reach it.
  const auto cgf = [](const LambdaPair& l) {
    return -std::log(1.0 - l.lambda1) - std::log(1.0 - l.lambda2);
  };
  const auto domain = [](const LambdaPair& l) { return l.lambda1 < 1.0 && l.lambda2 < 1.0; };
  const double x = 2.0, y = 3.0;
  const OptimizationReport r = ldp::fenchel_legendre_2d(cgf, domain, x, y);
  CHECK(r.converged);
  CHECK(r.value ==
        doctest::Approx((x - 1.0 - std::log(x)) + (y - 1.0 - std::log(y))).epsilon(1e-8));
  CHECK(r.argopt[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.argopt[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("2-D transform honors an analytic gradient") {
  const auto cgf = [](const LambdaPair& l) {
    return 0.5 * (l.lambda1 * l.lambda1 + 3.0 * l.lambda2 * l.lambda2);
  };
  FlOptions opts;
  opts.gradient = [](const LambdaPair& l) {
    return std::array<double, 2>{l.lambda1, 3.0 * l.lambda2};
  };
  const OptimizationReport r = ldp::fenchel_legendre_2d(cgf, kEverywhere, 1.5, -0.6, opts);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.5 * (1.5 * 1.5 + 0.36 / 3.0)).epsilon(1e-9));
  CHECK(r.argopt[0] == doctest::Approx(1.5).epsilon(1e-7));
  CHECK(r.argopt[1] == doctest::Approx(-0.2).epsilon(1e-7));
}

TEST_CASE("2-D transform reports a boundary limit when the supremum is not attained") {
  // cgf(lambda) = lambda1 on {lambda1 < 1}: at x = (2, 0) the objective is
  // lambda1, increasing toward the boundary; the supremum 1 is a limit.
  const auto cgf = [](const LambdaPair& l) { return l.lambda1; };
  const auto domain = [](const LambdaPair& l) { return l.lambda1 < 1.0; };
  const OptimizationReport r = ldp::fenchel_legendre_2d(cgf, domain, 2.0, 0.0);
  CHECK(r.boundary_limit);
  CHECK_FALSE(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.argopt[0] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("2-D transform finds the better of two domain islands") {
  // Domain splits into |l1 + 2.5| < .5 and |l1 - 1.5| < .5; the objective
  // -((l1-1.5)^2 + l2^2) peaks at (1.5, 0) inside the second island. A single
  // start cannot see both islands; the start grid must.
  const auto cgf = [](const LambdaPair& l) {
    return (l.lambda1 - 1.5) * (l.lambda1 - 1.5) + l.lambda2 * l.lambda2;
  };
  const auto domain = [](const LambdaPair& l) {
    return std::abs(l.lambda1 + 2.5) < 0.5 || std::abs(l.lambda1 - 1.5) < 0.5;
  };
  FlOptions opts;
  opts.box_lambda1_min = -4.0;
  opts.box_lambda1_max = 3.0;
  const OptimizationReport r = ldp::fenchel_legendre_2d(cgf, domain, 0.0, 0.0, opts);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.argopt[0] == doctest::Approx(1.5).epsilon(1e-5));
}

TEST_CASE("1-D contraction: double-well slice resolved by the pre-scan") {
  // f(t) = (t^2 - 1)^2 + 0.1 t has two local minima; the global one is near
  // t = -1. Newton on f' pins the reference minimizer.
  const auto f = [](double t) { return (t * t - 1.0) * (t * t - 1.0) + 0.1 * t; };
  double ref = -1.05;
  for (int i = 0; i < 60; ++i) {
    const double d1 = 4.0 * ref * ref * ref - 4.0 * ref + 0.1;
    const double d2 = 12.0 * ref * ref - 4.0;
    ref -= d1 / d2;
  }
  const OptimizationReport r = ldp::contraction_inf_1d(
      [&](double a, double) { return f(a); },
      [](double t) { return std::array<double, 2>{t, 0.0}; }, Bracket{-2.0, 2.0});
  CHECK(r.converged);
  CHECK(r.dim == 1);
  CHECK(r.argopt[0] == doctest::Approx(ref).epsilon(1e-7));
  CHECK(std::abs(r.value - f(ref)) < 1e-12);
}

TEST_CASE("1-D contraction: slice that only intersects the domain partially") {
  const auto rate = [](double a, double) { return a < 2.0 ? kInf : (a - 3.0) * (a - 3.0); };
  const OptimizationReport r = ldp::contraction_inf_1d(
      rate, [](double t) { return std::array<double, 2>{t, 0.0}; }, Bracket{0.0, 10.0});
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(std::abs(r.value) < 1e-12);
  CHECK(r.argopt[0] == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("1-D contraction: slice that misses the domain entirely") {
  const OptimizationReport r = ldp::contraction_inf_1d(
      [](double, double) { return kInf; },
      [](double t) { return std::array<double, 2>{t, t}; }, Bracket{-1.0, 1.0});
  CHECK(r.converged);
  CHECK(r.value == kInf);
  CHECK(r.argopt[0] == doctest::Approx(0.0));
}

TEST_CASE("1-D contraction: constraint map feeds both coordinates") {
  // Minimize (a - 2)^2 + (b + 1)^2 along the line t -> (t, t - 3):
  // single-variable minimum of (t-2)^2 + (t-2)^2 at t = 2.
  const auto rate = [](double a, double b) {
    return (a - 2.0) * (a - 2.0) + (b + 1.0) * (b + 1.0);
  };
  const OptimizationReport r = ldp::contraction_inf_1d(
      rate, [](double t) { return std::array<double, 2>{t, t - 3.0}; }, Bracket{-5.0, 5.0});
  CHECK(r.converged);
  CHECK(r.argopt[0] == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(std::abs(r.value) < 1e-12);
}
