#include "ldp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ldp/cgf.hpp"
#include "ldp/empirics.hpp"
#include "ldp/extended_real.hpp"
#include "ldp/gridcsv.hpp"
#include "ldp/legendre.hpp"
#include "ldp/rates.hpp"
#include "ldp/rng.hpp"
#include "ldp/spectral.hpp"
#include "ldp/toeplitz.hpp"

namespace ldp {

namespace {

std::vector<double> linspace(double a, double b, std::size_t m) {
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(m - 1);
  }
  out.back() = b;
  return out;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  return format_double(v);
}

void add_check(CriterionResult& result, const std::string& label, bool passed,
               const std::string& detail) {
  result.checks.push_back({label, passed, detail});
}

void finalize(CriterionResult& result) {
  result.passed = !result.checks.empty();
  for (const CheckResult& c : result.checks) result.passed = result.passed && c.passed;
}

// In-domain lambda grid for one theta: 7 values of lambda1 down the first
// region, 7 values of lambda2 across 81% of the admissible off-diagonal
// band, so every point is strictly interior.
std::vector<LambdaPair> interior_lambda_grid(double theta) {
  std::vector<LambdaPair> grid;
  grid.reserve(49);
  const double theta_sq = theta * theta;
  for (double l1 : linspace(-1.2, 0.45 * (1.0 - theta_sq), 7)) {
    const double half_width = 0.9 * (1.0 + theta_sq - 2.0 * l1) / 2.0;
    for (double t : linspace(-1.0, 1.0, 7)) {
      grid.push_back({l1, -theta + 0.9 * half_width * t});
    }
  }
  return grid;
}

// --- criterion 1 ---------------------------------------------------------

CriterionResult criterion_cgf_convergence(const VerifyOptions&) {
  CriterionResult result;
  result.id = 1;
  result.title = "finite-n generating function converges to its limit";

  const std::vector<double> thetas = {0.0, 0.3, -0.3, 0.6, -0.6, 0.9};
  double worst_e512 = 0.0;
  double worst_monotone_gap = -kInf;  // max over grid of e1024 - e128 (must be <= 0)
  LambdaPair worst_point{};
  double worst_theta = 0.0;
  for (double theta : thetas) {
    for (const LambdaPair& lambda : interior_lambda_grid(theta)) {
      const double limit = l_limit_ar1(lambda, theta);
      const double e128 = std::abs(l_n_ar1_pivot(lambda, theta, 128) - limit);
      const double e512 = std::abs(l_n_ar1_pivot(lambda, theta, 512) - limit);
      const double e1024 = std::abs(l_n_ar1_pivot(lambda, theta, 1024) - limit);
      if (e512 > worst_e512) {
        worst_e512 = e512;
        worst_point = lambda;
        worst_theta = theta;
      }
      worst_monotone_gap = std::max(worst_monotone_gap, e1024 - e128);
    }
  }
  add_check(result, "|l_512 - l_limit| <= 0.02 on 6 theta x 49 lambda interior grid",
            worst_e512 <= 0.02,
            "max gap " + fmt(worst_e512) + " at lambda = (" + fmt(worst_point.lambda1) + ", " +
                fmt(worst_point.lambda2) + "), theta = " + fmt(worst_theta));
  // Both errors sit at the rounding floor (~1e-14) at fast-converging points,
  // so the ordering is only meaningful above that floor.
  add_check(result, "error at n = 1024 does not exceed error at n = 128 (1e-12 rounding slack)",
            worst_monotone_gap <= 1e-12, "max (e_1024 - e_128) = " + fmt(worst_monotone_gap));
  finalize(result);
  return result;
}

// --- criterion 2 ---------------------------------------------------------

CriterionResult criterion_route_equivalence(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 2;
  result.title = "eigenvalue and pivot routes agree";

  SplitMix64 rng(mix_seed(options.seed, 2));
  const auto uniform = [&rng](double a, double b) { return a + (b - a) * rng.next_u01(); };

  double worst = 0.0;
  double worst_theta = 0.0;
  std::size_t worst_n = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const double theta = uniform(-0.95, 0.95);
    // Rejection-sample an interior pair: in the region, and clear of the
    // boundary so neither route is evaluating a nearly singular form.
    LambdaPair lambda{};
    for (;;) {
      lambda = {uniform(-2.0, 0.5), uniform(-2.0, 2.0)};
      const double p = 1.0 + theta * theta - 2.0 * lambda.lambda1;
      if (in_domain(lambda, theta) && p - 2.0 * std::abs(theta + lambda.lambda2) >= 0.05) break;
    }
    // Log-uniform n in [2, 512] exercises every scale at bounded dense cost.
    const double log_n = uniform(std::log(2.0), std::log(512.0));
    const std::size_t n = std::min<std::size_t>(512, std::max<std::size_t>(2,
        static_cast<std::size_t>(std::lround(std::exp(log_n)))));
    const double dense = l_n_ar1(lambda, theta, n, options.dense_cap);
    const double pivot = l_n_ar1_pivot(lambda, theta, n);
    const double gap = std::abs(dense - pivot);
    if (gap > worst) {
      worst = gap;
      worst_theta = theta;
      worst_n = n;
    }
  }
  add_check(result, "|l_n(eigen) - l_n(pivot)| <= 1e-10 on 200 random tuples", worst <= 1e-10,
            "max gap " + fmt(worst) + " (theta = " + fmt(worst_theta) +
                ", n = " + std::to_string(worst_n) + ")");
  finalize(result);
  return result;
}

// --- criterion 3 ---------------------------------------------------------

CriterionResult criterion_duality(const VerifyOptions&) {
  CriterionResult result;
  result.id = 3;
  result.title = "pair rate equals the convex-duality transform";

  double worst_value = 0.0;
  double worst_arg = 0.0;
  bool all_converged = true;
  for (double theta : {0.0, 0.3, 0.6}) {
    const auto cgf = [theta](const LambdaPair& l) { return l_limit_ar1_continuation(l, theta); };
    const auto domain = [theta](const LambdaPair& l) { return in_continuation_domain(l, theta); };
    FlOptions fl;
    fl.gradient = [theta](const LambdaPair& l) { return l_limit_ar1_gradient(l, theta); };
    for (double x : linspace(0.15, 3.0, 20)) {
      for (double frac : linspace(-0.95, 0.95, 20)) {
        const double y = frac * x;
        const OptimizationReport report = fenchel_legendre_2d(cgf, domain, x, y, fl);
        all_converged = all_converged && report.converged;
        worst_value = std::max(worst_value, std::abs(report.value - rate_j(x, y, theta)));
        const LambdaPair closed = optimal_lambda_j(x, y, theta);
        worst_arg = std::max({worst_arg, std::abs(report.argopt[0] - closed.lambda1),
                              std::abs(report.argopt[1] - closed.lambda2)});
      }
    }
  }
  add_check(result, "|transform - closed form| <= 1e-6 on 3 theta x 20 x 20 grid",
            worst_value <= 1e-6, "max gap " + fmt(worst_value));
  add_check(result, "numerical maximizer matches the closed-form dual point to 1e-5",
            worst_arg <= 1e-5, "max coordinate gap " + fmt(worst_arg));
  add_check(result, "every transform converged", all_converged, all_converged ? "yes" : "no");
  finalize(result);
  return result;
}

// --- criterion 4 ---------------------------------------------------------

CriterionResult criterion_contractions(const VerifyOptions&) {
  CriterionResult result;
  result.id = 4;
  result.title = "slice contractions recover the scalar rates";

  const std::vector<double> thetas = {0.0, 0.3, -0.3, 0.6};
  double worst_i1 = 0.0, worst_i2 = 0.0, worst_ratio = 0.0;

  for (double theta : thetas) {
    const auto rate = [theta](double x, double y) { return rate_j(x, y, theta); };

    for (double c : linspace(0.15, 6.0, 25)) {
      const auto slice = [c](double t) { return std::array<double, 2>{c, t}; };
      const OptimizationReport rep =
          contraction_inf_1d(rate, slice, {-c + 1e-9, c - 1e-9});
      worst_i1 = std::max(worst_i1, std::abs(rep.value - rate_i1(c, theta)));
    }

    const double c_max = std::sqrt(i2_cutoff_csq(theta));
    for (double frac : linspace(-0.95, 0.95, 25)) {
      const double c = frac * c_max;
      const auto slice = [c](double t) { return std::array<double, 2>{t, c}; };
      const OptimizationReport rep =
          contraction_inf_1d(rate, slice, {std::abs(c) + 1e-6, std::abs(c) + 40.0});
      worst_i2 = std::max(worst_i2, std::abs(rep.value - rate_i2(c, theta)));
    }

    for (double c : linspace(-0.95, 0.95, 25)) {
      const auto slice = [c](double t) { return std::array<double, 2>{t, c * t}; };
      const OptimizationReport rep = contraction_inf_1d(rate, slice, {1e-6, 60.0});
      worst_ratio = std::max(worst_ratio, std::abs(rep.value - rate_yule_walker(c, theta)));
    }
  }
  add_check(result, "inf over y of J(c, y) matches the quadratic-mean rate to 1e-8",
            worst_i1 <= 1e-8, "max gap " + fmt(worst_i1));
  add_check(result, "inf over x of J(x, c) matches the lag-1 covariance rate to 1e-6",
            worst_i2 <= 1e-6, "max gap " + fmt(worst_i2));
  add_check(result, "inf over x of J(x, cx) matches the ratio-estimator rate to 1e-8",
            worst_ratio <= 1e-8, "max gap " + fmt(worst_ratio));

  // +inf agreement past the lag-1 covariance cutoff. The closed form assigns
  // +inf there, so the slice infimum must be +inf as well for the two to
  // describe the same function.
  bool beyond_agrees = true;
  std::string beyond_detail;
  for (double theta : thetas) {
    const auto rate = [theta](double x, double y) { return rate_j(x, y, theta); };
    const double c_max = std::sqrt(i2_cutoff_csq(theta));
    for (double s : {1.05, 1.3, 2.0}) {
      const double c = s * c_max;
      const auto slice = [c](double t) { return std::array<double, 2>{t, c}; };
      const OptimizationReport rep =
          contraction_inf_1d(rate, slice, {std::abs(c) + 1e-6, std::abs(c) + 40.0});
      if (std::isfinite(rep.value) && beyond_detail.empty()) {
        beyond_detail = "closed form +inf but slice infimum " + fmt(rep.value) + " at c = " +
                        fmt(c) + " (theta = " + fmt(theta) + ", x = " + fmt(rep.argopt[0]) + ")";
      }
      beyond_agrees = beyond_agrees && !std::isfinite(rep.value);
    }
  }
  add_check(result, "past the cutoff both the closed form and the slice infimum are +inf",
            beyond_agrees, beyond_agrees ? "agree" : beyond_detail);
  if (!beyond_agrees) {
    result.notes.push_back(
        "J(x, c) has a finite interior minimum in x for every |c| (it grows to +inf at both "
        "ends of the slice), so the slice infimum stays finite past the cutoff where the "
        "closed-form lag-1 covariance rate jumps to +inf; the two genuinely disagree there "
        "and this sub-check records that discrepancy rather than hiding it.");
  }

  bool ratio_beyond = true;
  std::string ratio_detail;
  for (double theta : thetas) {
    const auto rate = [theta](double x, double y) { return rate_j(x, y, theta); };
    for (double c : {-1.2, -1.0, 1.0, 1.2}) {
      const auto slice = [c](double t) { return std::array<double, 2>{t, c * t}; };
      const OptimizationReport rep = contraction_inf_1d(rate, slice, {1e-6, 60.0});
      const bool closed_inf = !std::isfinite(rate_yule_walker(c, theta));
      const bool slice_inf = !std::isfinite(rep.value);
      if (closed_inf != slice_inf && ratio_detail.empty()) {
        ratio_detail = "mismatch at c = " + fmt(c) + ", theta = " + fmt(theta);
      }
      ratio_beyond = ratio_beyond && (closed_inf == slice_inf);
    }
  }
  add_check(result, "at and past |c| = 1 the ratio slice and its closed form are both +inf",
            ratio_beyond, ratio_beyond ? "agree" : ratio_detail);
  finalize(result);
  return result;
}

// --- criterion 5 ---------------------------------------------------------

CriterionResult criterion_zeros(const VerifyOptions&) {
  CriterionResult result;
  result.id = 5;
  result.title = "rates vanish exactly at the almost-sure limits";

  const std::vector<double> coeffs = {-0.6, -0.3, 0.0, 0.3, 0.6};
  constexpr double kZeroTol = 1e-10;
  constexpr double kPosFloor = 1e-12;
  constexpr double kStep = 1e-2;

  double worst_zero = 0.0;
  double worst_pos = kInf;
  std::string worst_zero_at, worst_pos_at;
  const auto record = [&](const std::string& name, double at_zero, double displaced_min) {
    if (at_zero > worst_zero) {
      worst_zero = at_zero;
      worst_zero_at = name;
    }
    if (displaced_min < worst_pos) {
      worst_pos = displaced_min;
      worst_pos_at = name;
    }
  };

  const auto scalar_case = [&](const std::string& name, double lln,
                               const std::function<double(double)>& rate) {
    record(name, std::abs(rate(lln)),
           std::min(rate(lln + kStep), rate(lln - kStep)));
  };
  const auto pair_case = [&](const std::string& name, double x0, double y0,
                             const std::function<double(double, double)>& rate) {
    const double displaced =
        std::min({rate(x0 + kStep, y0), rate(x0 - kStep, y0), rate(x0, y0 + kStep),
                  rate(x0, y0 - kStep)});
    record(name, std::abs(rate(x0, y0)), displaced);
  };

  for (double theta : coeffs) {
    const double quad = 1.0 / (1.0 - theta * theta);
    pair_case("J(theta=" + fmt(theta) + ")", quad, theta * quad,
              [theta](double x, double y) { return rate_j(x, y, theta); });
    scalar_case("I1(theta=" + fmt(theta) + ")", quad,
                [theta](double c) { return rate_i1(c, theta); });
    scalar_case("I2(theta=" + fmt(theta) + ")", theta * quad,
                [theta](double c) { return rate_i2(c, theta); });
    scalar_case("Itheta(theta=" + fmt(theta) + ")", theta,
                [theta](double c) { return rate_yule_walker(c, theta); });
    scalar_case("IXbar(theta=" + fmt(theta) + ")", 0.0,
                [theta](double c) { return rate_sample_mean_ar1(c, theta); });
    pair_case("JS(theta=" + fmt(theta) + ")", 0.0, quad,
              [theta](double x, double y) { return rate_js(x, y, theta); });
  }
  for (double phi : coeffs) {
    const double quad = 1.0 + phi * phi;
    scalar_case("Kphi(phi=" + fmt(phi) + ")", quad,
                [phi](double c) { return rate_k_phi(c, phi); });
    pair_case("KS(phi=" + fmt(phi) + ")", 0.0, quad,
              [phi](double x, double y) { return rate_ks(x, y, phi); });
    scalar_case("IYbar(phi=" + fmt(phi) + ")", 0.0,
                [phi](double c) { return rate_sample_mean_ma1(c, phi); });
  }

  add_check(result, "all 9 rates are <= 1e-10 at their almost-sure limits", worst_zero <= kZeroTol,
            "max |rate(limit)| = " + fmt(worst_zero) + " (" + worst_zero_at + ")");
  add_check(result, "all 9 rates are > 0 at 1e-2 displacements", worst_pos > kPosFloor,
            "min displaced rate = " + fmt(worst_pos) + " (" + worst_pos_at + ")");
  result.notes.push_back(
      "the closed-form lag-1 covariance rate is +inf at its own almost-sure limit once "
      "|theta| exceeds about 0.786 (the limit point crosses the finiteness cutoff), so the "
      "coefficient set here stays at |theta| <= 0.6");
  finalize(result);
  return result;
}

// --- criterion 6 ---------------------------------------------------------

CriterionResult criterion_domain_agreement(const VerifyOptions&) {
  CriterionResult result;
  result.id = 6;
  result.title = "region classification matches finite-n positive definiteness";

  constexpr double kMargin = 1e-3;
  constexpr std::size_t kN = 256;
  std::size_t tested = 0, skipped = 0, mismatches = 0;
  std::string first_mismatch;
  for (double theta : {0.5, 0.9}) {
    for (double l1 : linspace(-3.0, 1.0, 200)) {
      for (double l2 : linspace(-3.0, 3.0, 200)) {
        const LambdaPair lambda{l1, l2};
        const bool inside = in_domain(lambda, theta);
        // Margin filter: the classification must be stable under 1e-3
        // box perturbations, otherwise the point is within 1e-3 of the
        // boundary and is skipped.
        bool stable = true;
        for (double d1 : {-kMargin, kMargin}) {
          for (double d2 : {-kMargin, kMargin}) {
            stable = stable && (in_domain({l1 + d1, l2 + d2}, theta) == inside);
          }
        }
        if (!stable) {
          ++skipped;
          continue;
        }
        ++tested;
        const bool pd = is_positive_definite(d_matrix(lambda, theta, kN));
        if (pd != inside) {
          ++mismatches;
          if (first_mismatch.empty()) {
            first_mismatch = "lambda = (" + fmt(l1) + ", " + fmt(l2) + "), theta = " + fmt(theta) +
                             (inside ? " inside but not PD" : " outside but PD");
          }
        }
      }
    }
  }
  add_check(result, "PD at n = 256 iff inside the region, margin 1e-3, 2 x 200 x 200 grid",
            mismatches == 0,
            std::to_string(mismatches) + " mismatches over " + std::to_string(tested) +
                " margin-stable points (" + std::to_string(skipped) + " near-boundary skipped)" +
                (first_mismatch.empty() ? "" : "; first: " + first_mismatch));
  finalize(result);
  return result;
}

// --- criterion 7 ---------------------------------------------------------

double cubic_residual(double x, double phi, double lam) {
  const double phi_sq = phi * phi;
  const double k = (phi_sq - 1.0) * (phi_sq - 1.0);
  const double a = 4.0 * x * x * k;
  const double b = 4.0 * x * (k - x * (phi_sq + 1.0));
  const double c = x * x - 4.0 * x * (phi_sq + 1.0) + k;
  const double d = x - phi_sq - 1.0;
  return ((a * lam + b) * lam + c) * lam + d;
}

// Two-stage grid maximization of lambda -> x*lambda - l(lambda, phi).
double dual_grid_max(double x, double phi) {
  const double edge = 1.0 + std::abs(phi);
  const double thr = 1.0 / (2.0 * edge * edge);
  const auto objective = [&](double lam) { return x * lam - l_limit_ma1_qm(lam, phi); };
  double best_lam = 0.0;
  double best = -kInf;
  const auto scan = [&](double lo, double hi, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i) {
      const double lam = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m - 1);
      const double v = objective(lam);
      if (v > best) {
        best = v;
        best_lam = lam;
      }
    }
  };
  scan(-30.0, thr - 1e-12, 20001);
  const double coarse_step = (thr - 1e-12 + 30.0) / 20000.0;
  scan(best_lam - 2.0 * coarse_step, std::min(best_lam + 2.0 * coarse_step, thr - 1e-12), 4001);
  return best;
}

CriterionResult criterion_ma_dual(const VerifyOptions&) {
  CriterionResult result;
  result.id = 7;
  result.title = "MA(1) dual point: cubic root, dual grid, radical form";

  double worst_residual = 0.0;
  double worst_grid_gap = 0.0;
  double worst_imag = 0.0;
  double worst_radical_gap = 0.0;
  bool all_admissible = true;
  for (double phi : {0.2, 0.4, 0.6, 0.8}) {
    const double thr = 1.0 / (2.0 * (1.0 + phi) * (1.0 + phi));
    for (double x : linspace(0.05, 5.0, 200)) {
      const double lam = lambda_phi(x, phi);
      worst_residual = std::max(worst_residual, std::abs(cubic_residual(x, phi, lam)));
      all_admissible = all_admissible && lam < thr;
      worst_grid_gap = std::max(worst_grid_gap, std::abs(rate_k_phi(x, phi) - dual_grid_max(x, phi)));
      const ComplexFormResult radical = lambda_phi_complex_form(x, phi);
      worst_imag = std::max(worst_imag, radical.imag_residue);
      worst_radical_gap = std::max(worst_radical_gap, std::abs(radical.lambda - lam));
    }
  }
  add_check(result, "cubic residual at the selected root <= 1e-9 (4 phi x 200 x)",
            worst_residual <= 1e-9, "max |residual| = " + fmt(worst_residual));
  add_check(result, "every selected root is below the finiteness threshold", all_admissible,
            all_admissible ? "yes" : "no");
  add_check(result, "rate matches a dense dual grid search to 1e-6", worst_grid_gap <= 1e-6,
            "max gap " + fmt(worst_grid_gap));
  add_check(result, "radical form: imaginary residue <= 1e-9", worst_imag <= 1e-9,
            "max residue " + fmt(worst_imag));
  add_check(result, "radical form agrees with the cubic root to 1e-8", worst_radical_gap <= 1e-8,
            "max gap " + fmt(worst_radical_gap));
  finalize(result);
  return result;
}

// --- criterion 8 ---------------------------------------------------------

CriterionResult criterion_monte_carlo(const VerifyOptions& options) {
  CriterionResult result;
  result.id = 8;
  result.title = "Monte Carlo decay slopes match the predicted rates";

  struct Case {
    const char* label;
    ProcessParams params;
    EventSpec event;
    double target;
    double rel_tol;
  };
  const std::vector<Case> cases = {
      {"quad mean >= 2, theta = 0", Ar1Params(0.0),
       {Statistic::quad_mean, EventKind::tail_ge, 2.0, {0.0, 0.0}, 0.0}, 0.153426, 0.20},
      {"ratio estimator >= 0.7, theta = 0.5", Ar1Params(0.5),
       {Statistic::yule_walker, EventKind::tail_ge, 0.7, {0.0, 0.0}, 0.0}, 0.037757, 0.25},
  };
  for (const Case& test : cases) {
    const double theory = theoretical_event_rate(test.params, test.event);
    add_check(result,
              std::string(test.label) + ": closed-form event rate matches the pinned target",
              std::abs(theory - test.target) <= 2e-4,
              "rate " + fmt(theory) + " vs target " + fmt(test.target));
    try {
      const RateEstimate estimate = estimate_rate(test.params, test.event, options.n_grid,
                                                  options.replicates, options.seed);
      const double rel = std::abs(estimate.slope - test.target) / test.target;
      std::ostringstream detail;
      detail << "slope " << fmt(estimate.slope) << " (std error " << fmt(estimate.std_error)
             << ", target " << fmt(test.target) << ", rel gap " << fmt(rel) << ", "
             << estimate.n_grid.size() << " cells";
      if (!estimate.dropped.empty()) {
        detail << ", dropped n =";
        for (std::size_t n : estimate.dropped) detail << " " << n;
      }
      detail << ")";
      add_check(result,
                std::string(test.label) + ": slope within " +
                    fmt(100.0 * test.rel_tol) + "% of the predicted rate",
                rel <= test.rel_tol, detail.str());
      for (const std::string& w : estimate.warnings) {
        result.notes.push_back(std::string(test.label) + ": " + w);
      }
    } catch (const std::exception& ex) {
      add_check(result, std::string(test.label) + ": slope estimate", false,
                std::string("estimation failed: ") + ex.what());
    }
  }
  finalize(result);
  return result;
}

// --- criterion 9 ---------------------------------------------------------

Table make_figure_table(int figure) {
  switch (figure) {
    case 1:
      return domain_grid({0.9}, parse_grid("-3:0.5:201"), parse_grid("-3:3:201"), std::nullopt);
    case 2:
      return domain_grid({0.9}, parse_grid("-3:0.5:201"), parse_grid("-3:3:201"), 256);
    case 3:
      return rate_grid(RateFn::J, {0.3}, parse_grid("0.03:3:100"), parse_grid("-2.97:2.97:199"));
    case 4:
      return rate_grid(RateFn::I1, {0.0, 0.3, 0.6, 0.9}, parse_grid("0.1:10:100"), std::nullopt);
    case 5:
      return rate_grid(RateFn::I2, {-0.99, -0.6, 0.0, 0.6, 0.99}, parse_grid("-4:4:201"),
                       std::nullopt);
    case 6:
      return rate_grid(RateFn::Itheta, {-0.5, 0.0, 0.5}, parse_grid("-0.99:0.99:199"),
                       std::nullopt);
    case 7:
      return rate_grid(RateFn::IXbar, {-0.5, 0.0, 0.5}, parse_grid("-10:10:201"), std::nullopt);
    case 8:
      return rate_grid(RateFn::Kphi, {0.2, 0.4, 0.6, 0.8}, parse_grid("0.05:5:100"), std::nullopt);
    default:
      throw std::invalid_argument("figure number must be 1..8");
  }
}

std::string table_to_csv_string(const Table& table) {
  std::ostringstream out;
  table.to_csv(out);
  return out.str();
}

CriterionResult criterion_figures(const VerifyOptions&) {
  CriterionResult result;
  result.id = 9;
  result.title = "figure grids are byte-stable and show the captioned features";

  bool all_stable = true;
  std::string unstable;
  std::vector<Table> tables;
  tables.reserve(8);
  for (int figure = 1; figure <= 8; ++figure) {
    Table first = make_figure_table(figure);
    const Table second = make_figure_table(figure);
    if (table_to_csv_string(first) != table_to_csv_string(second)) {
      all_stable = false;
      if (unstable.empty()) unstable = "figure " + std::to_string(figure);
    }
    tables.push_back(std::move(first));
  }
  add_check(result, "all 8 figure grids serialize byte-identically on re-generation", all_stable,
            all_stable ? "stable" : ("first unstable: " + unstable));

  // Figure 1: both sub-regions visible at theta = 0.9.
  {
    std::size_t d1 = 0, d2 = 0, outside = 0;
    for (const auto& row : tables[0].rows) {
      if (row[3] == "D1") ++d1;
      else if (row[3] == "D2") ++d2;
      else ++outside;
    }
    add_check(result, "figure 1: D1, D2 and Outside all present", d1 > 0 && d2 > 0 && outside > 0,
              "D1 " + std::to_string(d1) + ", D2 " + std::to_string(d2) + ", Outside " +
                  std::to_string(outside));
  }
  // Figure 2: every in-region point is PD at n = 256; some outside point is not.
  {
    bool inside_all_pd = true;
    bool outside_has_failure = false;
    for (const auto& row : tables[1].rows) {
      if (row[3] != "Outside" && row[4] != "1") inside_all_pd = false;
      if (row[3] == "Outside" && row[4] == "0") outside_has_failure = true;
    }
    add_check(result, "figure 2: union region is PD at n = 256, with failures outside",
              inside_all_pd && outside_has_failure,
              std::string(inside_all_pd ? "in-region all PD" : "PD failure inside region") +
                  (outside_has_failure ? ", non-PD points outside present" : ", no non-PD outside"));
  }
  // Figure 3: finite exactly on |y| < x, with the zero inside the window.
  {
    bool pattern = true;
    double min_finite = kInf;
    for (const auto& row : tables[2].rows) {
      const double x = std::stod(row[0]);
      const double y = std::stod(row[1]);
      const bool is_inf = row[3] == "inf";
      if (is_inf != (std::abs(y) >= x)) pattern = false;
      if (!is_inf) min_finite = std::min(min_finite, std::stod(row[3]));
    }
    add_check(result, "figure 3: value is inf exactly off {|y| < x}; minimum near zero",
              pattern && min_finite <= 0.002,
              std::string(pattern ? "pattern holds" : "pattern violated") +
                  ", min finite value " + fmt(min_finite));
  }
  // Figure 4: each curve dips to ~0 at quad-mean limit 1/(1-theta^2).
  {
    double worst_arg = 0.0, worst_min = 0.0;
    for (double theta : {0.0, 0.3, 0.6, 0.9}) {
      double best = kInf, best_c = 0.0;
      for (const auto& row : tables[3].rows) {
        if (std::stod(row[1]) != theta) continue;
        const double v = row[2] == "inf" ? kInf : std::stod(row[2]);
        if (v < best) {
          best = v;
          best_c = std::stod(row[0]);
        }
      }
      worst_min = std::max(worst_min, best);
      worst_arg = std::max(worst_arg, std::abs(best_c - 1.0 / (1.0 - theta * theta)));
    }
    add_check(result, "figure 4: minima sit at the quad-mean limits within one grid step",
              worst_arg <= 0.11 && worst_min <= 0.0035,
              "max argmin gap " + fmt(worst_arg) + ", max min value " + fmt(worst_min));
  }
  // Figure 5: finite/inf switch at the captioned blow-up abscissas.
  {
    bool cutoffs_ok = true;
    std::string cutoff_detail;
    const double top = 11.0 + 5.0 * std::sqrt(5.0);
    const double denominators[3] = {2.0, 3.699, 7.841};
    const double abs_thetas[3] = {0.0, 0.6, 0.99};
    for (int i = 0; i < 3; ++i) {
      const double denom = 2.0 * (1.0 + abs_thetas[i] * abs_thetas[i]) *
                           (1.0 + abs_thetas[i] * abs_thetas[i]);
      if (std::abs(denom - denominators[i]) > 0.01) cutoffs_ok = false;
      const double cutoff_abs = std::sqrt(top / denom);
      double max_finite = 0.0, min_inf = kInf;
      for (const auto& row : tables[4].rows) {
        const double theta = std::stod(row[1]);
        if (std::abs(std::abs(theta) - abs_thetas[i]) > 1e-12) continue;
        const double c = std::abs(std::stod(row[0]));
        if (row[2] == "inf") {
          min_inf = std::min(min_inf, c);
        } else {
          max_finite = std::max(max_finite, c);
        }
      }
      if (!(max_finite < cutoff_abs && cutoff_abs <= min_inf + 1e-12)) cutoffs_ok = false;
      if (cutoff_detail.empty() && !cutoffs_ok) {
        cutoff_detail = "|theta| = " + fmt(abs_thetas[i]) + ": finite up to " + fmt(max_finite) +
                        ", inf from " + fmt(min_inf) + ", cutoff " + fmt(cutoff_abs);
      }
    }
    add_check(result, "figure 5: blow-up abscissas match the captioned cutoffs", cutoffs_ok,
              cutoffs_ok ? "all three cutoffs bracketed by the grid switch" : cutoff_detail);
  }
  // Figure 6: zero of each curve at c = theta within one grid step.
  {
    double worst = 0.0;
    for (double theta : {-0.5, 0.0, 0.5}) {
      double best = kInf, best_c = 0.0;
      for (const auto& row : tables[5].rows) {
        if (std::stod(row[1]) != theta) continue;
        const double v = std::stod(row[2]);
        if (v < best) {
          best = v;
          best_c = std::stod(row[0]);
        }
      }
      worst = std::max(worst, std::abs(best_c - theta));
    }
    add_check(result, "figure 6: each curve vanishes at c = theta within one grid step",
              worst <= 0.011, "max argmin gap " + fmt(worst));
  }
  // Figure 7: exact parabola c^2 (1-theta)^2 / 2.
  {
    double worst = 0.0;
    for (const auto& row : tables[6].rows) {
      const double c = std::stod(row[0]);
      const double theta = std::stod(row[1]);
      worst = std::max(worst,
                       std::abs(std::stod(row[2]) - c * c * (1.0 - theta) * (1.0 - theta) / 2.0));
    }
    add_check(result, "figure 7: values equal the closed-form parabola", worst <= 1e-12,
              "max gap " + fmt(worst));
  }
  // Figure 8: minima at the MA(1) quad-mean limits 1 + phi^2.
  {
    double worst_arg = 0.0, worst_min = 0.0;
    for (double phi : {0.2, 0.4, 0.6, 0.8}) {
      double best = kInf, best_x = 0.0;
      for (const auto& row : tables[7].rows) {
        if (std::stod(row[1]) != phi) continue;
        const double v = row[2] == "inf" ? kInf : std::stod(row[2]);
        if (v < best) {
          best = v;
          best_x = std::stod(row[0]);
        }
      }
      worst_min = std::max(worst_min, best);
      worst_arg = std::max(worst_arg, std::abs(best_x - (1.0 + phi * phi)));
    }
    add_check(result, "figure 8: minima sit at 1 + phi^2 within one grid step",
              worst_arg <= 0.06 && worst_min <= 1e-3,
              "max argmin gap " + fmt(worst_arg) + ", max min value " + fmt(worst_min));
  }
  finalize(result);
  return result;
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  switch (id) {
    case 1:
      result = criterion_cgf_convergence(options);
      break;
    case 2:
      result = criterion_route_equivalence(options);
      break;
    case 3:
      result = criterion_duality(options);
      break;
    case 4:
      result = criterion_contractions(options);
      break;
    case 5:
      result = criterion_zeros(options);
      break;
    case 6:
      result = criterion_domain_agreement(options);
      break;
    case 7:
      result = criterion_ma_dual(options);
      break;
    case 8:
      result = criterion_monte_carlo(options);
      break;
    case 9:
      result = criterion_figures(options);
      break;
    default:
      throw std::invalid_argument("criterion id must be in 1..9, got " + std::to_string(id));
  }
  const auto end = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(end - start).count();
  return result;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "closed-forms") return {3, 4, 5, 7};
  if (suite == "domains") return {6};
  if (suite == "convergence") return {1, 2};
  if (suite == "montecarlo") return {8};
  throw std::invalid_argument("unknown suite '" + suite +
                              "'; expected closed-forms, domains, convergence or montecarlo");
}

}  // namespace ldp
