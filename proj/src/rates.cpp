#include "ldp/rates.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "ldp/cgf.hpp"
#include "ldp/extended_real.hpp"
#include "cubic_roots.hpp"

namespace ldp {

namespace {

bool in_pair_domain(double x, double y) { return x > 0.0 && std::abs(y) < x; }

// x^2 / (2 (1 + phi)^2) with the phi = -1 degeneracy resolved: 0 at x = 0,
// +inf otherwise.
double mean_quadratic_term(double x, double one_plus_phi) {
  if (x == 0.0) return 0.0;
  if (one_plus_phi == 0.0) return kInf;
  return x * x / (2.0 * one_plus_phi * one_plus_phi);
}

}  // namespace

double rate_j(double x, double y, double theta) {
  if (!in_pair_domain(x, y)) return kInf;
  const double theta_sq = theta * theta;
  return 0.5 * (x * (1.0 + theta_sq) - 1.0 - 2.0 * y * theta +
                std::log(x / (x * x - y * y)));
}

LambdaPair optimal_lambda_j(double x, double y, double theta) {
  if (!in_pair_domain(x, y)) {
    throw std::invalid_argument("pair rate maximizer needs x > 0 and |y| < x");
  }
  const double gap = x * x - y * y;
  return {(1.0 + theta * theta) / 2.0 - (x * x + y * y) / (2.0 * x * gap),
          y / gap - theta};
}

double rate_i1(double c, double theta) {
  if (!(c > 0.0)) return kInf;
  const double r = std::sqrt(1.0 + 4.0 * theta * theta * c * c);
  return 0.5 * (c * (1.0 + theta * theta) - r - std::log(2.0 * c / (1.0 + r)));
}

double i1_minimizer_y(double c, double theta) {
  if (!(c > 0.0)) throw std::invalid_argument("quadratic-mean rate needs c > 0");
  // Rationalized form of (-1 + sqrt(1 + 4 c^2 theta^2)) / (2 theta): stable
  // for small theta and exact (0) at theta = 0.
  return 2.0 * c * c * theta / (1.0 + std::sqrt(1.0 + 4.0 * c * c * theta * theta));
}

double i2_cutoff_csq(double theta) {
  const double scale = 1.0 + theta * theta;
  return (11.0 + 5.0 * std::sqrt(5.0)) / (2.0 * scale * scale);
}

double a2(double c, double theta) {
  const double scale = 1.0 + theta * theta;
  const double u = c * c * scale * scale;
  const double radicand = u * (1.0 + 11.0 * u - u * u);
  if (!(radicand >= 0.0)) {
    throw std::invalid_argument("lag-1 covariance rate auxiliary undefined: c^2 >= cutoff");
  }
  return std::cbrt(1.0 + 18.0 * u + 3.0 * std::sqrt(3.0) * std::sqrt(radicand));
}

double i2_minimizer_x(double c, double theta) {
  if (!(c * c < i2_cutoff_csq(theta))) {
    throw std::invalid_argument("lag-1 covariance rate is infinite at |c| = " +
                                std::to_string(std::abs(c)));
  }
  const double scale = 1.0 + theta * theta;
  const double u = c * c * scale * scale;
  const double a = a2(c, theta);
  return (1.0 + 3.0 * u + a + a * a) / (3.0 * scale * a);
}

double rate_i2(double c, double theta) {
  if (!(c * c < i2_cutoff_csq(theta))) return kInf;
  return rate_j(i2_minimizer_x(c, theta), c, theta);
}

double rate_yule_walker(double c, double theta) {
  if (!(std::abs(c) < 1.0)) return kInf;
  return 0.5 * std::log((1.0 + theta * theta - 2.0 * theta * c) / (1.0 - c * c));
}

double yw_minimizer_x(double c, double theta) {
  if (!(std::abs(c) < 1.0)) {
    throw std::invalid_argument("ratio-estimator rate needs |c| < 1");
  }
  return 1.0 / (1.0 + theta * theta - 2.0 * theta * c);
}

double rate_js(double x, double y, double theta) {
  const double gap = y - x * x;
  if (!(gap > 0.0)) return kInf;
  const double r = std::sqrt(1.0 + 4.0 * theta * theta * gap * gap);
  return 0.5 * (y * (1.0 + theta * theta) - 2.0 * x * x * theta - r -
                std::log(2.0 * gap / (1.0 + r)));
}

double rate_sample_mean_ar1(double c, double theta) {
  return c * c * (1.0 - theta) * (1.0 - theta) / 2.0;
}

double lambda_phi(double x, double phi) {
  if (!(x > 0.0)) throw std::invalid_argument("MA(1) quadratic-mean dual point needs x > 0");
  const double phi_sq = phi * phi;
  const double k = (phi_sq - 1.0) * (phi_sq - 1.0);
  const double a = 4.0 * x * x * k;
  const double b = 4.0 * x * (k - x * (phi_sq + 1.0));
  const double c = x * x - 4.0 * x * (phi_sq + 1.0) + k;
  const double d = x - phi_sq - 1.0;
  const detail::CubicRoots roots = detail::solve_cubic(a, b, c, d);

  double best = 0.0;
  double best_value = -kInf;
  for (std::size_t i = 0; i < roots.count; ++i) {
    const double lam = roots.root[i];
    const double value = x * lam - l_limit_ma1_qm(lam, phi);
    if (std::isfinite(value) && value > best_value) {
      best_value = value;
      best = lam;
    }
  }
  if (best_value == -kInf) {
    throw std::runtime_error("no admissible stationary point for x = " + std::to_string(x) +
                             ", phi = " + std::to_string(phi));
  }
  return best;
}

double rate_k_phi(double x, double phi) {
  if (!(x > 0.0)) return kInf;
  const double lam = lambda_phi(x, phi);
  return x * lam - l_limit_ma1_qm(lam, phi);
}

double rate_ks(double x, double y, double phi) {
  const double gap = y - x * x;
  if (!(gap > 0.0)) return kInf;
  return rate_k_phi(gap, phi) + mean_quadratic_term(x, 1.0 + phi);
}

double rate_sample_mean_ma1(double c, double phi) {
  return mean_quadratic_term(c, 1.0 + phi);
}

ComplexFormResult lambda_phi_complex_form(double x, double phi) {
  if (!(x > 0.0)) throw std::invalid_argument("complex-form dual point needs x > 0");
  const double phi_sq = phi * phi;
  const double e = phi_sq - 1.0;  // powers of (phi^2 - 1) appear throughout
  if (e == 0.0) {
    throw std::invalid_argument("complex-form dual point needs |phi| != 1");
  }
  const double e2 = e * e, e4 = e2 * e2, e6 = e4 * e2;
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x, x8 = x4 * x4;
  const double phi4 = phi_sq * phi_sq, phi6 = phi4 * phi_sq;

  const double a_term = 4.0 * x * (x * (phi_sq + 1.0) - e2);
  const double b_term =
      4.0 * x2 * (x2 * (phi4 + 14.0 * phi_sq + 1.0) + 4.0 * x * (phi_sq + 1.0) * e2 + e4);
  const double inner_real = -x6 * (phi6 - 33.0 * phi4 - 33.0 * phi_sq + 1.0) -
                            6.0 * x5 * e2 * (phi4 - 10.0 * phi_sq + 1.0) +
                            6.0 * x4 * e4 * (phi_sq + 1.0) + x3 * e6;
  const double radicand =
      -x8 * e4 *
      (4.0 * x4 * phi_sq + 32.0 * x3 * (phi4 + phi_sq) +
       x2 * (phi4 + 46.0 * phi_sq + 1.0) * e2 + 6.0 * x * (phi_sq + 1.0) * e4 + e6);

  using cd = std::complex<double>;
  const cd inner = cd(inner_real, 0.0) + 3.0 * std::sqrt(3.0) * std::sqrt(cd(radicand, 0.0));
  const cd croot = std::pow(inner, 1.0 / 3.0);
  const cd c_term = -(cd(1.0, std::sqrt(3.0))) * croot;
  if (std::abs(c_term) == 0.0) {
    throw std::runtime_error("complex-form radical degenerated to zero");
  }
  const cd lam = (cd(a_term, 0.0) + cd(b_term, 0.0) / c_term + c_term) / (12.0 * x2 * e2);
  return {lam.real(), std::abs(lam.imag())};
}

}  // namespace ldp
