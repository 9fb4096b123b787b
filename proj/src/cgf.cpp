#include "ldp/cgf.hpp"

#include <cmath>
#include <stdexcept>

#include "ldp/extended_real.hpp"
#include "ldp/toeplitz.hpp"

namespace ldp {

double l_n_ar1(const LambdaPair& lambda, double theta, std::size_t n, std::size_t dense_cap) {
  const std::vector<double> alphas = product_eigenvalues(lambda, theta, n, dense_cap);
  double sum = 0.0;
  for (double alpha : alphas) {
    if (!(alpha < 0.5)) return kInf;
    sum += std::log1p(-2.0 * alpha);
  }
  return -sum / (2.0 * static_cast<double>(n));
}

double l_n_ar1_pivot(const LambdaPair& lambda, double theta, std::size_t n) {
  if (n < 2) throw std::invalid_argument("pivot route needs n >= 2");
  const TriDiag d = d_matrix(lambda, theta, n);
  // log det D via the pivots; any nonpositive pivot means the quadratic form
  // is not positive definite and the generating function is infinite.
  const double q_sq = d.off * d.off;
  double r = d.corner;
  if (!(r > 0.0)) return kInf;
  double log_det = std::log(r);
  for (std::size_t k = 1; k < n; ++k) {
    const double diag = (k + 1 == n) ? d.corner : d.interior;
    r = diag - q_sq / r;
    if (!(r > 0.0)) return kInf;
    log_det += std::log(r);
  }
  // det(I - 2 T_n(phi_lambda) Cov_n) = det D / (1 - theta^2).
  log_det -= std::log1p(-theta * theta);
  return -log_det / (2.0 * static_cast<double>(n));
}

namespace {

// Shared closed form; callers guarantee p^2 > 4 q^2 and p > 0.
double limit_closed_form(const LambdaPair& lambda, double theta) {
  const double p = 1.0 + theta * theta - 2.0 * lambda.lambda1;
  const double q = -(theta + lambda.lambda2);
  const double s = std::sqrt(p * p - 4.0 * q * q);
  return -0.5 * std::log((p + s) / 2.0);
}

}  // namespace

double l_limit_ar1(const LambdaPair& lambda, double theta) {
  if (!in_domain(lambda, theta)) return kInf;
  return limit_closed_form(lambda, theta);
}

bool in_continuation_domain(const LambdaPair& lambda, double theta) {
  const double p = 1.0 + theta * theta - 2.0 * lambda.lambda1;
  const double q = theta + lambda.lambda2;
  return p > 2.0 * std::abs(q);
}

double l_limit_ar1_continuation(const LambdaPair& lambda, double theta) {
  if (!in_continuation_domain(lambda, theta)) return kInf;
  return limit_closed_form(lambda, theta);
}

std::array<double, 2> l_limit_ar1_gradient(const LambdaPair& lambda, double theta) {
  if (!in_continuation_domain(lambda, theta)) {
    throw std::invalid_argument("gradient requested outside the continuation region");
  }
  const double p = 1.0 + theta * theta - 2.0 * lambda.lambda1;
  const double q = theta + lambda.lambda2;
  const double s = std::sqrt(p * p - 4.0 * q * q);
  return {1.0 / s, 2.0 * q / (s * (p + s))};
}

double l_limit_ma1_qm(double lambda1, double phi) {
  const double edge = 1.0 + std::abs(phi);
  if (!(lambda1 < 1.0 / (2.0 * edge * edge))) return kInf;
  const double a = 1.0 - 2.0 * lambda1 * (1.0 + phi * phi);
  // a^2 - 16 lambda^2 phi^2 factors as the product below; both factors are
  // strictly positive on the finiteness region, which keeps the square root
  // accurate near the boundary.
  const double f1 = 1.0 - 2.0 * lambda1 * (1.0 + phi) * (1.0 + phi);
  const double f2 = 1.0 - 2.0 * lambda1 * (1.0 - phi) * (1.0 - phi);
  const double s = std::sqrt(f1 * f2);
  return -0.5 * std::log((a + s) / 2.0);
}

}  // namespace ldp
