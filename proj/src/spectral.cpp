#include "ldp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ldp {

namespace {

// Reduce a frequency to the principal circle [-pi, pi).
double reduce_frequency(double omega) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(omega, two_pi);
  if (w < -std::numbers::pi) w += two_pi;
  if (w >= std::numbers::pi) w -= two_pi;
  return w;
}

void require_ar1_coefficient(double theta) {
  if (!(std::abs(theta) < 1.0)) {
    throw std::invalid_argument("AR(1) coefficient must satisfy |theta| < 1, got theta = " +
                                std::to_string(theta));
  }
}

}  // namespace

double g_theta(double omega, double theta) {
  require_ar1_coefficient(theta);
  const double w = reduce_frequency(omega);
  return 1.0 / (1.0 + theta * theta - 2.0 * theta * std::cos(w));
}

double h_phi(double omega, double phi) {
  const double w = reduce_frequency(omega);
  return 1.0 + phi * phi + 2.0 * phi * std::cos(w);
}

double phi_lambda(double omega, const LambdaPair& lambda) {
  return lambda.lambda1 + lambda.lambda2 * std::cos(reduce_frequency(omega));
}

SymbolRange product_extrema(const LambdaPair& lambda, double theta) {
  require_ar1_coefficient(theta);
  const double at_zero = (lambda.lambda1 + lambda.lambda2) / ((1.0 - theta) * (1.0 - theta));
  const double at_pi = (lambda.lambda1 - lambda.lambda2) / ((1.0 + theta) * (1.0 + theta));
  return {std::min(at_zero, at_pi), std::max(at_zero, at_pi)};
}

}  // namespace ldp
