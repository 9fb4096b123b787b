#pragma once

namespace ldp {

// Coefficient pair (lambda1, lambda2) of the cosine polynomial
// phi_lambda(w) = lambda1 + lambda2*cos(w). These pairs index the quadratic
// path statistics the library studies; they double as the coordinates of the
// cumulant-generating-function domain.
struct LambdaPair {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

// Essential range [minimum, maximum] of a symbol over the frequency circle.
struct SymbolRange {
  double minimum = 0.0;
  double maximum = 0.0;
};

// Spectral density of the stationary AR(1) process with coefficient theta
// (unit innovation variance), up to the 1/(2*pi) normalization:
//   g_theta(w) = 1 / (1 + theta^2 - 2*theta*cos w).
// Requires |theta| < 1; frequencies are reduced to [-pi, pi) internally, so
// any real w is accepted.
double g_theta(double omega, double theta);

// Spectral symbol of the MA(1) process with coefficient phi:
//   h_phi(w) = 1 + phi^2 + 2*phi*cos w.
double h_phi(double omega, double phi);

// phi_lambda(w) = lambda1 + lambda2*cos(w).
double phi_lambda(double omega, const LambdaPair& lambda);

// Extrema of the product phi_lambda * g_theta over the frequency circle.
//
// The product's derivative vanishes only where sin(w) = 0 (the interior
// critical-point equation has no real solution), so the extrema always sit at
// w = 0 and w = pi:
//   (lambda1 + lambda2) / (1 - theta)^2   and   (lambda1 - lambda2) / (1 + theta)^2.
// The returned range is the min/max of those two endpoint values, which is
// exact for every (lambda, theta) — including the degenerate coefficient
// choice lambda2 = -2*theta*lambda1/(1 + theta^2) that makes the product
// identically constant.
SymbolRange product_extrema(const LambdaPair& lambda, double theta);

}  // namespace ldp
