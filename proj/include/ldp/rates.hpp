#pragma once

#include "ldp/spectral.hpp"

namespace ldp {

// Closed-form large-deviation rate functions for path statistics of the
// stationary Gaussian AR(1) and MA(1) processes (unit innovation variance).
//
// Conventions shared by every function here:
//  * rates take values in [0, +inf]; outside the (open) effective domain the
//    value is +inf, never NaN — boundary points count as outside;
//  * each rate vanishes exactly at the almost-sure limit of its statistic;
//  * *_minimizer_* accessors return the argmin realizing a contraction
//    (infimum over a slice of the pair rate) and report a domain error when
//    the contraction value is infinite.

// --- AR(1), pair statistic (quadratic mean, lag-1 sample covariance) ---

// Joint rate of the pair statistic:
//   J(x, y) = (1/2) [ x (1 + theta^2) - 1 - 2 y theta + log(x / (x^2 - y^2)) ]
// on {x > 0, |y| < x}, +inf elsewhere.
double rate_j(double x, double y, double theta);

// The unique maximizer of x*lambda1 + y*lambda2 - l(lambda) over the
// continuation region (cgf.hpp), in closed form:
//   lambda1 = (1 + theta^2)/2 - (x^2 + y^2) / (2 x (x^2 - y^2)),
//   lambda2 = y / (x^2 - y^2) - theta.
// Throws outside {x > 0, |y| < x}.
LambdaPair optimal_lambda_j(double x, double y, double theta);

// Rate of the quadratic mean alone (contraction of J over y along x = c):
//   I1(c) = (1/2) [ c (1 + theta^2) - R - log(2c / (1 + R)) ],  R = sqrt(1 + 4 theta^2 c^2),
// for c > 0, +inf otherwise.
double rate_i1(double c, double theta);

// The y realizing the contraction inf_y J(c, y) = I1(c); requires c > 0.
double i1_minimizer_y(double c, double theta);

// Rate of the lag-1 sample covariance alone (contraction of J over x along
// y = c). Finite iff c^2 < i2_cutoff_csq(theta); the minimizing x is
//   x_c = (1 + 3u + A + A^2) / (3 (1 + theta^2) A),  u = c^2 (1 + theta^2)^2,
// with A = a2(c, theta), and I2(c) = J(x_c, c).
double rate_i2(double c, double theta);

// Cube-root auxiliary A = cbrt(1 + 18u + 3 sqrt(3) sqrt(u (1 + 11u - u^2))).
// Throws when c^2 >= i2_cutoff_csq(theta) (the radicand turns negative).
double a2(double c, double theta);

// The x realizing inf_x J(x, c) when finite; throws beyond the cutoff.
double i2_minimizer_x(double c, double theta);

// Finiteness threshold of rate_i2: c^2 < (11 + 5 sqrt(5)) / (2 (1 + theta^2)^2).
double i2_cutoff_csq(double theta);

// Rate of the lag-1 autocorrelation ratio estimator (contraction of J along
// the ray y = c x):
//   (1/2) log( (1 + theta^2 - 2 theta c) / (1 - c^2) )  for |c| < 1, +inf otherwise.
double rate_yule_walker(double c, double theta);

// The x realizing inf_x J(x, c x): 1 / (1 + theta^2 - 2 theta c); requires |c| < 1.
double yw_minimizer_x(double c, double theta);

// --- AR(1), pair statistic (sample mean, quadratic mean) ---

// Joint rate of (mean, quadratic mean):
//   J_S(x, y) = (1/2) [ y (1 + theta^2) - 2 x^2 theta - R - log(2 (y - x^2) / (1 + R)) ],
//   R = sqrt(1 + 4 theta^2 (y - x^2)^2),
// on {y > x^2}, +inf elsewhere. Identically equal to
// rate_i1(y - x^2) + x^2 (1 - theta)^2 / 2 on its domain.
double rate_js(double x, double y, double theta);

// Rate of the AR(1) sample mean: c^2 (1 - theta)^2 / 2.
double rate_sample_mean_ar1(double c, double theta);

// --- MA(1) ---

// The admissible stationary point of lambda -> x * lambda - l_limit_ma1_qm:
// a real root of the cubic
//   4 x^2 (phi^2-1)^2 L^3 + 4 x ((phi^2-1)^2 - x (phi^2+1)) L^2
//     + (x^2 - 4 x (phi^2+1) + (phi^2-1)^2) L + (x - phi^2 - 1) = 0
// selected by maximizing the dual objective among roots below the
// finiteness threshold of the generating function. Requires x > 0.
// For phi = 0 this reduces to (x - 1) / (2 x).
double lambda_phi(double x, double phi);

// Rate of the MA(1) quadratic mean:
//   K(x) = x * lambda_phi(x) - l_limit_ma1_qm(lambda_phi(x), phi)
// for x > 0, +inf otherwise.
double rate_k_phi(double x, double phi);

// Joint rate of the MA(1) (mean, quadratic mean) pair:
//   K_S(x, y) = rate_k_phi(y - x^2) + x^2 / (2 (1 + phi)^2)
// on {y > x^2}, +inf elsewhere (and +inf for x != 0 when phi = -1).
double rate_ks(double x, double y, double phi);

// Rate of the MA(1) sample mean: c^2 / (2 (1 + phi)^2); for phi = -1 it is 0
// at c = 0 and +inf elsewhere.
double rate_sample_mean_ma1(double c, double phi);

// Closed-form radical expression for lambda_phi evaluated with complex
// principal branches. The imaginary part must cancel analytically; its
// floating-point residue is returned so callers can assert it is noise.
// Diagnostic cross-check of the cubic route; requires x > 0 and |phi| != 1.
struct ComplexFormResult {
  double lambda = 0.0;
  double imag_residue = 0.0;
};
ComplexFormResult lambda_phi_complex_form(double x, double phi);

}  // namespace ldp
