#pragma once

#include <array>
#include <cstddef>

#include "ldp/spectral.hpp"

namespace ldp {

// Scaled cumulant generating functions of the AR(1) pair statistic
// (quadratic mean, lag-1 sample covariance) and of the MA(1) quadratic mean.
//
// Finite-n value (two interchangeable routes):
//   l_n(lambda) = -(1/2n) * sum_k log(1 - 2 alpha_k),
// where alpha_k are the eigenvalues of covariance * T_n(phi_lambda); +inf as
// soon as any alpha_k >= 1/2. The pivot route reaches the same number through
// the LDL^T pivots of the tridiagonal matrix d_matrix(lambda, theta, n)
// without any dense algebra, so it scales to large n.
//
// Limit value on the domain D1 u D2 (DomainRegion):
//   l(lambda) = -(1/2) * log((p + sqrt(p^2 - 4 q^2)) / 2),
//   p = 1 + theta^2 - 2 lambda1,  q = -(theta + lambda2),
// and +inf outside.

// Eigenvalue route. Requires n >= 1; n beyond dense_cap is rejected
// (use the pivot route for large n).
double l_n_ar1(const LambdaPair& lambda, double theta, std::size_t n,
               std::size_t dense_cap = 1024);

// Pivot route; O(n) time, O(1) memory. Requires n >= 2 (the determinant
// identity it uses needs both corner entries present).
double l_n_ar1_pivot(const LambdaPair& lambda, double theta, std::size_t n);

// Limit of l_n on D1 u D2, +inf outside.
double l_limit_ar1(const LambdaPair& lambda, double theta);

// The same closed form extended to its full convexity region
//   p > 2 |q|,
// which strictly contains D1 u D2 (it also allows lambda1 >= 1/2 when the
// off-diagonal mass is small enough). Convex-duality arguments need this
// extension: maximizers of x.lambda - l(lambda) can land outside D1 u D2 but
// always satisfy p > 2|q|.
bool in_continuation_domain(const LambdaPair& lambda, double theta);
double l_limit_ar1_continuation(const LambdaPair& lambda, double theta);

// Gradient (d/d lambda1, d/d lambda2) of the limit closed form, valid on the
// continuation region: (1/s, 2 (theta + lambda2) / (s (p + s))) with
// s = sqrt(p^2 - 4 q^2).
std::array<double, 2> l_limit_ar1_gradient(const LambdaPair& lambda, double theta);

// Limiting cumulant generating function of the MA(1) quadratic mean:
//   l(lambda) = -(1/2) * log((a + sqrt(a^2 - 16 lambda^2 phi^2)) / 2),
//   a = 1 - 2 lambda (1 + phi^2),
// finite iff lambda < 1 / (2 (1 + |phi|)^2), +inf otherwise.
double l_limit_ma1_qm(double lambda1, double phi);

}  // namespace ldp
