#pragma once

#include <cstddef>
#include <vector>

#include "ldp/spectral.hpp"

namespace ldp {

// Symmetric tridiagonal matrix with equal corner entries:
//   diag = (corner, interior, ..., interior, corner), off-diagonal = off.
// For n <= 2 only `corner` and `off` are meaningful.
struct TriDiag {
  std::size_t n = 0;
  double corner = 0.0;
  double interior = 0.0;
  double off = 0.0;
};

// Fixed points of the pivot map a -> interior - off^2 / a (see pivot_sequence).
// attractor > repulsor; iteration converges to the attractor from any start
// above the repulsor.
struct FixedPoints {
  double repulsor = 0.0;
  double attractor = 0.0;
};

// Classification of a coefficient pair against the region where the limiting
// cumulant generating function is finite. The region splits into two pieces
// with different boundary behaviour:
//   D1: lambda1 <= (1 - theta^2)/2  and  4*(theta + lambda2)^2 < (1 + theta^2 - 2*lambda1)^2
//   D2: (1 - theta^2)/2 < lambda1 < 1/2  and  (theta + lambda2)^2 < theta^2 * (1 - 2*lambda1)
enum class DomainRegion { D1, D2, Outside };

// Inverse covariance of n stationary AR(1) observations (unit innovations):
// tridiagonal with corner 1, interior 1 + theta^2, off-diagonal -theta.
// Its determinant is 1 - theta^2 for every n >= 2.
TriDiag ar1_precision(double theta, std::size_t n);

// The matrix I - 2 * T_n(phi_lambda) preconditioned by the AR(1) precision:
// ar1_precision minus twice the tridiagonal Toeplitz matrix with diagonal
// lambda1 and off-diagonal lambda2 / 2. Positive definiteness of this matrix
// is what keeps the finite-n cumulant generating function finite.
TriDiag d_matrix(const LambdaPair& lambda, double theta, std::size_t n);

// Pivots of the LDL^T factorization, computed by the scalar recursion
//   r_1 = corner,   r_k = interior - off^2 / r_{k-1}   (2 <= k <= n-1),
//   r_n = corner - off^2 / r_{n-1}.
// If some pivot fails to be strictly positive the recursion stops there and
// the remaining slots repeat that first nonpositive value, so callers can
// both detect failure and see where it happened.
// Example: corner 1, interior 5, off 2, n = 4 -> (1, 1, 1, -3).
std::vector<double> pivot_sequence(const TriDiag& m);

// True iff every pivot is strictly positive.
bool is_positive_definite(const TriDiag& m);

// Fixed points (p -+ sqrt(p^2 - 4 q^2)) / 2 of the pivot map a -> p - q^2/a.
// Requires p^2 > 4 q^2 (real, distinct fixed points); otherwise reports the
// violated precondition. Examples: (5, 2) -> (1, 4); (2, 0) -> (0, 2).
FixedPoints g_map_fixed_points(double p, double q);

// Exact inequality test of (lambda, theta) against D1 / D2.
// The origin lies in D1; (0.5, 0) with theta = 0.5 is Outside.
DomainRegion domain_membership(const LambdaPair& lambda, double theta);

// True iff the pair lies in D1 or D2.
inline bool in_domain(const LambdaPair& lambda, double theta) {
  return domain_membership(lambda, theta) != DomainRegion::Outside;
}

// Eigenvalues, in ascending order, of the product of the AR(1) covariance
// [theta^{|i-j|} / (1 - theta^2)] with the tridiagonal Toeplitz matrix of
// phi_lambda. The product is conjugated symmetric via the covariance square
// root, so the returned values are real by construction. Dense
// eigendecomposition; n above dense_cap is rejected with a size error.
std::vector<double> product_eigenvalues(const LambdaPair& lambda, double theta, std::size_t n,
                                        std::size_t dense_cap = 1024);

}  // namespace ldp
