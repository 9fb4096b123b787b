#include "ldp/toeplitz.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace ldp {

namespace {

void require_ar1_coefficient(double theta) {
  if (!(std::abs(theta) < 1.0)) {
    throw std::invalid_argument("AR(1) coefficient must satisfy |theta| < 1, got theta = " +
                                std::to_string(theta));
  }
}

}  // namespace

TriDiag ar1_precision(double theta, std::size_t n) {
  require_ar1_coefficient(theta);
  if (n == 0) throw std::invalid_argument("matrix size must be >= 1");
  return {n, 1.0, 1.0 + theta * theta, -theta};
}

TriDiag d_matrix(const LambdaPair& lambda, double theta, std::size_t n) {
  TriDiag m = ar1_precision(theta, n);
  m.corner -= 2.0 * lambda.lambda1;
  m.interior -= 2.0 * lambda.lambda1;
  m.off -= lambda.lambda2;
  return m;
}

std::vector<double> pivot_sequence(const TriDiag& m) {
  if (m.n == 0) throw std::invalid_argument("matrix size must be >= 1");
  std::vector<double> pivots(m.n);
  const double q_sq = m.off * m.off;
  double r = m.corner;
  pivots[0] = r;
  for (std::size_t k = 1; k < m.n; ++k) {
    if (!(r > 0.0)) {
      // Factorization broke down at the previous step; freeze the sequence.
      for (std::size_t j = k; j < m.n; ++j) pivots[j] = r;
      return pivots;
    }
    const double diag = (k + 1 == m.n) ? m.corner : m.interior;
    r = diag - q_sq / r;
    pivots[k] = r;
  }
  return pivots;
}

bool is_positive_definite(const TriDiag& m) {
  if (m.n == 0) throw std::invalid_argument("matrix size must be >= 1");
  const double q_sq = m.off * m.off;
  double r = m.corner;
  if (!(r > 0.0)) return false;
  for (std::size_t k = 1; k < m.n; ++k) {
    const double diag = (k + 1 == m.n) ? m.corner : m.interior;
    r = diag - q_sq / r;
    if (!(r > 0.0)) return false;
  }
  return true;
}

FixedPoints g_map_fixed_points(double p, double q) {
  const double disc = p * p - 4.0 * q * q;
  if (!(disc > 0.0)) {
    throw std::invalid_argument("pivot map needs p^2 > 4 q^2 for distinct real fixed points; got p = " +
                                std::to_string(p) + ", q = " + std::to_string(q));
  }
  const double s = std::sqrt(disc);
  return {(p - s) / 2.0, (p + s) / 2.0};
}

DomainRegion domain_membership(const LambdaPair& lambda, double theta) {
  require_ar1_coefficient(theta);
  const double l1 = lambda.lambda1;
  const double l2 = lambda.lambda2;
  const double theta_sq = theta * theta;
  const double p = 1.0 + theta_sq - 2.0 * l1;
  const double tq = theta + l2;
  if (l1 <= (1.0 - theta_sq) / 2.0) {
    if (4.0 * tq * tq < p * p) return DomainRegion::D1;
    return DomainRegion::Outside;
  }
  if (l1 < 0.5 && tq * tq < theta_sq * (1.0 - 2.0 * l1)) return DomainRegion::D2;
  return DomainRegion::Outside;
}

std::vector<double> product_eigenvalues(const LambdaPair& lambda, double theta, std::size_t n,
                                        std::size_t dense_cap) {
  require_ar1_coefficient(theta);
  if (n == 0) throw std::invalid_argument("matrix size must be >= 1");
  if (n > dense_cap) {
    throw std::invalid_argument("dense eigendecomposition capped at n = " +
                                std::to_string(dense_cap) + ", got n = " + std::to_string(n));
  }
  const Eigen::Index size = static_cast<Eigen::Index>(n);

  // Covariance theta^{|i-j|} / (1 - theta^2) from a precomputed power table.
  std::vector<double> powers(n);
  powers[0] = 1.0 / (1.0 - theta * theta);
  for (std::size_t k = 1; k < n; ++k) powers[k] = powers[k - 1] * theta;
  Eigen::MatrixXd cov(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j)
      cov(i, j) = powers[static_cast<std::size_t>(std::abs(i - j))];

  Eigen::MatrixXd symbol = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    symbol(i, i) = lambda.lambda1;
    if (i + 1 < size) {
      symbol(i, i + 1) = lambda.lambda2 / 2.0;
      symbol(i + 1, i) = lambda.lambda2 / 2.0;
    }
  }

  // cov * symbol is similar to sqrt(cov) * symbol * sqrt(cov), which is
  // symmetric; eigensolving the latter keeps the spectrum exactly real.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> cov_eig(cov);
  if (cov_eig.info() != Eigen::Success) {
    throw std::runtime_error("covariance eigendecomposition failed");
  }
  const Eigen::MatrixXd root = cov_eig.operatorSqrt();
  Eigen::MatrixXd conjugated = root * symbol * root;
  conjugated = ((conjugated + conjugated.transpose()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> prod_eig(conjugated, Eigen::EigenvaluesOnly);
  if (prod_eig.info() != Eigen::Success) {
    throw std::runtime_error("product eigendecomposition failed");
  }
  const auto& vals = prod_eig.eigenvalues();
  return std::vector<double>(vals.data(), vals.data() + vals.size());
}

}  // namespace ldp
