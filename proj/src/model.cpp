#include "ldp/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ldp/rng.hpp"

namespace ldp {

Ar1Params::Ar1Params(double theta_in) : theta(theta_in) {
  if (!(std::abs(theta) < 1.0)) {
    throw std::invalid_argument("AR(1) coefficient must satisfy |theta| < 1, got theta = " +
                                std::to_string(theta));
  }
}

SamplePath simulate_ar1(const Ar1Params& params, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("path length must be >= 1");
  GaussianStream normals(seed);
  SamplePath path;
  path.seed = seed;
  path.values.resize(n);
  // Exact stationary start: X_1 = Z / sqrt(1 - theta^2).
  path.values[0] = normals.next() / std::sqrt(1.0 - params.theta * params.theta);
  for (std::size_t k = 1; k < n; ++k) {
    path.values[k] = params.theta * path.values[k - 1] + normals.next();
  }
  return path;
}

SamplePath simulate_ma1(const Ma1Params& params, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("path length must be >= 1");
  GaussianStream normals(seed);
  SamplePath path;
  path.seed = seed;
  path.values.resize(n);
  double prev_eps = normals.next();
  for (std::size_t k = 0; k < n; ++k) {
    const double eps = normals.next();
    path.values[k] = eps + params.phi * prev_eps;
    prev_eps = eps;
  }
  return path;
}

BivariateStat stat_w(const SamplePath& path) {
  const std::size_t n = path.n();
  if (n < 2) throw std::invalid_argument("W-statistic needs a path of length >= 2");
  double sum_sq = path.values[0] * path.values[0];
  double sum_lag = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    sum_sq += path.values[k] * path.values[k];
    sum_lag += path.values[k] * path.values[k - 1];
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  return {sum_sq * inv_n, sum_lag * inv_n};
}

BivariateStat stat_s(const SamplePath& path) {
  const std::size_t n = path.n();
  if (n == 0) throw std::invalid_argument("S-statistic needs a nonempty path");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double x : path.values) {
    sum += x;
    sum_sq += x * x;
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  return {sum * inv_n, sum_sq * inv_n};
}

double yule_walker(const SamplePath& path) {
  const std::size_t n = path.n();
  if (n < 2) throw std::invalid_argument("ratio estimator needs a path of length >= 2");
  // Ratio of the two W-statistic components: lag-1 sum over full square sum.
  double numer = 0.0;
  double denom = path.values[0] * path.values[0];
  for (std::size_t k = 1; k < n; ++k) {
    numer += path.values[k] * path.values[k - 1];
    denom += path.values[k] * path.values[k];
  }
  if (denom == 0.0) {
    throw std::invalid_argument("ratio estimator is undefined: every path entry is zero");
  }
  return numer / denom;
}

}  // namespace ldp
