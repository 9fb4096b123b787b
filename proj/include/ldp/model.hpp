#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ldp {

// Stationary Gaussian AR(1): X_k = theta * X_{k-1} + eps_k, eps_k iid N(0,1).
// Constructor rejects |theta| >= 1 (no stationary solution).
struct Ar1Params {
  explicit Ar1Params(double theta_in);
  double theta;
};

// Gaussian MA(1): Y_k = eps_k + phi * eps_{k-1}, eps_k iid N(0,1).
// Every real phi is admissible.
struct Ma1Params {
  explicit Ma1Params(double phi_in) : phi(phi_in) {}
  double phi;
};

// One simulated trajectory together with the seed that produced it.
struct SamplePath {
  std::vector<double> values;
  std::uint64_t seed = 0;

  std::size_t n() const { return values.size(); }
};

// Pair statistic (first, second) = ((1/n) sum x_k^2, (1/n) sum_{k>=2} x_k x_{k-1}):
// the quadratic mean and the (biased) lag-1 sample covariance.
struct BivariateStat {
  double first = 0.0;
  double second = 0.0;
};

// Draws an exact stationary AR(1) path of length n: X_1 ~ N(0, 1/(1-theta^2)),
// then the recursion. Identical (params, n, seed) -> identical path on every
// platform. Requires n >= 1.
SamplePath simulate_ar1(const Ar1Params& params, std::size_t n, std::uint64_t seed);

// Draws an MA(1) path of length n from n+1 innovations (the path is
// stationary from the first observation). Requires n >= 1.
SamplePath simulate_ma1(const Ma1Params& params, std::size_t n, std::uint64_t seed);

// W-statistic of a path: (quadratic mean, lag-1 sample covariance).
// Requires n >= 2. Example: path (1, 1, 1) -> (1, 2/3).
BivariateStat stat_w(const SamplePath& path);

// S-statistic of a path: ((1/n) sum x_k, (1/n) sum x_k^2). Requires n >= 1.
BivariateStat stat_s(const SamplePath& path);

// Ratio estimator sum_{k>=2} x_k x_{k-1} / sum_{k=1}^{n} x_k^2 of the AR(1)
// coefficient — the ratio of the two W-statistic components. Requires n >= 2;
// a zero denominator (all entries zero) is reported as a degenerate-input
// error rather than a NaN.
// Examples: (1, 2, 1) -> 2/3; a constant nonzero path of length n -> (n-1)/n.
double yule_walker(const SamplePath& path);

}  // namespace ldp
