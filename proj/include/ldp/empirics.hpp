#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ldp/model.hpp"

namespace ldp {

// Either process family; the statistic/rate dispatch below depends on which
// alternative is held.
using ProcessParams = std::variant<Ar1Params, Ma1Params>;

// Path statistic a rare event is expressed in.
enum class Statistic {
  quad_mean,     // (1/n) sum x_k^2
  lag1_cov,      // (1/n) sum_{k>=2} x_k x_{k-1}
  yule_walker,   // ratio estimator of the lag-1 coefficient
  sample_mean,   // (1/n) sum x_k
  w_pair,        // (quad_mean, lag1_cov)
  s_pair,        // (sample_mean, quad_mean)
};

enum class EventKind { tail_ge, tail_le, ball };

// A rare event. Tail kinds apply to scalar statistics and use `level`;
// balls use `center` (center[0] alone for scalar statistics) and `radius`.
struct EventSpec {
  Statistic statistic = Statistic::quad_mean;
  EventKind kind = EventKind::tail_ge;
  double level = 0.0;
  double center[2] = {0.0, 0.0};
  double radius = 0.0;
};

// Monte Carlo decay-rate estimate. `slope` is the negated least-squares
// slope of log probability against n — the empirical counterpart of the
// theoretical rate — and `std_error` its binomial delta-method standard
// error. Cells whose hit count is zero are dropped (listed in `dropped`,
// with a warning); the surviving cells are what n_grid/log_prob/counts hold.
struct RateEstimate {
  std::vector<std::size_t> n_grid;
  std::vector<double> log_prob;
  std::vector<std::uint64_t> counts;
  std::vector<std::size_t> dropped;
  std::vector<std::string> warnings;
  double slope = 0.0;
  double std_error = 0.0;
  std::uint64_t replicates = 0;
  std::uint64_t seed = 0;
};

struct EstimateOptions {
  // 0 means one chunk per available hardware thread. The chunked counts are
  // reduced deterministically, so the result is independent of this value.
  std::size_t threads = 0;
  // Cells with fewer hits than this get a stability warning.
  std::uint64_t min_hits_warning = 10;
};

// Estimates P(statistic in event) for each n by direct simulation and fits
// the exponential decay rate. Replicate r of cell n draws its path from the
// derived seed mix_seed(mix_seed(seed, n), r), so any cell or replicate can
// be reproduced in isolation. Fewer than 3 surviving cells is an error (no
// meaningful fit), as is a pair-statistic tail event.
RateEstimate estimate_rate(const ProcessParams& params, const EventSpec& event,
                           const std::vector<std::size_t>& n_grid, std::uint64_t replicates,
                           std::uint64_t seed, const EstimateOptions& options = {});

// The rate-function prediction for the same event: the infimum of the
// matching rate over the event set. Tails of scalar statistics use the
// boundary value (the rates are monotone on each side of their zero); balls
// are minimized numerically. Statistics with no closed-form rate for the
// given process (MA(1) lag-1 and ratio estimators, MA(1) w_pair) are
// reported as unsupported.
double theoretical_event_rate(const ProcessParams& params, const EventSpec& event);

}  // namespace ldp
