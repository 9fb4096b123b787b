#include "ldp/empirics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "ldp/legendre.hpp"
#include "ldp/rates.hpp"
#include "ldp/rng.hpp"

namespace ldp {

namespace {

bool is_pair_statistic(Statistic s) {
  return s == Statistic::w_pair || s == Statistic::s_pair;
}

SamplePath draw_path(const ProcessParams& params, std::size_t n, std::uint64_t seed) {
  if (const auto* ar = std::get_if<Ar1Params>(&params)) return simulate_ar1(*ar, n, seed);
  return simulate_ma1(std::get<Ma1Params>(params), n, seed);
}

double scalar_statistic(const SamplePath& path, Statistic s) {
  switch (s) {
    case Statistic::quad_mean:
      return stat_s(path).second;
    case Statistic::lag1_cov:
      return stat_w(path).second;
    case Statistic::yule_walker:
      return yule_walker(path);
    case Statistic::sample_mean:
      return stat_s(path).first;
    default:
      throw std::invalid_argument("pair statistic where a scalar one is required");
  }
}

BivariateStat pair_statistic(const SamplePath& path, Statistic s) {
  if (s == Statistic::w_pair) return stat_w(path);
  if (s == Statistic::s_pair) return stat_s(path);
  throw std::invalid_argument("scalar statistic where a pair one is required");
}

bool event_contains(const EventSpec& event, const SamplePath& path) {
  if (is_pair_statistic(event.statistic)) {
    const BivariateStat v = pair_statistic(path, event.statistic);
    const double dx = v.first - event.center[0];
    const double dy = v.second - event.center[1];
    return dx * dx + dy * dy <= event.radius * event.radius;
  }
  const double v = scalar_statistic(path, event.statistic);
  switch (event.kind) {
    case EventKind::tail_ge:
      return v >= event.level;
    case EventKind::tail_le:
      return v <= event.level;
    case EventKind::ball:
      return std::abs(v - event.center[0]) <= event.radius;
  }
  return false;
}

std::uint64_t count_hits(const ProcessParams& params, const EventSpec& event, std::size_t n,
                         std::uint64_t replicates, std::uint64_t cell_key, std::size_t threads) {
  const auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t r = begin; r < end; ++r) {
      const SamplePath path = draw_path(params, n, mix_seed(cell_key, r));
      if (event_contains(event, path)) ++hits;
    }
    return hits;
  };

  if (threads <= 1 || replicates < 4096) return count_range(0, replicates);

  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::uint64_t chunk = (replicates + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::uint64_t begin = t * chunk;
    const std::uint64_t end = std::min(replicates, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, t, begin, end] { partial[t] = count_range(begin, end); });
  }
  for (auto& w : workers) w.join();
  std::uint64_t total = 0;
  for (std::uint64_t h : partial) total += h;
  return total;
}

void validate_event(const EventSpec& event) {
  if (event.kind == EventKind::ball) {
    if (!(event.radius >= 0.0)) throw std::invalid_argument("ball radius must be >= 0");
  } else if (is_pair_statistic(event.statistic)) {
    throw std::invalid_argument("tail events need a scalar statistic; use a ball for pairs");
  }
}

// --- theoretical side ----------------------------------------------------

std::function<double(double)> scalar_rate_for(const ProcessParams& params, Statistic s) {
  if (const auto* ar = std::get_if<Ar1Params>(&params)) {
    const double theta = ar->theta;
    switch (s) {
      case Statistic::quad_mean:
        return [theta](double c) { return rate_i1(c, theta); };
      case Statistic::lag1_cov:
        return [theta](double c) { return rate_i2(c, theta); };
      case Statistic::yule_walker:
        return [theta](double c) { return rate_yule_walker(c, theta); };
      case Statistic::sample_mean:
        return [theta](double c) { return rate_sample_mean_ar1(c, theta); };
      default:
        break;
    }
    throw std::invalid_argument("pair statistic where a scalar one is required");
  }
  const double phi = std::get<Ma1Params>(params).phi;
  switch (s) {
    case Statistic::quad_mean:
      return [phi](double c) { return rate_k_phi(c, phi); };
    case Statistic::sample_mean:
      return [phi](double c) { return rate_sample_mean_ma1(c, phi); };
    case Statistic::lag1_cov:
    case Statistic::yule_walker:
      throw std::invalid_argument("no closed-form rate for this MA(1) statistic");
    default:
      break;
  }
  throw std::invalid_argument("pair statistic where a scalar one is required");
}

std::function<double(double, double)> pair_rate_for(const ProcessParams& params, Statistic s) {
  if (const auto* ar = std::get_if<Ar1Params>(&params)) {
    const double theta = ar->theta;
    if (s == Statistic::w_pair) return [theta](double x, double y) { return rate_j(x, y, theta); };
    return [theta](double x, double y) { return rate_js(x, y, theta); };
  }
  const double phi = std::get<Ma1Params>(params).phi;
  if (s == Statistic::w_pair) {
    throw std::invalid_argument("no closed-form rate for the MA(1) w_pair statistic");
  }
  return [phi](double x, double y) { return rate_ks(x, y, phi); };
}

double scalar_lln(const ProcessParams& params, Statistic s) {
  if (const auto* ar = std::get_if<Ar1Params>(&params)) {
    const double theta = ar->theta;
    switch (s) {
      case Statistic::quad_mean:
        return 1.0 / (1.0 - theta * theta);
      case Statistic::lag1_cov:
        return theta / (1.0 - theta * theta);
      case Statistic::yule_walker:
        return theta;
      case Statistic::sample_mean:
        return 0.0;
      default:
        break;
    }
  } else {
    const double phi = std::get<Ma1Params>(params).phi;
    switch (s) {
      case Statistic::quad_mean:
        return 1.0 + phi * phi;
      case Statistic::sample_mean:
        return 0.0;
      default:
        break;
    }
  }
  throw std::invalid_argument("no almost-sure limit available for this statistic/process");
}

std::array<double, 2> pair_lln(const ProcessParams& params, Statistic s) {
  if (const auto* ar = std::get_if<Ar1Params>(&params)) {
    const double theta = ar->theta;
    const double quad = 1.0 / (1.0 - theta * theta);
    if (s == Statistic::w_pair) return {quad, theta * quad};
    return {0.0, quad};
  }
  const double phi = std::get<Ma1Params>(params).phi;
  if (s == Statistic::s_pair) return {0.0, 1.0 + phi * phi};
  throw std::invalid_argument("no almost-sure limit available for this statistic/process");
}

double ball_infimum_scalar(const std::function<double(double)>& rate, double lln, double center,
                           double radius) {
  const double lo = center - radius;
  const double hi = center + radius;
  if (lln >= lo && lln <= hi) return 0.0;
  const OptimizationReport report = contraction_inf_1d(
      [&rate](double c, double) { return rate(c); },
      [](double t) { return std::array<double, 2>{t, 0.0}; }, {lo, hi});
  return report.value;
}

double ball_infimum_pair(const std::function<double(double, double)>& rate,
                         const std::array<double, 2>& lln, const double center[2], double radius) {
  const double dx = lln[0] - center[0];
  const double dy = lln[1] - center[1];
  if (dx * dx + dy * dy <= radius * radius) return 0.0;
  // The rates minimized here are convex (or have convex finite sublevel
  // sets), so with the zero outside the ball the infimum sits on the
  // boundary circle; the center probe is a cheap safety net.
  ContractionOptions options;
  options.scan_points = 257;
  const OptimizationReport report = contraction_inf_1d(
      rate,
      [&](double t) {
        return std::array<double, 2>{center[0] + radius * std::cos(t),
                                     center[1] + radius * std::sin(t)};
      },
      {0.0, 2.0 * std::numbers::pi}, options);
  return std::min(report.value, rate(center[0], center[1]));
}

}  // namespace

RateEstimate estimate_rate(const ProcessParams& params, const EventSpec& event,
                           const std::vector<std::size_t>& n_grid, std::uint64_t replicates,
                           std::uint64_t seed, const EstimateOptions& options) {
  validate_event(event);
  if (n_grid.size() < 3) throw std::invalid_argument("need at least 3 path lengths to fit a slope");
  if (replicates == 0) throw std::invalid_argument("need at least one replicate");

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  RateEstimate estimate;
  estimate.replicates = replicates;
  estimate.seed = seed;
  for (std::size_t n : n_grid) {
    const std::uint64_t cell_key = mix_seed(seed, n);
    const std::uint64_t hits = count_hits(params, event, n, replicates, cell_key, threads);
    if (hits == 0) {
      estimate.dropped.push_back(n);
      estimate.warnings.push_back("no hits at n = " + std::to_string(n) + " with " +
                                  std::to_string(replicates) + " replicates; cell dropped");
      continue;
    }
    if (hits < options.min_hits_warning) {
      estimate.warnings.push_back("only " + std::to_string(hits) + " hits at n = " +
                                  std::to_string(n) + "; estimate may be unstable");
    }
    estimate.n_grid.push_back(n);
    estimate.counts.push_back(hits);
    estimate.log_prob.push_back(std::log(static_cast<double>(hits)) -
                                std::log(static_cast<double>(replicates)));
  }
  if (estimate.n_grid.size() < 3) {
    throw std::runtime_error("fewer than 3 cells saw any hits; increase replicates or move the event");
  }

  const std::size_t m = estimate.n_grid.size();
  double n_bar = 0.0;
  for (std::size_t n : estimate.n_grid) n_bar += static_cast<double>(n);
  n_bar /= static_cast<double>(m);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = static_cast<double>(estimate.n_grid[i]) - n_bar;
    sxx += dx * dx;
    sxy += dx * estimate.log_prob[i];
  }
  estimate.slope = -sxy / sxx;

  // Delta method: var(log p_hat) ~ (1 - p) / (R p) = (R - hits) / (R * hits).
  double var = 0.0;
  const double r_total = static_cast<double>(replicates);
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = static_cast<double>(estimate.n_grid[i]) - n_bar;
    const double w = dx / sxx;
    const double hits = static_cast<double>(estimate.counts[i]);
    var += w * w * (r_total - hits) / (r_total * hits);
  }
  estimate.std_error = std::sqrt(var);
  return estimate;
}

double theoretical_event_rate(const ProcessParams& params, const EventSpec& event) {
  validate_event(event);
  if (is_pair_statistic(event.statistic)) {
    const auto rate = pair_rate_for(params, event.statistic);
    return ball_infimum_pair(rate, pair_lln(params, event.statistic), event.center, event.radius);
  }
  const auto rate = scalar_rate_for(params, event.statistic);
  const double lln = scalar_lln(params, event.statistic);
  switch (event.kind) {
    case EventKind::tail_ge:
      return event.level <= lln ? 0.0 : rate(event.level);
    case EventKind::tail_le:
      return event.level >= lln ? 0.0 : rate(event.level);
    case EventKind::ball:
      return ball_infimum_scalar(rate, lln, event.center[0], event.radius);
  }
  throw std::invalid_argument("unknown event kind");
}

}  // namespace ldp
