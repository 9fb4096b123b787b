#pragma once

#include <array>
#include <cstddef>
#include <functional>

#include "ldp/spectral.hpp"

namespace ldp {

// Outcome of a numerical optimization. `argopt[1]` is meaningful only when
// dim == 2. `residual` is the gradient norm at the reported point (2-D
// ascent) or the final bracket width (1-D search). `boundary_limit` flags a
// run that stalled against the effective-domain boundary with the gradient
// still pointing outward — the supremum is then a boundary limit rather than
// an interior stationary point.
struct OptimizationReport {
  std::array<double, 2> argopt = {0.0, 0.0};
  std::size_t dim = 0;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  bool boundary_limit = false;
  double residual = 0.0;
};

// Controls for the 2-D concave maximization. The start box should cover the
// region where maximizers can fall; starts outside the domain are skipped.
struct FlOptions {
  double box_lambda1_min = -4.0;
  double box_lambda1_max = 0.45;
  double box_lambda2_min = -4.0;
  double box_lambda2_max = 4.0;
  double gradient_tol = 1e-9;
  double arg_tol = 1e-10;
  std::size_t max_iterations = 10000;
  // Optional analytic gradient of the generating function; finite
  // differences are used when absent. Must be valid wherever domain() holds.
  std::function<std::array<double, 2>(const LambdaPair&)> gradient;
};

// Convex-duality transform at (x, y): maximizes
//   lambda -> x*lambda1 + y*lambda2 - cgf(lambda)
// over {domain(lambda)} by damped Newton ascent (finite-difference Hessian,
// steepest-ascent fallback) from a grid of starting points plus the origin.
// cgf may return +inf inside the box; such points are treated as outside.
OptimizationReport fenchel_legendre_2d(const std::function<double(const LambdaPair&)>& cgf,
                                       const std::function<bool(const LambdaPair&)>& domain,
                                       double x, double y, const FlOptions& options = {});

// Closed parameter interval for the 1-D search.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct ContractionOptions {
  double arg_tol = 1e-10;
  std::size_t max_iterations = 10000;
  // Uniform pre-scan resolution; the scan localizes the basin that the
  // golden-section refinement then contracts.
  std::size_t scan_points = 129;
};

// Minimizes t -> rate(constraint(t)) over the bracket: uniform scan followed
// by golden-section refinement around the best scan point. Returns +inf
// (converged, argopt at the bracket midpoint) when every scanned point is
// infinite. The scan resolution bounds basin localization, so multimodal
// slices need enough scan points to separate their basins.
OptimizationReport contraction_inf_1d(const std::function<double(double, double)>& rate,
                                      const std::function<std::array<double, 2>(double)>& constraint,
                                      const Bracket& bracket, const ContractionOptions& options = {});

}  // namespace ldp
