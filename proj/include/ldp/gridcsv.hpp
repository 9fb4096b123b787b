#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ldp/empirics.hpp"
#include "ldp/spectral.hpp"

namespace ldp {

// Deterministic text output: given the same inputs, every byte of the
// emitted CSV/JSON is identical across runs and platforms. Doubles are
// rendered with the shortest round-trip representation, +inf as "inf",
// negative zero as "0"; a NaN reaching the formatter is a logic error.
std::string format_double(double value);

// One axis of a evaluation grid. Parsed from "min:max:count" (count >= 2,
// min < max; count points inclusive of both ends, the last point exactly
// max) or from a bare number, which denotes the single-point axis.
struct GridSpec {
  bool single = false;
  double value = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

GridSpec parse_grid(const std::string& text);
std::vector<double> axis_points(const GridSpec& spec);

// Rectangular results table; every cell is already formatted text.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void append_row(std::vector<std::string> row);
  void to_csv(std::ostream& out) const;
  // Compact JSON array of row objects keyed by column name, one line.
  void to_json(std::ostream& out) const;
};

// The rate functions addressable from the command line.
enum class RateFn { J, I1, I2, Itheta, JS, IXbar, Kphi, KS, IYbar };

// Parses the public rate name (J, I1, I2, Itheta, JS, IXbar, Kphi, KS, IYbar).
RateFn parse_rate_name(const std::string& name);
bool rate_uses_phi(RateFn fn);
bool rate_is_bivariate(RateFn fn);

// Evaluation grid of one rate function. `coeffs` holds the theta (or phi)
// values, the outermost loop; bivariate rates additionally need `second`.
// Columns: bivariate -> x, y, theta|phi, value; scalar -> c|x, theta|phi, value.
Table rate_grid(RateFn fn, const std::vector<double>& coeffs, const GridSpec& first,
                const std::optional<GridSpec>& second);

// Region tags (and optionally finite-n positive definiteness of the
// d_matrix at the given n) over a lambda grid.
// Columns: lambda1, lambda2, theta, tag [, pd].
Table domain_grid(const std::vector<double>& thetas, const GridSpec& lambda1_axis,
                  const GridSpec& lambda2_axis, std::optional<std::size_t> pd_at_n);

enum class CgfKind { finite_n, limit, ma1 };
enum class CgfRoute { eigen, pivot };

// Cumulant-generating-function values over a lambda grid.
// finite_n columns: lambda1, lambda2, theta, n, value (route selects the
// evaluator; the eigen route enforces dense_cap). limit columns drop n.
// ma1 columns: lambda1, phi, value (lambda2_axis is ignored).
Table cgf_grid(CgfKind kind, CgfRoute route, const std::vector<double>& coeffs,
               const GridSpec& lambda1_axis, const std::optional<GridSpec>& lambda2_axis,
               std::size_t n, std::size_t dense_cap);

// Replicate summary table. AR(1) columns: replicate, derived_seed, gamma0,
// gamma1, mean, theta_hat; MA(1) columns: replicate, derived_seed, mean,
// quad_mean. Replicate r draws from mix_seed(seed, r).
Table simulate_table(const ProcessParams& params, std::size_t n, std::uint64_t replicates,
                     std::uint64_t seed);

}  // namespace ldp
