#include "ldp/gridcsv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>
#include <utility>

#include <json.hpp>

#include "ldp/cgf.hpp"
#include "ldp/extended_real.hpp"
#include "ldp/rates.hpp"
#include "ldp/rng.hpp"
#include "ldp/toeplitz.hpp"

namespace ldp {

std::string format_double(double value) {
  if (std::isnan(value)) throw std::logic_error("NaN reached the output formatter");
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc()) throw std::logic_error("double formatting failed");
  return std::string(buf, res.ptr);
}

GridSpec parse_grid(const std::string& text) {
  const auto parse_number = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad grid component '" + part + "' in '" + text + "'");
    }
    if (used != part.size()) {
      throw std::invalid_argument("bad grid component '" + part + "' in '" + text + "'");
    }
    if (!std::isfinite(v)) throw std::invalid_argument("grid bounds must be finite: '" + text + "'");
    return v;
  };

  const std::size_t first = text.find(':');
  GridSpec spec;
  if (first == std::string::npos) {
    spec.single = true;
    spec.value = parse_number(text);
    return spec;
  }
  const std::size_t second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw std::invalid_argument("grid must be 'min:max:count' or a single number, got '" + text +
                                "'");
  }
  spec.min = parse_number(text.substr(0, first));
  spec.max = parse_number(text.substr(first + 1, second - first - 1));
  const std::string count_part = text.substr(second + 1);
  unsigned long long count = 0;
  const auto res =
      std::from_chars(count_part.data(), count_part.data() + count_part.size(), count);
  if (res.ec != std::errc() || res.ptr != count_part.data() + count_part.size()) {
    throw std::invalid_argument("bad grid count '" + count_part + "' in '" + text + "'");
  }
  spec.count = static_cast<std::size_t>(count);
  if (spec.count < 2) throw std::invalid_argument("grid count must be >= 2, got '" + text + "'");
  if (!(spec.min < spec.max)) {
    throw std::invalid_argument("grid needs min < max, got '" + text + "'");
  }
  return spec;
}

std::vector<double> axis_points(const GridSpec& spec) {
  if (spec.single) return {spec.value};
  std::vector<double> points(spec.count);
  const double step = (spec.max - spec.min) / static_cast<double>(spec.count - 1);
  for (std::size_t i = 0; i < spec.count; ++i) {
    points[i] = spec.min + step * static_cast<double>(i);
  }
  points.back() = spec.max;  // inclusive endpoint, exactly
  return points;
}

void Table::append_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw std::logic_error("row width does not match header");
  rows.push_back(std::move(row));
}

void Table::to_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

void Table::to_json(std::ostream& out) const {
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[header[i]] = row[i];
    rows_json.push_back(std::move(obj));
  }
  out << rows_json.dump() << '\n';
}

RateFn parse_rate_name(const std::string& name) {
  if (name == "J") return RateFn::J;
  if (name == "I1") return RateFn::I1;
  if (name == "I2") return RateFn::I2;
  if (name == "Itheta") return RateFn::Itheta;
  if (name == "JS") return RateFn::JS;
  if (name == "IXbar") return RateFn::IXbar;
  if (name == "Kphi") return RateFn::Kphi;
  if (name == "KS") return RateFn::KS;
  if (name == "IYbar") return RateFn::IYbar;
  throw std::invalid_argument(
      "unknown rate '" + name + "'; expected one of J, I1, I2, Itheta, JS, IXbar, Kphi, KS, IYbar");
}

bool rate_uses_phi(RateFn fn) {
  return fn == RateFn::Kphi || fn == RateFn::KS || fn == RateFn::IYbar;
}

bool rate_is_bivariate(RateFn fn) {
  return fn == RateFn::J || fn == RateFn::JS || fn == RateFn::KS;
}

namespace {

double eval_scalar_rate(RateFn fn, double c, double coeff) {
  switch (fn) {
    case RateFn::I1:
      return rate_i1(c, coeff);
    case RateFn::I2:
      return rate_i2(c, coeff);
    case RateFn::Itheta:
      return rate_yule_walker(c, coeff);
    case RateFn::IXbar:
      return rate_sample_mean_ar1(c, coeff);
    case RateFn::Kphi:
      return c > 0.0 ? rate_k_phi(c, coeff) : kInf;
    case RateFn::IYbar:
      return rate_sample_mean_ma1(c, coeff);
    default:
      throw std::logic_error("bivariate rate in scalar evaluation");
  }
}

double eval_pair_rate(RateFn fn, double x, double y, double coeff) {
  switch (fn) {
    case RateFn::J:
      return rate_j(x, y, coeff);
    case RateFn::JS:
      return rate_js(x, y, coeff);
    case RateFn::KS:
      return rate_ks(x, y, coeff);
    default:
      throw std::logic_error("scalar rate in bivariate evaluation");
  }
}

}  // namespace

Table rate_grid(RateFn fn, const std::vector<double>& coeffs, const GridSpec& first,
                const std::optional<GridSpec>& second) {
  if (coeffs.empty()) throw std::invalid_argument("need at least one coefficient value");
  const std::string coeff_name = rate_uses_phi(fn) ? "phi" : "theta";
  Table table;
  if (rate_is_bivariate(fn)) {
    if (!second) throw std::invalid_argument("bivariate rate needs both --grid and --grid2");
    table.header = {"x", "y", coeff_name, "value"};
    const std::vector<double> xs = axis_points(first);
    const std::vector<double> ys = axis_points(*second);
    for (double coeff : coeffs) {
      for (double x : xs) {
        for (double y : ys) {
          table.append_row({format_double(x), format_double(y), format_double(coeff),
                            format_double(eval_pair_rate(fn, x, y, coeff))});
        }
      }
    }
    return table;
  }
  const std::string arg_name = (fn == RateFn::Kphi) ? "x" : "c";
  table.header = {arg_name, coeff_name, "value"};
  const std::vector<double> cs = axis_points(first);
  for (double coeff : coeffs) {
    for (double c : cs) {
      table.append_row(
          {format_double(c), format_double(coeff), format_double(eval_scalar_rate(fn, c, coeff))});
    }
  }
  return table;
}

Table domain_grid(const std::vector<double>& thetas, const GridSpec& lambda1_axis,
                  const GridSpec& lambda2_axis, std::optional<std::size_t> pd_at_n) {
  if (thetas.empty()) throw std::invalid_argument("need at least one theta value");
  Table table;
  table.header = {"lambda1", "lambda2", "theta", "tag"};
  if (pd_at_n) table.header.push_back("pd");
  const std::vector<double> l1s = axis_points(lambda1_axis);
  const std::vector<double> l2s = axis_points(lambda2_axis);
  for (double theta : thetas) {
    for (double l1 : l1s) {
      for (double l2 : l2s) {
        const LambdaPair lambda{l1, l2};
        const DomainRegion region = domain_membership(lambda, theta);
        const char* tag = region == DomainRegion::D1   ? "D1"
                          : region == DomainRegion::D2 ? "D2"
                                                       : "Outside";
        std::vector<std::string> row = {format_double(l1), format_double(l2),
                                        format_double(theta), tag};
        if (pd_at_n) {
          row.push_back(is_positive_definite(d_matrix(lambda, theta, *pd_at_n)) ? "1" : "0");
        }
        table.append_row(std::move(row));
      }
    }
  }
  return table;
}

Table cgf_grid(CgfKind kind, CgfRoute route, const std::vector<double>& coeffs,
               const GridSpec& lambda1_axis, const std::optional<GridSpec>& lambda2_axis,
               std::size_t n, std::size_t dense_cap) {
  if (coeffs.empty()) throw std::invalid_argument("need at least one coefficient value");
  Table table;
  const std::vector<double> l1s = axis_points(lambda1_axis);

  if (kind == CgfKind::ma1) {
    table.header = {"lambda1", "phi", "value"};
    for (double phi : coeffs) {
      for (double l1 : l1s) {
        table.append_row(
            {format_double(l1), format_double(phi), format_double(l_limit_ma1_qm(l1, phi))});
      }
    }
    return table;
  }

  if (!lambda2_axis) throw std::invalid_argument("AR(1) generating function needs --lambda2");
  const std::vector<double> l2s = axis_points(*lambda2_axis);

  if (kind == CgfKind::finite_n) {
    if (route == CgfRoute::eigen && n > dense_cap) {
      throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the dense cap " +
                                  std::to_string(dense_cap) +
                                  "; rerun with --route pivot for large n");
    }
    table.header = {"lambda1", "lambda2", "theta", "n", "value"};
    const std::string n_text = std::to_string(n);
    for (double theta : coeffs) {
      for (double l1 : l1s) {
        for (double l2 : l2s) {
          const LambdaPair lambda{l1, l2};
          const double value = route == CgfRoute::pivot ? l_n_ar1_pivot(lambda, theta, n)
                                                        : l_n_ar1(lambda, theta, n, dense_cap);
          table.append_row({format_double(l1), format_double(l2), format_double(theta), n_text,
                            format_double(value)});
        }
      }
    }
    return table;
  }

  table.header = {"lambda1", "lambda2", "theta", "value"};
  for (double theta : coeffs) {
    for (double l1 : l1s) {
      for (double l2 : l2s) {
        table.append_row({format_double(l1), format_double(l2), format_double(theta),
                          format_double(l_limit_ar1({l1, l2}, theta))});
      }
    }
  }
  return table;
}

Table simulate_table(const ProcessParams& params, std::size_t n, std::uint64_t replicates,
                     std::uint64_t seed) {
  if (replicates == 0) throw std::invalid_argument("need at least one replicate");
  Table table;
  const bool is_ar = std::holds_alternative<Ar1Params>(params);
  if (is_ar) {
    if (n < 2) throw std::invalid_argument("AR(1) summary statistics need n >= 2");
    table.header = {"replicate", "derived_seed", "gamma0", "gamma1", "mean", "theta_hat"};
  } else {
    table.header = {"replicate", "derived_seed", "mean", "quad_mean"};
  }
  for (std::uint64_t r = 0; r < replicates; ++r) {
    const std::uint64_t derived = mix_seed(seed, r);
    if (is_ar) {
      const SamplePath path = simulate_ar1(std::get<Ar1Params>(params), n, derived);
      const BivariateStat w = stat_w(path);
      const BivariateStat s = stat_s(path);
      table.append_row({std::to_string(r), std::to_string(derived), format_double(w.first),
                        format_double(w.second), format_double(s.first),
                        format_double(yule_walker(path))});
    } else {
      const SamplePath path = simulate_ma1(std::get<Ma1Params>(params), n, derived);
      const BivariateStat s = stat_s(path);
      table.append_row({std::to_string(r), std::to_string(derived), format_double(s.first),
                        format_double(s.second)});
    }
  }
  return table;
}

}  // namespace ldp
