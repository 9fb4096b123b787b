#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldp/empirics.hpp"
#include "ldp/gridcsv.hpp"
#include "ldp/verify.hpp"

namespace {

using nlohmann::json;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& ex) {
    throw std::invalid_argument("bad JSON in config file '" + path + "': " + ex.what());
  }
  if (!cfg.is_object()) throw std::invalid_argument("config file must hold one JSON object");
  return cfg;
}

// Config values fill only options the command line left untouched.
bool config_applies(const CLI::App& sub, const json& cfg, const std::string& key) {
  return cfg.contains(key) && sub.count("--" + key) == 0;
}

std::vector<double> as_double_list(const json& v, const std::string& key) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& item : v) out.push_back(item.get<double>());
    return out;
  }
  throw std::invalid_argument("config key '" + key + "' must be a number or array of numbers");
}

std::vector<std::size_t> as_size_list(const json& v, const std::string& key) {
  if (v.is_number_unsigned() || v.is_number_integer()) return {v.get<std::size_t>()};
  if (v.is_array()) {
    std::vector<std::size_t> out;
    for (const auto& item : v) out.push_back(item.get<std::size_t>());
    return out;
  }
  throw std::invalid_argument("config key '" + key + "' must be an integer or array of integers");
}

int emit_table(const ldp::Table& table, const std::string& format, const std::string& out_path) {
  if (format != "csv" && format != "json") {
    throw std::invalid_argument("unknown format '" + format + "'; expected csv or json");
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (format == "csv") {
    table.to_csv(out);
  } else {
    table.to_json(out);
  }
  out.flush();
  if (!out) throw std::runtime_error("writing output failed");
  return 0;
}

void require_stationary(const std::vector<double>& thetas) {
  for (double theta : thetas) {
    if (!(std::abs(theta) < 1.0)) {
      throw std::invalid_argument("AR(1) coefficient must satisfy |theta| < 1, got theta = " +
                                  ldp::format_double(theta));
    }
  }
}

// --- rate ----------------------------------------------------------------

struct RateArgs {
  std::string name;
  std::vector<double> thetas;
  std::vector<double> phis;
  std::string grid;
  std::string grid2;
  std::string format = "csv";
  std::string out;
  std::string config;
};

int cmd_rate(const CLI::App& sub, RateArgs args) {
  if (!args.config.empty()) {
    const json cfg = load_config(args.config);
    if (config_applies(sub, cfg, "theta")) args.thetas = as_double_list(cfg["theta"], "theta");
    if (config_applies(sub, cfg, "phi")) args.phis = as_double_list(cfg["phi"], "phi");
    if (config_applies(sub, cfg, "grid")) args.grid = cfg["grid"].get<std::string>();
    if (config_applies(sub, cfg, "grid2")) args.grid2 = cfg["grid2"].get<std::string>();
    if (config_applies(sub, cfg, "format")) args.format = cfg["format"].get<std::string>();
    if (config_applies(sub, cfg, "out")) args.out = cfg["out"].get<std::string>();
  }
  const ldp::RateFn fn = ldp::parse_rate_name(args.name);
  const bool phi_based = ldp::rate_uses_phi(fn);
  if (phi_based && !args.thetas.empty()) {
    throw std::invalid_argument("rate " + args.name + " takes --phi, not --theta");
  }
  if (!phi_based && !args.phis.empty()) {
    throw std::invalid_argument("rate " + args.name + " takes --theta, not --phi");
  }
  const std::vector<double>& coeffs = phi_based ? args.phis : args.thetas;
  if (coeffs.empty()) {
    throw std::invalid_argument("rate " + args.name + " needs at least one " +
                                (phi_based ? "--phi" : "--theta"));
  }
  if (!phi_based) require_stationary(coeffs);
  if (args.grid.empty()) throw std::invalid_argument("--grid is required");
  const ldp::GridSpec first = ldp::parse_grid(args.grid);
  std::optional<ldp::GridSpec> second;
  if (ldp::rate_is_bivariate(fn)) {
    if (args.grid2.empty()) {
      throw std::invalid_argument("rate " + args.name + " is bivariate and needs --grid2");
    }
    second = ldp::parse_grid(args.grid2);
  } else if (!args.grid2.empty()) {
    throw std::invalid_argument("rate " + args.name + " is scalar; --grid2 does not apply");
  }
  return emit_table(ldp::rate_grid(fn, coeffs, first, second), args.format, args.out);
}

// --- domain --------------------------------------------------------------

struct DomainArgs {
  std::vector<double> thetas;
  std::string lambda1;
  std::string lambda2;
  std::uint64_t n = 0;
  std::string format = "csv";
  std::string out;
  std::string config;
};

int cmd_domain(const CLI::App& sub, DomainArgs args) {
  if (!args.config.empty()) {
    const json cfg = load_config(args.config);
    if (config_applies(sub, cfg, "theta")) args.thetas = as_double_list(cfg["theta"], "theta");
    if (config_applies(sub, cfg, "lambda1")) args.lambda1 = cfg["lambda1"].get<std::string>();
    if (config_applies(sub, cfg, "lambda2")) args.lambda2 = cfg["lambda2"].get<std::string>();
    if (config_applies(sub, cfg, "n")) args.n = cfg["n"].get<std::uint64_t>();
    if (config_applies(sub, cfg, "format")) args.format = cfg["format"].get<std::string>();
    if (config_applies(sub, cfg, "out")) args.out = cfg["out"].get<std::string>();
  }
  if (args.thetas.empty()) throw std::invalid_argument("--theta is required");
  require_stationary(args.thetas);
  if (args.lambda1.empty() || args.lambda2.empty()) {
    throw std::invalid_argument("--lambda1 and --lambda2 grids are required");
  }
  std::optional<std::size_t> pd_at_n;
  if (args.n > 0) pd_at_n = static_cast<std::size_t>(args.n);
  return emit_table(ldp::domain_grid(args.thetas, ldp::parse_grid(args.lambda1),
                                     ldp::parse_grid(args.lambda2), pd_at_n),
                    args.format, args.out);
}

// --- cgf -----------------------------------------------------------------

struct CgfArgs {
  std::string kind = "limit";
  std::string route = "eigen";
  std::vector<double> thetas;
  std::vector<double> phis;
  std::string lambda1;
  std::string lambda2;
  std::uint64_t n = 0;
  std::uint64_t dense_cap = 1024;
  std::string format = "csv";
  std::string out;
  std::string config;
};

int cmd_cgf(const CLI::App& sub, CgfArgs args) {
  if (!args.config.empty()) {
    const json cfg = load_config(args.config);
    if (config_applies(sub, cfg, "kind")) args.kind = cfg["kind"].get<std::string>();
    if (config_applies(sub, cfg, "route")) args.route = cfg["route"].get<std::string>();
    if (config_applies(sub, cfg, "theta")) args.thetas = as_double_list(cfg["theta"], "theta");
    if (config_applies(sub, cfg, "phi")) args.phis = as_double_list(cfg["phi"], "phi");
    if (config_applies(sub, cfg, "lambda1")) args.lambda1 = cfg["lambda1"].get<std::string>();
    if (config_applies(sub, cfg, "lambda2")) args.lambda2 = cfg["lambda2"].get<std::string>();
    if (config_applies(sub, cfg, "n")) args.n = cfg["n"].get<std::uint64_t>();
    if (config_applies(sub, cfg, "dense-cap")) args.dense_cap = cfg["dense-cap"].get<std::uint64_t>();
    if (config_applies(sub, cfg, "format")) args.format = cfg["format"].get<std::string>();
    if (config_applies(sub, cfg, "out")) args.out = cfg["out"].get<std::string>();
  }
  ldp::CgfKind kind;
  if (args.kind == "finite_n") {
    kind = ldp::CgfKind::finite_n;
  } else if (args.kind == "limit") {
    kind = ldp::CgfKind::limit;
  } else if (args.kind == "ma1") {
    kind = ldp::CgfKind::ma1;
  } else {
    throw std::invalid_argument("unknown kind '" + args.kind +
                                "'; expected finite_n, limit or ma1");
  }
  ldp::CgfRoute route;
  if (args.route == "eigen") {
    route = ldp::CgfRoute::eigen;
  } else if (args.route == "pivot") {
    route = ldp::CgfRoute::pivot;
  } else {
    throw std::invalid_argument("unknown route '" + args.route + "'; expected eigen or pivot");
  }
  if (args.lambda1.empty()) throw std::invalid_argument("--lambda1 grid is required");
  const ldp::GridSpec l1 = ldp::parse_grid(args.lambda1);

  if (kind == ldp::CgfKind::ma1) {
    if (args.phis.empty()) throw std::invalid_argument("kind ma1 needs --phi");
    if (!args.thetas.empty()) throw std::invalid_argument("kind ma1 takes --phi, not --theta");
    if (!args.lambda2.empty()) {
      throw std::invalid_argument("kind ma1 is one-dimensional; --lambda2 does not apply");
    }
    return emit_table(ldp::cgf_grid(kind, route, args.phis, l1, std::nullopt, 0, args.dense_cap),
                      args.format, args.out);
  }

  if (args.thetas.empty()) throw std::invalid_argument("kind " + args.kind + " needs --theta");
  if (!args.phis.empty()) {
    throw std::invalid_argument("kind " + args.kind + " takes --theta, not --phi");
  }
  require_stationary(args.thetas);
  if (args.lambda2.empty()) throw std::invalid_argument("kind " + args.kind + " needs --lambda2");
  const ldp::GridSpec l2 = ldp::parse_grid(args.lambda2);
  if (kind == ldp::CgfKind::finite_n && args.n < 1) {
    throw std::invalid_argument("kind finite_n needs --n >= 1");
  }
  return emit_table(ldp::cgf_grid(kind, route, args.thetas, l1, l2,
                                  static_cast<std::size_t>(args.n),
                                  static_cast<std::size_t>(args.dense_cap)),
                    args.format, args.out);
}

// --- simulate ------------------------------------------------------------

struct SimulateArgs {
  double theta = 0.0;
  double phi = 0.0;
  std::uint64_t n = 0;
  std::uint64_t replicates = 1;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  std::string config;
};

int cmd_simulate(const CLI::App& sub, SimulateArgs args) {
  bool has_theta = sub.count("--theta") > 0;
  bool has_phi = sub.count("--phi") > 0;
  if (!args.config.empty()) {
    const json cfg = load_config(args.config);
    if (!has_theta && cfg.contains("theta")) {
      args.theta = cfg["theta"].get<double>();
      has_theta = true;
    }
    if (!has_phi && cfg.contains("phi")) {
      args.phi = cfg["phi"].get<double>();
      has_phi = true;
    }
    if (config_applies(sub, cfg, "n")) args.n = cfg["n"].get<std::uint64_t>();
    if (config_applies(sub, cfg, "replicates")) {
      args.replicates = cfg["replicates"].get<std::uint64_t>();
    }
    if (config_applies(sub, cfg, "seed")) args.seed = cfg["seed"].get<std::uint64_t>();
    if (config_applies(sub, cfg, "format")) args.format = cfg["format"].get<std::string>();
    if (config_applies(sub, cfg, "out")) args.out = cfg["out"].get<std::string>();
  }
  if (has_theta == has_phi) {
    throw std::invalid_argument("pass exactly one of --theta (AR) or --phi (MA)");
  }
  if (args.n < 1) throw std::invalid_argument("--n >= 1 is required");
  const ldp::ProcessParams params =
      has_theta ? ldp::ProcessParams(ldp::Ar1Params(args.theta))
                : ldp::ProcessParams(ldp::Ma1Params(args.phi));
  return emit_table(ldp::simulate_table(params, static_cast<std::size_t>(args.n), args.replicates,
                                        args.seed),
                    args.format, args.out);
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t replicates = 1000000;
  std::vector<std::size_t> n_grid;
  std::uint64_t dense_cap = 1024;
  std::string out;
  std::string config;
};

int cmd_verify(const CLI::App& sub, VerifyArgs args) {
  if (!args.config.empty()) {
    const json cfg = load_config(args.config);
    if (config_applies(sub, cfg, "suite")) args.suite = cfg["suite"].get<std::string>();
    if (config_applies(sub, cfg, "seed")) args.seed = cfg["seed"].get<std::uint64_t>();
    if (config_applies(sub, cfg, "replicates")) {
      args.replicates = cfg["replicates"].get<std::uint64_t>();
    }
    if (config_applies(sub, cfg, "n-grid")) args.n_grid = as_size_list(cfg["n-grid"], "n-grid");
    if (config_applies(sub, cfg, "dense-cap")) args.dense_cap = cfg["dense-cap"].get<std::uint64_t>();
    if (config_applies(sub, cfg, "out")) args.out = cfg["out"].get<std::string>();
  }
  if (args.suite.empty()) throw std::invalid_argument("--suite is required");
  const std::vector<int> criteria = ldp::suite_criteria(args.suite);

  ldp::VerifyOptions options;
  options.seed = args.seed;
  options.replicates = args.replicates;
  if (!args.n_grid.empty()) options.n_grid = args.n_grid;
  options.dense_cap = static_cast<std::size_t>(args.dense_cap);

  json summary;
  summary["suite"] = args.suite;
  summary["criteria"] = json::array();
  bool all_passed = true;
  for (int id : criteria) {
    std::cerr << "running criterion " << id << "...\n";
    const ldp::CriterionResult result = ldp::run_criterion(id, options);
    all_passed = all_passed && result.passed;
    std::cerr << "criterion " << id << ": " << (result.passed ? "PASS" : "FAIL") << "  "
              << result.title << " (" << ldp::format_double(result.seconds) << "s)\n";
    for (const ldp::CheckResult& check : result.checks) {
      std::cerr << "  [" << (check.passed ? "ok" : "FAIL") << "] " << check.label << ": "
                << check.detail << "\n";
    }
    for (const std::string& note : result.notes) std::cerr << "  note: " << note << "\n";

    json jc;
    jc["id"] = result.id;
    jc["title"] = result.title;
    jc["passed"] = result.passed;
    jc["seconds"] = result.seconds;
    jc["checks"] = json::array();
    for (const ldp::CheckResult& check : result.checks) {
      jc["checks"].push_back(
          {{"label", check.label}, {"passed", check.passed}, {"detail", check.detail}});
    }
    jc["notes"] = result.notes;
    summary["criteria"].push_back(std::move(jc));
  }
  summary["passed"] = all_passed;

  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + args.out + "'");
  }
  std::ostream& out = args.out.empty() ? std::cout : file;
  out << summary.dump(2) << '\n';
  out.flush();
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate functions, domains and simulation for Gaussian AR(1)/MA(1) path statistics"};
  app.require_subcommand(1);

  RateArgs rate_args;
  CLI::App* rate = app.add_subcommand(
      "rate", "Evaluate a rate function (J, I1, I2, Itheta, JS, IXbar, Kphi, KS, IYbar) on a grid");
  rate->add_option("name", rate_args.name, "Rate function name")->required();
  rate->add_option("--theta", rate_args.thetas, "AR(1) coefficient(s), repeatable");
  rate->add_option("--phi", rate_args.phis, "MA(1) coefficient(s), repeatable");
  rate->add_option("--grid", rate_args.grid, "Argument grid 'min:max:count' or single value");
  rate->add_option("--grid2", rate_args.grid2, "Second-argument grid for bivariate rates");
  rate->add_option("--format", rate_args.format, "Output format: csv or json (default csv)");
  rate->add_option("--out", rate_args.out, "Write output to this file instead of stdout");
  rate->add_option("--config", rate_args.config, "JSON config supplying defaults for these flags");

  DomainArgs domain_args;
  CLI::App* domain =
      app.add_subcommand("domain", "Classify lambda pairs against the finiteness region");
  domain->add_option("--theta", domain_args.thetas, "AR(1) coefficient(s), repeatable")->required();
  domain->add_option("--lambda1", domain_args.lambda1, "lambda1 grid 'min:max:count' or value")
      ->required();
  domain->add_option("--lambda2", domain_args.lambda2, "lambda2 grid 'min:max:count' or value")
      ->required();
  domain->add_option("--n", domain_args.n,
                     "Also report positive definiteness of the finite-n matrix at this size");
  domain->add_option("--format", domain_args.format, "Output format: csv or json (default csv)");
  domain->add_option("--out", domain_args.out, "Write output to this file instead of stdout");
  domain->add_option("--config", domain_args.config, "JSON config supplying defaults");

  CgfArgs cgf_args;
  CLI::App* cgf = app.add_subcommand("cgf", "Evaluate cumulant generating functions on a grid");
  cgf->add_option("--kind", cgf_args.kind, "finite_n, limit or ma1 (default limit)");
  cgf->add_option("--route", cgf_args.route, "finite_n evaluator: eigen or pivot (default eigen)");
  cgf->add_option("--theta", cgf_args.thetas, "AR(1) coefficient(s), repeatable");
  cgf->add_option("--phi", cgf_args.phis, "MA(1) coefficient(s) for kind ma1, repeatable");
  cgf->add_option("--lambda1", cgf_args.lambda1, "lambda1 grid 'min:max:count' or value");
  cgf->add_option("--lambda2", cgf_args.lambda2, "lambda2 grid 'min:max:count' or value");
  cgf->add_option("--n", cgf_args.n, "Matrix size for kind finite_n");
  cgf->add_option("--dense-cap", cgf_args.dense_cap,
                  "Largest n the eigen route accepts (default 1024)");
  cgf->add_option("--format", cgf_args.format, "Output format: csv or json (default csv)");
  cgf->add_option("--out", cgf_args.out, "Write output to this file instead of stdout");
  cgf->add_option("--config", cgf_args.config, "JSON config supplying defaults");

  SimulateArgs sim_args;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Draw replicate paths and report summary statistics");
  simulate->add_option("--theta", sim_args.theta, "AR(1) coefficient (selects the AR model)");
  simulate->add_option("--phi", sim_args.phi, "MA(1) coefficient (selects the MA model)");
  simulate->add_option("--n", sim_args.n, "Path length")->required();
  simulate->add_option("--replicates", sim_args.replicates, "Number of replicates (default 1)");
  simulate->add_option("--seed", sim_args.seed, "Master seed; replicate r uses mix_seed(seed, r)");
  simulate->add_option("--format", sim_args.format, "Output format: csv or json (default csv)");
  simulate->add_option("--out", sim_args.out, "Write output to this file instead of stdout");
  simulate->add_option("--config", sim_args.config, "JSON config supplying defaults");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite; human report on stderr, JSON summary on stdout");
  verify->add_option("--suite", verify_args.suite,
                     "closed-forms, domains, convergence or montecarlo");
  verify->add_option("--seed", verify_args.seed, "Master seed for randomized checks (default 0)");
  verify->add_option("--replicates", verify_args.replicates,
                     "Monte Carlo replicates per cell (default 1000000)");
  verify->add_option("--n-grid", verify_args.n_grid, "Monte Carlo path lengths, repeatable");
  verify->add_option("--dense-cap", verify_args.dense_cap, "Dense eigen route cap (default 1024)");
  verify->add_option("--out", verify_args.out, "Write the JSON summary to this file");
  verify->add_option("--config", verify_args.config, "JSON config supplying defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (rate->parsed()) return cmd_rate(*rate, rate_args);
    if (domain->parsed()) return cmd_domain(*domain, domain_args);
    if (cgf->parsed()) return cmd_cgf(*cgf, cgf_args);
    if (simulate->parsed()) return cmd_simulate(*simulate, sim_args);
    if (verify->parsed()) return cmd_verify(*verify, verify_args);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}
