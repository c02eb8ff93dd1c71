// lzwalk: bounded quantum walk for Landau-Zener ladders.

#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lzwalk/cli.hpp"

namespace {

using lzwalk::cli::ConfigError;
using lzwalk::cli::RunConfig;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded quantum walk for Landau-Zener ladders"};
  app.require_subcommand(0, 0);

  std::string mode;
  std::string config_path;
  double p = 0.0, field = 0.0, fbar = 0.0, beta = 0.0, gamma = 0.0, gamma_tilde = 0.0, theta = 0.0;
  double f_min = 0.0, f_max = 0.0, unitarity_tol = 0.0;
  int steps = 0, order = 0, points = 0, tau_max = 0, sites = 0;
  std::string out, format;

  app.add_option("mode", mode, "evolve | series | edge | sweep | verify")->required();
  app.add_option("--config", config_path, "key = value configuration file");
  auto* p_opt = app.add_option("--p", p, "Landau-Zener tunneling probability");
  auto* field_opt = app.add_option("--field", field, "electric field F");
  p_opt->excludes(field_opt);
  auto* fbar_opt = app.add_option("--fbar", fbar, "Zener threshold field");
  auto* beta_opt = app.add_option("--beta", beta, "bulk diagonal phase");
  auto* gamma_opt = app.add_option("--gamma", gamma, "bulk off-diagonal phase");
  auto* gamma_tilde_opt = app.add_option("--gamma-tilde", gamma_tilde, "boundary phase");
  auto* theta_opt = app.add_option("--theta", theta, "sets gamma = theta, gamma-tilde = 0");
  theta_opt->excludes(gamma_opt)->excludes(gamma_tilde_opt);
  auto* steps_opt = app.add_option("--steps", steps, "number of time steps");
  auto* order_opt = app.add_option("--order", order, "series truncation order");
  auto* sites_opt = app.add_option("--sites", sites, "largest site in series mode");
  auto* fmin_opt = app.add_option("--fmin", f_min, "sweep: smallest field");
  auto* fmax_opt = app.add_option("--fmax", f_max, "sweep: largest field");
  auto* points_opt = app.add_option("--points", points, "sweep: grid points");
  auto* log_flag = app.add_flag("--log", "sweep: logarithmic grid");
  auto* tau_max_opt = app.add_option("--tau-max", tau_max, "verify: path-sum horizon");
  auto* tol_opt = app.add_option("--unitarity-tol", unitarity_tol, "verify: allowed norm drift");
  auto* out_opt = app.add_option("--out", out, "output path (default: stdout)");
  auto* format_opt = app.add_option("--format", format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? lzwalk::cli::kExitOk : lzwalk::cli::kExitUsage;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = lzwalk::cli::load_config_file(config_path);
    config.mode = lzwalk::cli::parse_mode(mode);
    if (p_opt->count()) {
      config.p = p;
      config.field.reset();
    }
    if (field_opt->count()) {
      config.field = field;
      config.p.reset();
    }
    if (fbar_opt->count()) config.fbar = fbar;
    if (beta_opt->count()) config.beta = beta;
    if (gamma_opt->count()) config.gamma = gamma;
    if (gamma_tilde_opt->count()) config.gamma_tilde = gamma_tilde;
    if (theta_opt->count()) {
      config.gamma = theta;
      config.gamma_tilde = 0.0;
    }
    if (steps_opt->count()) config.steps = steps;
    if (order_opt->count()) config.series_order = order;
    if (sites_opt->count()) config.sites = sites;
    if (fmin_opt->count()) config.f_min = f_min;
    if (fmax_opt->count()) config.f_max = f_max;
    if (points_opt->count()) config.points = points;
    if (log_flag->count()) config.log_grid = true;
    if (tau_max_opt->count()) config.tau_max = tau_max;
    if (tol_opt->count()) config.unitarity_tol = unitarity_tol;
    if (out_opt->count()) config.out = out;
    if (format_opt->count()) config.format = lzwalk::cli::parse_format(format);
  } catch (const ConfigError& e) {
    std::cerr << "lzwalk: " << e.what() << '\n';
    return lzwalk::cli::kExitUsage;
  }

  return lzwalk::cli::execute(config, std::cout, std::cerr);
}
