#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lzwalk/cli.hpp"
#include "lzwalk/edge.hpp"
#include "lzwalk/genfun.hpp"
#include "lzwalk/walk.hpp"
#include "table.hpp"

namespace lzwalk::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json real_json(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["mode"] = std::string(to_string(c.mode));
  j["p"] = c.p ? real_json(*c.p) : ordered_json(nullptr);
  j["field"] = c.field ? real_json(*c.field) : ordered_json(nullptr);
  j["fbar"] = c.fbar;
  j["beta"] = c.beta;
  j["gamma"] = c.gamma;
  j["gamma_tilde"] = c.gamma_tilde;
  j["length"] = c.length;
  j["j0"] = c.j0;
  j["e0"] = c.e0;
  j["steps"] = c.steps;
  j["max_steps"] = c.max_steps;
  j["order"] = c.series_order;
  j["sites"] = c.sites;
  j["snapshots"] = c.snapshots;
  j["fmin"] = c.f_min;
  j["fmax"] = c.f_max;
  j["points"] = c.points;
  j["log"] = c.log_grid;
  j["tau_max"] = c.tau_max;
  j["unitarity_tol"] = c.unitarity_tol;
  j["out"] = c.out;
  j["format"] = std::string(to_string(c.format));
  return j;
}

std::string csv_cell(const Cell& cell) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, cell);
}

ordered_json json_cell(const Cell& cell) {
  struct {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(long long v) const { return v; }
    ordered_json operator()(double v) const { return real_json(v); }
    ordered_json operator()(bool v) const { return v; }
    ordered_json operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, cell);
}

Cell optional_cell(const std::optional<double>& value) {
  if (value) return *value;
  return std::monostate{};
}

std::string regime_name(EdgeRegime regime) {
  switch (regime) {
    case EdgeRegime::localized:
      return "localized";
    case EdgeRegime::critical:
      return "critical";
    case EdgeRegime::delocalized:
      return "delocalized";
  }
  return "?";
}

}  // namespace

void Table::add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

void Table::write(const RunConfig& config, std::ostream& out) const {
  if (config.format == OutputFormat::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  ordered_json doc;
  doc["config"] = config_json(config);
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json object = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) object[columns[i]] = json_cell(row[i]);
    doc["rows"].push_back(std::move(object));
  }
  out << doc.dump(2) << '\n';
}

void run_evolve(const RunConfig& config, std::ostream& out) {
  const ModelParams params = model_params(config);
  const Coin bulk = bulk_coin(params);
  const Coin boundary = boundary_coin(params);
  const std::vector<int> times = snapshot_times(config);

  Table table{{"tau", "n", "prob_L", "prob_R"}, {}};
  std::size_t next = 0;
  evolve(bulk, boundary, times.empty() ? 0 : times.back(), [&](const WalkState& state) {
    if (next >= times.size() || state.tau() != times[next]) return;
    ++next;
    for (const SiteProbability& site : distribution(state)) {
      table.add({static_cast<long long>(state.tau()), static_cast<long long>(site.site), site.left,
                 site.right});
    }
  });
  table.write(config, out);
}

void run_series(const RunConfig& config, std::ostream& out) {
  const ModelParams params = model_params(config);
  const Coin bulk = bulk_coin(params);
  const Coin boundary = boundary_coin(params);
  const auto order = std::max<std::size_t>(static_cast<std::size_t>(config.series_order),
                                           static_cast<std::size_t>(config.steps) + 1);
  const auto gf = site_gf_table(bulk, boundary, config.sites, order);

  Table table{{"tau", "n", "psi_L_re", "psi_L_im", "psi_R_re", "psi_R_im"}, {}};
  for (int tau = 0; tau <= config.steps; ++tau) {
    for (int n = tau % 2; n <= std::min(tau, config.sites); n += 2) {
      const Amplitude left = gf[n].left[tau];
      const Amplitude right = gf[n].right[tau];
      table.add({static_cast<long long>(tau), static_cast<long long>(n), left.real(), left.imag(),
                 right.real(), right.imag()});
    }
  }
  table.write(config, out);
}

void run_edge(const RunConfig& config, std::ostream& out) {
  const ModelParams params = model_params(config);
  const EdgeReport report = edge_report(params);
  Table table{{"F", "p", "theta", "r", "regime", "xi", "weight", "z_pole_sq_re", "z_pole_sq_im",
               "quasi_energy", "p_c", "F_c", "J_direct", "J_paper_form", "E_direct", "localized"},
              {}};
  const auto& obs = report.observables;
  table.add({params.field, report.p, report.theta, report.r, regime_name(report.regime),
             optional_cell(report.xi), report.weight, report.z_pole_sq.real(), report.z_pole_sq.imag(),
             optional_cell(report.quasi_energy), report.p_c, report.f_c,
             obs ? Cell(obs->j_direct) : Cell(std::monostate{}),
             obs ? Cell(obs->j_paper_form) : Cell(std::monostate{}),
             obs ? Cell(obs->e_direct) : Cell(std::monostate{}), report.localized()});
  table.write(config, out);
}

void run_sweep(const RunConfig& config, std::ostream& out) {
  Table table{{"F", "p", "r", "xi", "weight", "J_direct", "J_paper_form", "E_direct", "localized"}, {}};
  for (double field : sweep_grid(config)) {
    RunConfig point = config;
    point.field = field;
    const EdgeReport report = edge_report(model_params(point));
    const auto& obs = report.observables;
    const Cell empty = std::monostate{};
    table.add({field, report.p, report.r, optional_cell(report.xi), report.weight,
               obs ? Cell(obs->j_direct) : empty, obs ? Cell(obs->j_paper_form) : empty,
               obs ? Cell(obs->e_direct) : empty, report.localized()});
  }
  table.write(config, out);
}

int execute(const RunConfig& config, std::ostream& fallback, std::ostream& errors) {
  std::ostringstream buffer;
  bool verified = true;
  try {
    validate(config);
    switch (config.mode) {
      case Mode::evolve:
        run_evolve(config, buffer);
        break;
      case Mode::series:
        run_series(config, buffer);
        break;
      case Mode::edge:
        run_edge(config, buffer);
        break;
      case Mode::sweep:
        run_sweep(config, buffer);
        break;
      case Mode::verify:
        verified = run_verify(config, buffer);
        break;
    }
  } catch (const Error& e) {
    errors << "lzwalk: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (config.out.empty()) {
      fallback << buffer.str();
      fallback.flush();
      if (!fallback) throw IoError("failed to write to standard output");
    } else {
      std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open output file '" + config.out + "'");
      file << buffer.str();
      file.flush();
      if (!file) throw IoError("failed to write output file '" + config.out + "'");
    }
  } catch (const IoError& e) {
    errors << "lzwalk: " << e.what() << '\n';
    return kExitIo;
  }
  return verified ? kExitOk : kExitVerification;
}

}  // namespace lzwalk::cli
