#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "lzwalk/cli.hpp"
#include "lzwalk/pathsum.hpp"

namespace lzwalk::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw ConfigError("invalid number for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw ConfigError("invalid integer for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("invalid boolean for '" + std::string(key) + "': '" + std::string(text) + "'");
}

std::vector<int> parse_int_list(std::string_view key, std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_int(key, trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

// Shortest text that reads back to the same double.
std::string exact_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void apply(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "mode") {
    cfg.mode = parse_mode(value);
  } else if (key == "p") {
    cfg.p = parse_real(key, value);
  } else if (key == "field") {
    cfg.field = parse_real(key, value);
  } else if (key == "fbar") {
    cfg.fbar = parse_real(key, value);
  } else if (key == "beta") {
    cfg.beta = parse_real(key, value);
  } else if (key == "gamma") {
    cfg.gamma = parse_real(key, value);
  } else if (key == "gamma_tilde") {
    cfg.gamma_tilde = parse_real(key, value);
  } else if (key == "theta") {
    cfg.gamma = parse_real(key, value);
    cfg.gamma_tilde = 0.0;
  } else if (key == "length") {
    cfg.length = parse_real(key, value);
  } else if (key == "j0") {
    cfg.j0 = parse_real(key, value);
  } else if (key == "e0") {
    cfg.e0 = parse_real(key, value);
  } else if (key == "steps") {
    cfg.steps = parse_int(key, value);
  } else if (key == "max_steps") {
    cfg.max_steps = parse_int(key, value);
  } else if (key == "order") {
    cfg.series_order = parse_int(key, value);
  } else if (key == "sites") {
    cfg.sites = parse_int(key, value);
  } else if (key == "snapshots") {
    cfg.snapshots = parse_int_list(key, value);
  } else if (key == "fmin") {
    cfg.f_min = parse_real(key, value);
  } else if (key == "fmax") {
    cfg.f_max = parse_real(key, value);
  } else if (key == "points") {
    cfg.points = parse_int(key, value);
  } else if (key == "log") {
    cfg.log_grid = parse_bool(key, value);
  } else if (key == "tau_max") {
    cfg.tau_max = parse_int(key, value);
  } else if (key == "unitarity_tol") {
    cfg.unitarity_tol = parse_real(key, value);
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::evolve:
      return "evolve";
    case Mode::series:
      return "series";
    case Mode::edge:
      return "edge";
    case Mode::sweep:
      return "sweep";
    case Mode::verify:
      return "verify";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::evolve, Mode::series, Mode::edge, Mode::sweep, Mode::verify}) {
    if (text == to_string(m)) return m;
  }
  throw ConfigError("unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + std::string(text) + "'");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  int line_number = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    const std::string_view line = trim(text.substr(0, newline));
    text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_number) + ": expected 'key = value'");
    }
    apply(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::move(base));
}

std::string emit_config(const RunConfig& c) {
  std::ostringstream out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  line("mode", std::string(to_string(c.mode)));
  if (c.p) line("p", exact_real(*c.p));
  if (c.field) line("field", exact_real(*c.field));
  line("fbar", exact_real(c.fbar));
  line("beta", exact_real(c.beta));
  line("gamma", exact_real(c.gamma));
  line("gamma_tilde", exact_real(c.gamma_tilde));
  line("length", exact_real(c.length));
  line("j0", exact_real(c.j0));
  line("e0", exact_real(c.e0));
  line("steps", std::to_string(c.steps));
  line("max_steps", std::to_string(c.max_steps));
  line("order", std::to_string(c.series_order));
  line("sites", std::to_string(c.sites));
  if (!c.snapshots.empty()) {
    std::string list;
    for (std::size_t i = 0; i < c.snapshots.size(); ++i) {
      if (i > 0) list += ',';
      list += std::to_string(c.snapshots[i]);
    }
    line("snapshots", list);
  }
  line("fmin", exact_real(c.f_min));
  line("fmax", exact_real(c.f_max));
  line("points", std::to_string(c.points));
  line("log", c.log_grid ? "true" : "false");
  line("tau_max", std::to_string(c.tau_max));
  line("unitarity_tol", exact_real(c.unitarity_tol));
  line("out", c.out);
  line("format", std::string(to_string(c.format)));
  return out.str();
}

void validate(const RunConfig& c) {
  auto fail = [](const std::string& what) { throw ConfigError(what); };
  const bool needs_probability = c.mode == Mode::evolve || c.mode == Mode::series || c.mode == Mode::edge;
  if (c.p && c.field) fail("give exactly one of p and field, not both");
  if (needs_probability && !c.p && !c.field) fail("one of p or field is required");
  if (c.mode == Mode::sweep && (c.p || c.field)) fail("sweep takes its fields from the grid; drop p/field");
  if (c.p && !(*c.p > 0.0 && *c.p <= 1.0)) fail("p must lie in (0, 1]");
  if (c.field && !(*c.field > 0.0 && std::isfinite(*c.field))) fail("field must be positive");
  if (!(c.fbar > 0.0) || !std::isfinite(c.fbar)) fail("fbar must be positive");
  for (double phase : {c.beta, c.gamma, c.gamma_tilde, c.j0, c.e0}) {
    if (!std::isfinite(phase)) fail("phases and units must be finite");
  }
  if (!(c.length > 0.0) || !std::isfinite(c.length)) fail("length must be positive");
  if (c.max_steps < 0) fail("max_steps must be non-negative");
  if (c.steps < 0) fail("steps must be non-negative");
  if (c.steps > c.max_steps) {
    fail("steps " + std::to_string(c.steps) + " exceeds the cap of " + std::to_string(c.max_steps));
  }
  if (c.series_order < 2) fail("order must be at least 2");
  if (c.sites < 0) fail("sites must be non-negative");
  for (int t : c.snapshots) {
    if (t < 0 || t > c.steps) fail("snapshot " + std::to_string(t) + " is outside [0, steps]");
  }
  if (c.mode == Mode::sweep) {
    if (c.points < 2) fail("a sweep needs at least 2 grid points");
    if (!(c.f_min > 0.0) || !(c.f_max > c.f_min) || !std::isfinite(c.f_max)) {
      fail("sweep grid needs 0 < fmin < fmax");
    }
  }
  if (c.tau_max < 1 || c.tau_max > kMaxPathSteps) {
    fail("tau_max must lie in [1, " + std::to_string(kMaxPathSteps) + "]");
  }
  if (!(c.unitarity_tol >= 0.0)) fail("unitarity_tol must be non-negative");
}

ModelParams model_params(const RunConfig& c) {
  ModelParams params;
  if (c.p) {
    params = ModelParams::from_probability(*c.p, c.fbar, c.beta, c.gamma, c.gamma_tilde);
  } else {
    params.field = c.field.value_or(1.0);
    params.fbar = c.fbar;
    params.beta = c.beta;
    params.gamma = c.gamma;
    params.gamma_tilde = c.gamma_tilde;
  }
  params.length = c.length;
  params.j0 = c.j0;
  params.e0 = c.e0;
  return params;
}

std::vector<int> snapshot_times(const RunConfig& c) {
  std::vector<int> times = c.snapshots;
  if (times.empty()) {
    for (int quarter = 0; quarter <= 4; ++quarter) {
      const int t = static_cast<int>(static_cast<long long>(c.steps) * quarter / 4);
      times.push_back(t - t % 2);
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

std::vector<double> sweep_grid(const RunConfig& c) {
  std::vector<double> grid(static_cast<std::size_t>(c.points));
  const double last = static_cast<double>(c.points - 1);
  for (int i = 0; i < c.points; ++i) {
    const double t = static_cast<double>(i) / last;
    grid[i] = c.log_grid ? std::exp(std::log(c.f_min) + t * (std::log(c.f_max) - std::log(c.f_min)))
                         : c.f_min + t * (c.f_max - c.f_min);
  }
  grid.front() = c.f_min;
  grid.back() = c.f_max;
  return grid;
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.16e", value);
  return buffer;
}

}  // namespace lzwalk::cli
