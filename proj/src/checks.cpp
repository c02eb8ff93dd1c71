#include "lzwalk/checks.hpp"

#include <algorithm>
#include <cmath>

#include "lzwalk/edge.hpp"
#include "lzwalk/errors.hpp"
#include "lzwalk/fit.hpp"
#include "lzwalk/genfun.hpp"
#include "lzwalk/pathsum.hpp"
#include "lzwalk/series.hpp"
#include "lzwalk/walk.hpp"

namespace lzwalk {

namespace {

double spinor_gap(const Spinor& x, const Spinor& y) {
  return std::max(std::abs(x.left - y.left), std::abs(x.right - y.right));
}

// Q and R coefficient series of Xi(0 -> n; tau) for tau < order, read from path sums in the
// basis of `basis_coin`. The empty path at n = 0 is the identity; it acts on Q~ from the
// right like Q~ / d, so it is recorded as (1/d, 0) when `identity_as_q` is set and skipped
// otherwise.
struct CoefficientSeries {
  Series q;
  Series r;
};

CoefficientSeries path_coefficients(const Coin& bulk, const Coin& boundary, const Coin& basis_coin,
                                    int n, int tau_max, Boundary kind, bool identity_as_q) {
  const auto order = static_cast<std::size_t>(tau_max + 1);
  CoefficientSeries out{Series(order), Series(order)};
  for (int tau = n; tau <= tau_max; ++tau) {
    if ((tau - n) % 2 != 0) continue;
    if (tau == 0) {
      if (identity_as_q) out.q[0] = 1.0 / basis_coin.d();
      continue;
    }
    const auto amplitude = transition_amplitude(n, tau, bulk, boundary, kind);
    const auto coefficients = pqrs_coefficients(amplitude, basis_coin);
    out.q[tau] = coefficients.q;
    out.r[tau] = coefficients.r;
  }
  return out;
}

double series_gap(const Series& x, const Series& y, std::size_t order) {
  double gap = 0.0;
  for (std::size_t k = 0; k < order; ++k) gap = std::max(gap, std::abs(x.coefficient(k) - y.coefficient(k)));
  return gap;
}

}  // namespace

double walk_vs_pathsum(const Coin& bulk, const Coin& boundary, int tau_max) {
  double worst = 0.0;
  const Spinor ground{1.0, 0.0};
  evolve(bulk, boundary, tau_max, [&](const WalkState& state) {
    for (int n = 0; n <= state.tau(); ++n) {
      const auto amplitude = transition_amplitude(n, state.tau(), bulk, boundary, Boundary::reflecting);
      worst = std::max(worst, spinor_gap(state.at(n), amplitude.matrix * ground));
    }
  });
  return worst;
}

double walk_vs_genfun(const Coin& bulk, const Coin& boundary, int tau_max, int n_max) {
  const auto table = site_gf_table(bulk, boundary, n_max, static_cast<std::size_t>(tau_max + 1));
  double worst = 0.0;
  evolve(bulk, boundary, tau_max, [&](const WalkState& state) {
    const auto tau = static_cast<std::size_t>(state.tau());
    for (int n = 0; n <= n_max; ++n) {
      const Spinor series{table[n].left[tau], table[n].right[tau]};
      worst = std::max(worst, spinor_gap(state.at(n), series));
    }
  });
  return worst;
}

double norm_drift(const Coin& bulk, const Coin& boundary, int steps) {
  double worst = 0.0;
  evolve(bulk, boundary, steps,
         [&](const WalkState& state) { worst = std::max(worst, std::abs(state.norm() - 1.0)); });
  return worst;
}

double pqrs_structure_residual(const Coin& bulk, const Coin& boundary, int tau_max) {
  const PqrsBasis basis = pqrs_decompose(boundary);
  double worst = 0.0;
  for (int tau = 1; tau <= tau_max; ++tau) {
    for (int n = 1; n <= tau; ++n) {
      const auto amplitude = transition_amplitude(n, tau, bulk, boundary, Boundary::reflecting);
      const auto parts = pqrs_components(amplitude.matrix, basis);
      worst = std::max({worst, std::abs(parts.p), std::abs(parts.s)});
    }
  }
  return worst;
}

double recursion_relation_residual(const Coin& bulk, const Coin& boundary, int tau_max) {
  const auto order = static_cast<std::size_t>(tau_max + 1);
  const auto returns = path_coefficients(bulk, boundary, boundary, 0, tau_max, Boundary::reflecting, false);
  const Series prefactor =
      (1.0 + boundary.c() * returns.r) * Series::variable(order) * bulk.d();

  double worst = 0.0;
  for (int n = 1; n <= tau_max; ++n) {
    const auto lhs = path_coefficients(bulk, boundary, boundary, n, tau_max, Boundary::reflecting, false);
    const auto inner = path_coefficients(bulk, bulk, bulk, n - 1, tau_max, Boundary::reflecting, true);
    worst = std::max(worst, series_gap(lhs.q, prefactor * inner.q, order));
    worst = std::max(worst, series_gap(lhs.r, prefactor * inner.r, order));
  }
  return worst;
}

double absorbing_vs_pathsum(const Coin& bulk, int tau_max) {
  const auto order = static_cast<std::size_t>(tau_max + 1);
  const auto paths = path_coefficients(bulk, bulk, bulk, 0, tau_max, Boundary::absorbing, false);
  return series_gap(absorbing_gf_series(bulk, std::max<std::size_t>(order, 2)), paths.r, order);
}

double b_closed_vs_pathsum(const Coin& bulk, int n_max, int tau_max) {
  const auto order = static_cast<std::size_t>(tau_max + 1);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const auto paths = path_coefficients(bulk, bulk, bulk, n, tau_max, Boundary::reflecting, true);
    const auto closed = b_gf_closed_series(bulk, n, std::max<std::size_t>(order, 2));
    worst = std::max({worst, series_gap(closed.q, paths.q, order), series_gap(closed.r, paths.r, order)});
  }
  return worst;
}

double residue_vs_geometric(double p, double theta, int n_max) {
  const FloquetMode mode = floquet_mode(p, theta, n_max);
  const double r = mode.r;
  const double scale = (1.0 - r) * (1.0 - r);
  double worst = 0.0;
  for (int n = 0; n <= mode.max_site(); n += 2) {
    const auto i = static_cast<std::size_t>(n / 2);
    const double left = scale * std::pow(r, n);
    const double right = n >= 2 ? scale * std::pow(r, n - 1) : 0.0;
    worst = std::max({worst, std::abs(std::norm(mode.left[i]) - left),
                      std::abs(std::norm(mode.right[i]) - right)});
  }
  // Full weight: stored sites plus the geometric tail beyond n_max.
  const double tail_start = static_cast<double>(mode.max_site() + 2);
  const double tail = scale * std::pow(r, tail_start) * (1.0 + 1.0 / r) / (1.0 - r * r);
  worst = std::max(worst, std::abs(mode.weight() + tail - (1.0 - r)));
  return worst;
}

SimulationComparison simulation_vs_floquet(double p, double theta, int tau_lo, int tau_hi, int n_max) {
  if (tau_lo < 0 || tau_hi < tau_lo) throw DomainError("invalid averaging window");
  const Coin bulk = make_bulk_coin(p, 0.0, theta);
  const Coin boundary = make_boundary_coin(0.0);
  const double r = decay_ratio(p, theta);

  const int sites = n_max / 2 + 1;
  SimulationComparison out{};
  out.averaged.assign(sites, 0.0);
  std::vector<double> times;
  std::vector<double> phases;
  int samples = 0;
  evolve(bulk, boundary, tau_hi, [&](const WalkState& state) {
    if (state.tau() < tau_lo || state.tau() % 2 != 0) return;
    ++samples;
    for (int i = 0; i < sites; ++i) out.averaged[i] += state.at(2 * i).norm_sq();
    times.push_back(state.tau());
    phases.push_back(std::arg(state.at(0).left));
  });
  for (double& value : out.averaged) value /= samples;

  out.max_relative_error = 0.0;
  for (int i = 0; i < sites; ++i) {
    const double expected = geometric_site_probability(r, 2 * i);
    out.predicted.push_back(expected);
    out.max_relative_error =
        std::max(out.max_relative_error, std::abs(out.averaged[i] - expected) / expected);
  }
  const auto unwrapped = unwrap_phase(phases);
  out.fitted_phase_slope = linear_fit(times, unwrapped).slope;
  out.predicted_phase_slope = -std::arg(pole(p, theta)) / 2.0;
  return out;
}

double boundary_mass(const Coin& bulk, const Coin& boundary, int steps, int n0) {
  const WalkState state = evolve(bulk, boundary, steps);
  double mass = 0.0;
  for (int n = 0; n <= std::min(n0, state.tau()); ++n) mass += state.at(n).norm_sq();
  return mass;
}

}  // namespace lzwalk
