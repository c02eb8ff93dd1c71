#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "lzwalk/checks.hpp"
#include "lzwalk/cli.hpp"
#include "table.hpp"

namespace lzwalk::cli {

namespace {

struct CoinPair {
  Coin bulk;
  Coin boundary;
};

// Oracle grid: p in {0.2, 0.5, 0.8}, theta in {pi/6, pi/4, pi/3}, beta in {0, 0.7}, with a
// nonzero boundary phase so that theta is not just gamma.
std::vector<CoinPair> reference_coins() {
  constexpr double kBoundaryPhase = 0.25;
  std::vector<CoinPair> out;
  for (double p : {0.2, 0.5, 0.8}) {
    for (double theta : {kPi / 6.0, kPi / 4.0, kPi / 3.0}) {
      for (double beta : {0.0, 0.7}) {
        out.push_back({make_bulk_coin(p, beta, theta + kBoundaryPhase),
                       make_boundary_coin(kBoundaryPhase)});
      }
    }
  }
  return out;
}

double worst_over(const std::vector<CoinPair>& coins, const std::function<double(const CoinPair&)>& f) {
  double worst = 0.0;
  for (const auto& pair : coins) worst = std::max(worst, f(pair));
  return worst;
}

}  // namespace

bool run_verify(const RunConfig& config, std::ostream& out) {
  const auto coins = reference_coins();
  const int tau_max = config.tau_max;
  Table table{{"check", "max_residual", "tolerance", "pass"}, {}};
  bool all_pass = true;
  auto record = [&](const std::string& name, double residual, double tolerance) {
    const bool pass = residual < tolerance;
    all_pass = all_pass && pass;
    table.add({name, residual, tolerance, pass});
  };

  record("norm_drift_500_steps",
         worst_over(coins, [](const CoinPair& c) { return norm_drift(c.bulk, c.boundary, 500); }),
         config.unitarity_tol);
  record("walk_vs_pathsum",
         worst_over(coins, [&](const CoinPair& c) { return walk_vs_pathsum(c.bulk, c.boundary, tau_max); }),
         1e-10);
  record("walk_vs_genfun",
         worst_over(coins, [](const CoinPair& c) { return walk_vs_genfun(c.bulk, c.boundary, 40, 8); }),
         1e-10);
  record("pqrs_structure",
         worst_over(coins,
                    [&](const CoinPair& c) { return pqrs_structure_residual(c.bulk, c.boundary, tau_max); }),
         1e-12);
  record("recursion_relation",
         worst_over(coins,
                    [&](const CoinPair& c) { return recursion_relation_residual(c.bulk, c.boundary, tau_max); }),
         1e-10);
  record("absorbing_vs_pathsum",
         worst_over(coins, [&](const CoinPair& c) { return absorbing_vs_pathsum(c.bulk, tau_max); }), 1e-10);
  record("b_closed_vs_pathsum",
         worst_over(coins, [&](const CoinPair& c) { return b_closed_vs_pathsum(c.bulk, 4, tau_max); }), 1e-10);
  record("residue_vs_geometric", residue_vs_geometric(0.2, kPi / 4.0, 20), 1e-10);

  const SimulationComparison sim = simulation_vs_floquet(0.2, kPi / 4.0, 300, 400, 6);
  record("simulation_vs_floquet_relative", sim.max_relative_error, 0.03);
  record("quasi_energy_phase_slope", std::abs(sim.fitted_phase_slope - sim.predicted_phase_slope), 1e-3);

  table.write(config, out);
  return all_pass;
}

}  // namespace lzwalk::cli
