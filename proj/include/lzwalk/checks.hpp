#ifndef LZWALK_CHECKS_HPP
#define LZWALK_CHECKS_HPP

#include <vector>

#include "lzwalk/coin.hpp"

// Cross-engine consistency checks. Each returns the largest deviation found, so callers
// can compare against their own tolerance and report the measured residual.

namespace lzwalk {

/// max_{tau <= tau_max, n} |walk amplitude - Xi^b(0 -> n; tau) (1, 0)^T|
double walk_vs_pathsum(const Coin& bulk, const Coin& boundary, int tau_max);

/// max_{tau <= tau_max, n <= n_max} |walk amplitude - [z^tau] Psi^{L,R}(0 -> n; z)|
double walk_vs_genfun(const Coin& bulk, const Coin& boundary, int tau_max, int n_max);

/// max_{tau <= steps} |norm - 1| along the evolution.
double norm_drift(const Coin& bulk, const Coin& boundary, int steps);

/// Largest P~ or S~ component of Xi^b(0 -> n; tau) over 1 <= n <= tau <= tau_max.
double pqrs_structure_residual(const Coin& bulk, const Coin& boundary, int tau_max);

/// Coefficient-wise residual of the recursion
///   B~^{q,r}(0 -> n; z) = [1 + c~ B~^r(0 -> 0; z)] d z B^{q,r}(0 -> n-1; z)
/// with every coefficient taken from path sums, 1 <= n <= tau_max, orders 0..tau_max.
double recursion_relation_residual(const Coin& bulk, const Coin& boundary, int tau_max);

/// |A^r(0 -> 0; z) series - R coefficients of the absorbing path sum| for tau <= tau_max.
double absorbing_vs_pathsum(const Coin& bulk, int tau_max);

/// |closed-form B^{q,r}(0 -> n; z) series - path-sum coefficients|, n <= n_max, tau <= tau_max.
double b_closed_vs_pathsum(const Coin& bulk, int n_max, int tau_max);

/// Max deviation of residue-extracted |phi_{L,R}(n)|^2 from the geometric form on even
/// n <= n_max, together with |sum - (1 - r)| for the full mode.
double residue_vs_geometric(double p, double theta, int n_max);

struct SimulationComparison {
  double max_relative_error;  // time-averaged P(n) vs geometric edge probability, even n
  double fitted_phase_slope;  // d arg psi_L(0, tau) / d tau from a linear fit
  double predicted_phase_slope;  // -arg(z^2_pole) / 2
  std::vector<double> averaged;  // time-averaged probability per even site
  std::vector<double> predicted;
};

/// Evolve to tau_hi and compare even-tau averages over [tau_lo, tau_hi] on even n <= n_max
/// with the edge mode for the Landau-Zener coins (beta = 0, gamma = theta, gamma_tilde = 0).
SimulationComparison simulation_vs_floquet(double p, double theta, int tau_lo, int tau_hi,
                                           int n_max);

/// Probability carried by sites n <= n0 after `steps` steps.
double boundary_mass(const Coin& bulk, const Coin& boundary, int steps, int n0);

}  // namespace lzwalk

#endif  // LZWALK_CHECKS_HPP
