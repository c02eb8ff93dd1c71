#ifndef LZWALK_EDGE_HPP
#define LZWALK_EDGE_HPP

#include <optional>
#include <vector>

#include "lzwalk/coin.hpp"
#include "lzwalk/linalg.hpp"

// Analytic characterization of the state bound to the reflecting boundary.

namespace lzwalk {

/// Half-width of the band around r = 1 reported as critical.
inline constexpr double kCriticalBand = 1e-9;

enum class EdgeRegime { localized, critical, delocalized };

/// r = p / (2 - p - 2 cos(theta) sqrt(1 - p)). The edge-mode probability on even sites
/// decays by r^2 per two sites. Requires 0 < p <= 1.
double decay_ratio(double p, double theta);

/// localized for r < 1 - kCriticalBand, delocalized for r > 1 + kCriticalBand.
EdgeRegime classify(double r);

/// z^2 at the common pole of the bounded generating functions,
/// (1 - e^{-i theta} sqrt(1-p)) / (1 - e^{i theta} sqrt(1-p)). Unit modulus.
Amplitude pole(double p, double theta);

/// Residues phi^{L,R}(n) = lim_{z^2 -> z^2_pole} Psi^{L,R}(0 -> n; z) (1 - z^2 / z^2_pole)
/// on the even sites 0, 2, ..., n_max.
struct FloquetMode {
  double r = 0.0;
  Amplitude z_pole_sq;
  std::vector<Amplitude> left;   // entry i belongs to site 2i
  std::vector<Amplitude> right;  // entry i belongs to site 2i

  int max_site() const { return 2 * (static_cast<int>(left.size()) - 1); }
  /// |phi_L(n)|^2 + |phi_R(n)|^2 for even n.
  double probability(int n) const;
  /// Sum of probability over the stored sites.
  double weight() const;
};

/// Mode for the Landau-Zener coins with beta = 0, gamma = theta, gamma_tilde = 0.
FloquetMode floquet_mode(double p, double theta, int n_max);

/// Mode for an arbitrary bulk coin and reflecting boundary coin. Throws DelocalizedError
/// unless the decay ratio is localized, and PoleError if the return denominator does not
/// vanish at the pole on the physical branch.
FloquetMode floquet_mode(const Coin& bulk, const Coin& boundary, int n_max);

/// Edge-mode probability |phi_L(n)|^2 + |phi_R(n)|^2 at an even site from the geometric
/// form: (1-r)^2 r^n, plus (1-r)^2 r^{n-1} for n >= 2.
double geometric_site_probability(double r, int n);

/// Floquet quasi-energy epsilon = length * field / (2 pi) * arg z^2_pole, with hbar = 1.
/// Throws DelocalizedError outside the localized regime.
double quasi_energy(const ModelParams& params);

enum class ThresholdKind {
  transition,        // edge state for p < p_c only
  never_localized,   // sin(theta) = 0 with cos(theta) = 1
  always_localized,  // |theta| > pi/2: r < 1 for every p in (0, 1)
};

struct Thresholds {
  double p_c;
  double f_c;
  ThresholdKind kind;
};

/// p_c = sin^2(theta) and F_c = -pi fbar / (2 ln |sin theta|) for |theta| <= pi/2.
Thresholds thresholds(double theta, double fbar);

/// xi = 1 / |ln r|; infinite at r = 1.
double localization_length(double p, double theta);

struct Observables {
  double j_direct;      // direct sum over the geometric mode
  double j_paper_form;  // closed form j0 p D / (2 sqrt(1-p) (sqrt(1-p) cos(theta) - 1)^2)
  double e_direct;      // direct sum over the geometric mode
};

/// Momentum and energy of the edge mode with j^{R,L}_n = +-j0 n and E_n = e0 n^2 on even
/// sites, normalized by the edge weight 1 - r.
Observables observables(double p, double theta, double j0, double e0);

struct EdgeReport {
  double p = 0.0;
  double theta = 0.0;
  double r = 0.0;
  EdgeRegime regime = EdgeRegime::delocalized;
  double weight = 0.0;  // 1 - r when localized, 0 otherwise
  Amplitude z_pole_sq;
  double p_c = 0.0;
  double f_c = 0.0;
  ThresholdKind threshold_kind = ThresholdKind::transition;
  // Only present in the localized regime.
  std::optional<double> xi;
  std::optional<double> quasi_energy;
  std::optional<Observables> observables;

  bool localized() const { return regime == EdgeRegime::localized; }
};

EdgeReport edge_report(const ModelParams& params);

}  // namespace lzwalk

#endif  // LZWALK_EDGE_HPP
