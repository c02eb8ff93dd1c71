#include "lzwalk/edge.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lzwalk/errors.hpp"
#include "lzwalk/genfun.hpp"

namespace lzwalk {

namespace {

constexpr double kTailTolerance = 1e-15;
constexpr long long kMaxObservableTerms = 200'000'000;
// |1 - c~ A^r| at the pole; loose compared with the analytic zero to absorb the
// conditioning of the quadratic root near the pole.
constexpr double kPoleCheck = 1e-9;

void require_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("tunneling probability must lie in (0, 1]");
}

void require_localized(double r) {
  if (classify(r) != EdgeRegime::localized) {
    throw DelocalizedError("no normalizable edge state: r = " + std::to_string(r));
  }
}

}  // namespace

double decay_ratio(double p, double theta) {
  require_probability(p);
  if (!std::isfinite(theta)) throw DomainError("theta must be finite");
  const double back = std::sqrt(1.0 - p);
  // Equals (back - cos theta)^2 + sin^2 theta, positive for p > 0.
  const double denominator = 2.0 - p - 2.0 * std::cos(theta) * back;
  if (!(denominator > 0.0)) throw SingularityError("decay ratio denominator vanished");
  return p / denominator;
}

EdgeRegime classify(double r) {
  if (r < 1.0 - kCriticalBand) return EdgeRegime::localized;
  if (r > 1.0 + kCriticalBand) return EdgeRegime::delocalized;
  return EdgeRegime::critical;
}

Amplitude pole(double p, double theta) {
  require_probability(p);
  if (!std::isfinite(theta)) throw DomainError("theta must be finite");
  const double back = std::sqrt(1.0 - p);
  const Amplitude numerator = 1.0 - std::polar(back, -theta);
  return numerator / std::conj(numerator);
}

double FloquetMode::probability(int n) const {
  if (n < 0 || n % 2 != 0 || n > max_site()) return 0.0;
  const auto i = static_cast<std::size_t>(n / 2);
  return std::norm(left[i]) + std::norm(right[i]);
}

double FloquetMode::weight() const {
  double total = 0.0;
  for (std::size_t i = 0; i < left.size(); ++i) total += std::norm(left[i]) + std::norm(right[i]);
  return total;
}

FloquetMode floquet_mode(double p, double theta, int n_max) {
  return floquet_mode(make_bulk_coin(p, 0.0, theta), make_boundary_coin(0.0), n_max);
}

FloquetMode floquet_mode(const Coin& bulk, const Coin& boundary, int n_max) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  const double p = std::norm(bulk.a());
  const double theta = reduce_phase(std::arg(bulk.b()) - std::arg(boundary.b()));
  const double r = decay_ratio(p, theta);
  require_localized(r);

  const Amplitude a = bulk.a(), c = bulk.c(), d = bulk.d();
  const Amplitude delta = bulk.det();
  const Amplitude ct = boundary.c();

  FloquetMode mode;
  mode.r = r;
  mode.z_pole_sq = pole(p, theta);
  const Amplitude z = std::sqrt(mode.z_pole_sq);

  const Amplitude lambda = lambda_plus_eval(bulk, z);
  const Amplitude denominator = 1.0 - ct * (d * lambda - delta * z) * z / c;
  if (!(std::abs(denominator) < kPoleCheck)) {
    throw PoleError("return denominator does not vanish at z_pole: |1 - c~ A^r| = " +
                    std::to_string(std::abs(denominator)));
  }

  // Psi = N / D near a simple zero of D:  (1 - z^2/z_p^2) / D -> -2 / (z_p D'(z_p)).
  const Amplitude slope = lambda_plus_slope(bulk, z, lambda);
  const Amplitude absorbing_slope = ((d * slope - delta) * z + (d * lambda - delta * z)) / c;
  const Amplitude residue_factor = -2.0 / (z * (-ct * absorbing_slope));

  const Amplitude ratio = d * lambda / a;
  Spinor site{ct * d / (a * c) * (lambda - a * z) * residue_factor, ct * z * residue_factor};

  // Site 0 is fed by P from site 1 only.
  const Spinor origin = pqrs_decompose(bulk).p * site;
  mode.left.push_back(z * origin.left);
  mode.right.push_back(z * origin.right);

  for (int n = 1; n + 1 <= n_max; n += 2) {
    // site holds n; advance to n + 1.
    site.left *= ratio;
    site.right *= ratio;
    mode.left.push_back(site.left);
    mode.right.push_back(site.right);
    site.left *= ratio;
    site.right *= ratio;
  }
  return mode;
}

double geometric_site_probability(double r, int n) {
  if (n < 0 || n % 2 != 0) return 0.0;
  const double scale = (1.0 - r) * (1.0 - r);
  double value = scale * std::pow(r, n);
  if (n >= 2) value += scale * std::pow(r, n - 1);
  return value;
}

double quasi_energy(const ModelParams& params) {
  params.validate();
  const double p = params.probability();
  const double theta = params.theta();
  require_localized(decay_ratio(p, theta));
  return params.length * params.field / (2.0 * kPi) * std::arg(pole(p, theta));
}

Thresholds thresholds(double theta, double fbar) {
  if (!(fbar > 0.0) || !std::isfinite(fbar)) throw DomainError("fbar must be positive and finite");
  theta = reduce_phase(theta);
  const double inf = std::numeric_limits<double>::infinity();
  if (std::abs(theta) > kPi / 2.0) return {1.0, inf, ThresholdKind::always_localized};
  const double s = std::abs(std::sin(theta));
  if (s == 0.0) return {0.0, 0.0, ThresholdKind::never_localized};
  if (s >= 1.0) return {1.0, inf, ThresholdKind::transition};
  return {s * s, -kPi * fbar / (2.0 * std::log(s)), ThresholdKind::transition};
}

double localization_length(double p, double theta) {
  const double log_r = std::log(decay_ratio(p, theta));
  if (log_r == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::abs(log_r);
}

Observables observables(double p, double theta, double j0, double e0) {
  const double r = decay_ratio(p, theta);
  require_localized(r);

  // Terms on even n >= 2 (site 0 carries j = E = 0):
  //   J: n (|phi_R|^2 - |phi_L|^2) = n (1-r)^2 r^{n-1} (1 - r)
  //   E: n^2 (|phi_R|^2 + |phi_L|^2) = n^2 (1-r)^2 r^{n-1} (1 + r)
  const double scale = (1.0 - r) * (1.0 - r);
  const double r_sq = r * r;
  double power = r;  // r^{n-1}
  double j_sum = 0.0;
  double e_sum = 0.0;
  for (long long terms = 0;; ++terms) {
    if (terms > kMaxObservableTerms) {
      throw ResourceError("edge observable sum did not converge within " +
                          std::to_string(kMaxObservableTerms) + " terms (r too close to 1)");
    }
    const double n = 2.0 * static_cast<double>(terms + 1);
    const double base = scale * power;
    j_sum += n * base * (1.0 - r);
    e_sum += n * n * base * (1.0 + r);

    // Terms decrease by r^2 ((m+2)/m)^k for m >= n + 2; bound the tail by the next term over
    // one minus the largest remaining ratio.
    const double next_n = n + 2.0;
    const double next_base = base * r_sq;
    const double growth = (next_n + 2.0) / next_n;
    const double rho_j = r_sq * growth;
    const double rho_e = r_sq * growth * growth;
    if (rho_e < 1.0) {
      const double j_tail = next_n * next_base * (1.0 - r) / (1.0 - rho_j);
      const double e_tail = next_n * next_n * next_base * (1.0 + r) / (1.0 - rho_e);
      if (j_tail <= kTailTolerance * std::max(1.0, j_sum) &&
          e_tail <= kTailTolerance * std::max(1.0, e_sum)) {
        break;
      }
    }
    power *= r_sq;
  }

  const double weight = 1.0 - r;
  const double back = std::sqrt(1.0 - p);
  const double shifted = back * std::cos(theta) - 1.0;
  const double closed = p * (2.0 - p - 2.0 * std::cos(theta) * back) / (2.0 * back * shifted * shifted);
  return {j0 * j_sum / weight, j0 * closed, e0 * e_sum / weight};
}

EdgeReport edge_report(const ModelParams& params) {
  params.validate();
  EdgeReport report;
  report.p = params.probability();
  report.theta = params.theta();
  report.r = decay_ratio(report.p, report.theta);
  report.regime = classify(report.r);
  report.z_pole_sq = pole(report.p, report.theta);
  const Thresholds t = thresholds(report.theta, params.fbar);
  report.p_c = t.p_c;
  report.f_c = t.f_c;
  report.threshold_kind = t.kind;
  if (report.localized()) {
    report.weight = 1.0 - report.r;
    report.xi = localization_length(report.p, report.theta);
    report.quasi_energy = quasi_energy(params);
    report.observables = observables(report.p, report.theta, params.j0, params.e0);
  }
  return report;
}

}  // namespace lzwalk
