#include <doctest.h>

#include <cmath>
#include <vector>

#include "lzwalk/checks.hpp"
#include "lzwalk/edge.hpp"
#include "lzwalk/errors.hpp"
#include "lzwalk/fit.hpp"
#include "lzwalk/genfun.hpp"
#include "oracles.hpp"

using namespace lzwalk;

namespace {

constexpr double kQuarter = kPi / 4.0;

// Reference values for p = 0.2, theta = pi/4.
constexpr double kR = 0.37376964195943313;
constexpr double kXi = 1.016140784729431;
constexpr double kJDirect = 0.3961012293408168;
constexpr double kJClosedForm = 0.4428546373886504;
constexpr double kArgPole = 2.0887215836740483;
constexpr double kEnergyPerField = 0.33243036478445664;
constexpr double kFc = 4.532360141827194;
constexpr double kPhiL0 = 0.39216446133161653;

double brute_j(double r) {
  double sum = 0.0;
  for (int n = 2; n < 4000; n += 2) sum += n * (std::pow(r, n - 1) - std::pow(r, n)) * (1 - r) * (1 - r);
  return sum / (1.0 - r);
}

double brute_e(double r) {
  double sum = 0.0;
  for (int n = 2; n < 4000; n += 2) sum += double(n) * n * (std::pow(r, n - 1) + std::pow(r, n)) * (1 - r) * (1 - r);
  return sum / (1.0 - r);
}

// Limit of Psi(0 -> n; z) (1 - z^2 / z_p^2) along the real approach z^2 = z_p^2 (1 - t),
// with one Richardson step.
Spinor residue_limit(const Coin& u, const Coin& ut, Amplitude z_sq, int n) {
  auto scaled = [&](double t) {
    const Amplitude z = std::sqrt(z_sq * (1.0 - t));
    if (n == 0) return Spinor{gf_site0_eval(u, ut, z) * t, 0.0};
    const Spinor s = bounded_gf_eval(u, ut, n, z);
    return Spinor{s.left * t, s.right * t};
  };
  const double t = 1e-5;
  const Spinor f1 = scaled(t);
  const Spinor f2 = scaled(2.0 * t);
  return {2.0 * f1.left - f2.left, 2.0 * f1.right - f2.right};
}

}  // namespace

TEST_CASE("decay ratio, size and pole at p = 0.2, theta = pi/4") {
  CHECK(std::abs(decay_ratio(0.2, kQuarter) - kR) < 1e-14);
  CHECK(std::abs(decay_ratio(0.2, kQuarter) - oracle::decay_ratio(0.2, kQuarter)) < 1e-15);
  CHECK(std::abs(localization_length(0.2, kQuarter) - kXi) < 1e-12);
  CHECK(std::abs(localization_length(0.2, kQuarter) - 1.0 / std::abs(std::log(kR))) < 1e-14);
  const Amplitude z = pole(0.2, kQuarter);
  CHECK(std::abs(std::arg(z) - kArgPole) < 1e-12);
  CHECK(classify(kR) == EdgeRegime::localized);
  CHECK(classify(1.0) == EdgeRegime::critical);
  CHECK(classify(1.5) == EdgeRegime::delocalized);
}

TEST_CASE("no edge state without a phase mismatch") {
  for (int i = 1; i <= 50; ++i) {
    const double p = i / 51.0;
    CHECK(decay_ratio(p, 0.0) >= 1.0);
  }
}

TEST_CASE("r approaches 1 at the threshold probability") {
  for (double theta : {kPi / 6.0, kQuarter, kPi / 3.0, 1.2}) {
    const double pc = std::sin(theta) * std::sin(theta);
    CHECK(std::abs(decay_ratio(pc, theta) - 1.0) < 1e-12);
    CHECK(decay_ratio(pc * 0.99, theta) < 1.0);
    CHECK(decay_ratio(std::min(0.999, pc * 1.01), theta) > 1.0);
    const Thresholds th = thresholds(theta, 1.0);
    CHECK(th.kind == ThresholdKind::transition);
    CHECK(std::abs(th.p_c - pc) < 1e-15);
    CHECK(std::abs(tunneling_probability(th.f_c, 1.0) - pc) < 1e-12);
  }
}

TEST_CASE("thresholds") {
  const Thresholds quarter = thresholds(kQuarter, 1.0);
  CHECK(std::abs(quarter.p_c - 0.5) < 1e-15);
  CHECK(std::abs(quarter.f_c - kFc) < 1e-12);
  CHECK(std::abs(quarter.f_c - kPi / std::log(2.0)) < 1e-12);

  const Thresholds half = thresholds(kPi / 2.0, 1.0);
  CHECK(half.p_c == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(half.kind == ThresholdKind::transition);

  const Thresholds none = thresholds(0.0, 1.0);
  CHECK(none.kind == ThresholdKind::never_localized);
  CHECK(none.p_c == 0.0);

  const Thresholds wide = thresholds(3.0 * kPi / 4.0, 1.0);
  CHECK(wide.kind == ThresholdKind::always_localized);
  CHECK(std::isinf(wide.f_c));
  for (double p : {0.1, 0.5, 0.9, 0.99}) CHECK(decay_ratio(p, 3.0 * kPi / 4.0) < 1.0);

  CHECK(thresholds(-kQuarter, 2.0).f_c == thresholds(kQuarter, 2.0).f_c);
}

TEST_CASE("the pole lies on the unit circle") {
  for (int i = 1; i < 20; ++i) {
    for (int j = -10; j <= 10; ++j) {
      const Amplitude z = pole(i / 20.0, j * kPi / 10.0);
      CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("theta -> -theta symmetry") {
  for (double p : {0.1, 0.2, 0.4}) {
    for (double theta : {0.5, kQuarter, 1.1}) {
      CHECK(decay_ratio(p, -theta) == decay_ratio(p, theta));
      if (decay_ratio(p, theta) >= 1.0) continue;
      CHECK(std::abs(std::arg(pole(p, -theta)) + std::arg(pole(p, theta))) < 1e-14);
      const Observables a = observables(p, theta, 1.0, 1.0);
      const Observables b = observables(p, -theta, 1.0, 1.0);
      CHECK(a.j_direct == b.j_direct);
      CHECK(a.e_direct == b.e_direct);
    }
  }
}

TEST_CASE("residues reproduce the geometric edge mode") {
  const FloquetMode mode = floquet_mode(0.2, kQuarter, 20);
  CHECK(mode.max_site() == 20);
  CHECK(std::abs(std::norm(mode.left[0]) - kPhiL0) < 1e-12);
  CHECK(std::abs(mode.right[0]) < 1e-15);
  for (int i = 0; i <= 10; ++i) {
    const int n = 2 * i;
    const double pl = std::pow(kR, n) * (1 - kR) * (1 - kR);
    const double pr = n == 0 ? 0.0 : std::pow(kR, n - 1) * (1 - kR) * (1 - kR);
    CHECK(std::abs(std::norm(mode.left[i]) - pl) < 1e-10);
    CHECK(std::abs(std::norm(mode.right[i]) - pr) < 1e-10);
    CHECK(std::abs(mode.probability(n) - geometric_site_probability(kR, n)) < 1e-10);
  }
  const double tail = (1.0 - kR) * (1.0 - kR) * (std::pow(kR, 22) + std::pow(kR, 21)) / (1.0 - kR * kR);
  CHECK(std::abs(mode.weight() + tail - (1.0 - kR)) < 1e-10);
  CHECK(residue_vs_geometric(0.2, kQuarter, 20) < 1e-10);
}

TEST_CASE("analytic residues equal the numerical limit at the pole") {
  struct Case {
    double p, beta, gamma, gamma_tilde;
  };
  for (const Case c : {Case{0.2, 0.0, kQuarter, 0.0}, Case{0.3, 0.7, 1.4, 0.25}, Case{0.1, -1.0, 0.2, -0.6}}) {
    const Coin u = make_bulk_coin(c.p, c.beta, c.gamma);
    const Coin ut = make_boundary_coin(c.gamma_tilde);
    const FloquetMode mode = floquet_mode(u, ut, 8);
    for (int i = 0; i <= 4; ++i) {
      const Spinor limit = residue_limit(u, ut, mode.z_pole_sq, 2 * i);
      CHECK(std::abs(mode.left[i] - limit.left) < 1e-7);
      CHECK(std::abs(mode.right[i] - limit.right) < 1e-7);
    }
    const double r = oracle::decay_ratio(c.p, c.gamma - c.gamma_tilde);
    CHECK(std::abs(mode.probability(4) - geometric_site_probability(r, 4)) < 1e-10);
  }
}

TEST_CASE("Floquet mode errors outside the localized regime") {
  CHECK_THROWS_AS(floquet_mode(0.7, kQuarter, 10), DelocalizedError);
  CHECK_THROWS_AS(floquet_mode(0.3, 0.0, 10), DelocalizedError);
}

TEST_CASE("quasi-energy") {
  for (double fbar : {0.5, 1.0, 2.0}) {
    ModelParams params = ModelParams::from_probability(0.2, fbar, 0.0, kQuarter, 0.0);
    CHECK(std::abs(quasi_energy(params) - kEnergyPerField * params.field) < 1e-12);
    params.length = 3.0;
    CHECK(std::abs(quasi_energy(params) - 3.0 * kEnergyPerField * params.field) < 1e-11);
  }
  const ModelParams deloc = ModelParams::from_probability(0.7, 1.0, 0.0, kQuarter, 0.0);
  CHECK_THROWS_AS(quasi_energy(deloc), DelocalizedError);
}

TEST_CASE("observables") {
  const Observables obs = observables(0.2, kQuarter, 1.0, 1.0);
  CHECK(std::abs(obs.j_direct - kJDirect) < 1e-12);
  CHECK(std::abs(obs.j_paper_form - kJClosedForm) < 1e-12);
  CHECK(std::abs(obs.j_direct - 2 * kR / ((1 + kR) * (1 + kR))) < 1e-14);
  CHECK(std::abs(obs.e_direct - 4 * kR * (1 + kR * kR) / std::pow(1 - kR * kR, 2)) < 1e-13);
  CHECK(std::abs(obs.j_direct - brute_j(kR)) < 1e-12);
  CHECK(std::abs(obs.e_direct - brute_e(kR)) < 1e-12);

  const Observables scaled = observables(0.2, kQuarter, 2.5, -3.0);
  CHECK(std::abs(scaled.j_direct - 2.5 * obs.j_direct) < 1e-14);
  CHECK(std::abs(scaled.e_direct + 3.0 * obs.e_direct) < 1e-13);

  for (double p : {0.05, 0.2, 0.35, 0.45}) {
    for (double theta : {kPi / 6.0, kQuarter, kPi / 3.0}) {
      if (p >= std::sin(theta) * std::sin(theta)) continue;
      const Observables o = observables(p, theta, 1.0, 1.0);
      CHECK(std::abs(o.j_paper_form / o.j_direct - 1.0 / std::sqrt(1.0 - p)) < 1e-10);
    }
  }

  const Observables tiny = observables(1e-8, kQuarter, 1.0, 1.0);
  CHECK(tiny.j_direct < 1e-7);
  CHECK(tiny.e_direct < 1e-6);
  CHECK_THROWS_AS(observables(0.7, kQuarter, 1.0, 1.0), DelocalizedError);
}

TEST_CASE("size grows linearly with field at small field") {
  std::vector<double> f, xi;
  for (int i = 0; i <= 10; ++i) {
    const double field = 1.0 / 20.0 + i * (1.0 / 10.0 - 1.0 / 20.0) / 10.0;
    f.push_back(field);
    xi.push_back(localization_length(tunneling_probability(field, 1.0), kQuarter));
  }
  CHECK(std::abs(power_law_fit(f, xi).slope - 1.0) < 0.05);
}

TEST_CASE("critical exponents at theta = pi/4") {
  const double pc = 0.5;
  std::vector<double> dp, xi;
  std::vector<double> df, energy;
  const double fc = thresholds(kQuarter, 1.0).f_c;
  for (int i = 0; i < 20; ++i) {
    const double rel = std::pow(10.0, -3.0 + 2.0 * i / 19.0);
    dp.push_back(rel * pc);
    xi.push_back(localization_length(pc - rel * pc, kQuarter));
    df.push_back(rel * fc);
    energy.push_back(observables(tunneling_probability(fc - rel * fc, 1.0), kQuarter, 1.0, 1.0).e_direct);
  }
  CHECK(std::abs(power_law_fit(dp, xi).slope + 1.0) < 0.05);
  CHECK(std::abs(power_law_fit(df, energy).slope + 2.0) < 0.1);
}

TEST_CASE("edge report") {
  const EdgeReport rep = edge_report(ModelParams::from_probability(0.2, 1.0, 0.3, kQuarter + 0.1, 0.1));
  CHECK(rep.localized());
  CHECK(std::abs(rep.r - kR) < 1e-12);
  CHECK(std::abs(rep.weight - (1.0 - kR)) < 1e-12);
  REQUIRE(rep.xi);
  CHECK(std::abs(*rep.xi - kXi) < 1e-12);
  REQUIRE(rep.observables);
  CHECK(std::abs(rep.observables->j_direct - kJDirect) < 1e-12);

  const EdgeReport off = edge_report(ModelParams::from_probability(0.7, 1.0, 0.0, kQuarter, 0.0));
  CHECK_FALSE(off.localized());
  CHECK(off.weight == 0.0);
  CHECK_FALSE(off.xi);
  CHECK_FALSE(off.quasi_energy);
  CHECK_FALSE(off.observables);
}

TEST_CASE("simulation settles onto the edge mode") {
  const SimulationComparison cmp = simulation_vs_floquet(0.2, kQuarter, 300, 400, 6);
  CHECK(cmp.max_relative_error < 0.03);
  CHECK(std::abs(cmp.fitted_phase_slope - cmp.predicted_phase_slope) < 1e-3);
  CHECK(std::abs(cmp.predicted_phase_slope + kArgPole / 2.0) < 1e-12);
}

TEST_CASE("edge mass leaks away above the threshold") {
  const Coin u = make_bulk_coin(0.7, 0.0, kQuarter);
  CHECK(boundary_mass(u, make_boundary_coin(0.0), 400, 10) < 0.05);
}
