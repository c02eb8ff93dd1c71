#include "lzwalk/coin.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lzwalk/errors.hpp"

namespace lzwalk {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

double reduce_phase(double angle) {
  require_finite(angle, "phase");
  double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double tunneling_probability(double field, double fbar) {
  if (!(field > 0.0)) throw DomainError("field must be positive");
  if (!(fbar > 0.0) || !std::isfinite(fbar)) throw DomainError("fbar must be positive and finite");
  return std::exp(-kPi * fbar / field);
}

double field_for_probability(double p, double fbar) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("tunneling probability must lie in (0, 1]");
  if (!(fbar > 0.0) || !std::isfinite(fbar)) throw DomainError("fbar must be positive and finite");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return -kPi * fbar / std::log(p);
}

Coin Coin::from_matrix(const Mat2& m, double tolerance) {
  if (!m.is_finite()) throw DomainError("coin entries must be finite");
  Coin coin(m);
  const double defect = coin.unitarity_defect();
  if (!(defect < tolerance)) {
    throw DomainError("coin is not unitary: max |U^dagger U - I| = " + std::to_string(defect));
  }
  if (!(std::abs(std::abs(m.det()) - 1.0) < tolerance)) {
    throw DomainError("coin determinant does not have unit modulus");
  }
  return coin;
}

double Coin::unitarity_defect() const {
  return (m_.adjoint() * m_ - Mat2::identity()).max_abs();
}

Coin make_bulk_coin(double p, double beta, double gamma) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("tunneling probability must lie in (0, 1]");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  const double through = std::sqrt(p);
  const double back = std::sqrt(1.0 - p);
  return Coin::from_matrix({through * std::polar(1.0, beta), back * std::polar(1.0, gamma),
                            -back * std::polar(1.0, -gamma), through * std::polar(1.0, -beta)});
}

Coin make_boundary_coin(double gamma_tilde) {
  require_finite(gamma_tilde, "gamma_tilde");
  return Coin::from_matrix({0.0, std::polar(1.0, gamma_tilde), -std::polar(1.0, -gamma_tilde), 0.0});
}

PqrsBasis pqrs_decompose(const Coin& coin) {
  const Amplitude a = coin.a(), b = coin.b(), c = coin.c(), d = coin.d();
  return {
      {a, b, 0.0, 0.0},
      {0.0, 0.0, c, d},
      {c, d, 0.0, 0.0},
      {0.0, 0.0, a, b},
  };
}

PqrsComponents pqrs_components(const Mat2& x, const PqrsBasis& basis) {
  return {inner(basis.p, x), inner(basis.q, x), inner(basis.r, x), inner(basis.s, x)};
}

ModelParams ModelParams::from_probability(double p, double fbar, double beta, double gamma,
                                          double gamma_tilde) {
  ModelParams params;
  params.field = field_for_probability(p, fbar);
  params.fbar = fbar;
  params.beta = beta;
  params.gamma = gamma;
  params.gamma_tilde = gamma_tilde;
  return params;
}

void ModelParams::validate() const {
  if (!(field > 0.0)) throw DomainError("field must be positive");
  if (!(fbar > 0.0) || !std::isfinite(fbar)) throw DomainError("fbar must be positive and finite");
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("length must be positive");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  require_finite(gamma_tilde, "gamma_tilde");
  require_finite(j0, "j0");
  require_finite(e0, "e0");
}

Coin bulk_coin(const ModelParams& params) {
  params.validate();
  return make_bulk_coin(params.probability(), params.beta, params.gamma);
}

Coin boundary_coin(const ModelParams& params) {
  params.validate();
  return make_boundary_coin(params.gamma_tilde);
}

}  // namespace lzwalk
