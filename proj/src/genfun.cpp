#include "lzwalk/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lzwalk/errors.hpp"

namespace lzwalk {

namespace {

constexpr double kSingularFloor = 1e-300;
constexpr double kBranchSeparation = 1e-9;
constexpr double kPoleTolerance = 1e-12;
constexpr std::size_t kMaxFallbackOrder = 8192;

void require_nonzero(Amplitude x, const char* entry) {
  if (std::abs(x) < kSingularFloor) {
    throw SingularityError(std::string("closed form is singular: coin entry ") + entry +
                           " vanishes");
  }
}

void require_order(std::size_t order) {
  if (order < 2) throw DomainError("series order must be at least 2");
}

void require_site(int n, int lowest) {
  if (n < lowest) throw DomainError("site index " + std::to_string(n) + " is out of range");
}

void require_nonzero_point(Amplitude z) {
  if (z == Amplitude{}) throw DomainError("pointwise evaluation needs z != 0");
}

// Shared pieces of the bounded generating functions at one point.
struct PointTerms {
  Amplitude lambda;
  Amplitude ratio;        // d lambda / a
  Amplitude denominator;  // 1 - c~ A^r
};

PointTerms point_terms(const Coin& bulk, const Coin& boundary, Amplitude z) {
  const Amplitude lambda = lambda_plus_eval(bulk, z);
  const Amplitude absorbing = (bulk.d() * lambda - bulk.det() * z) * z / bulk.c();
  return {lambda, bulk.d() * lambda / bulk.a(), 1.0 - boundary.c() * absorbing};
}

Amplitude integer_power(Amplitude base, int exponent) {
  Amplitude result{1.0, 0.0};
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result *= base;
    base *= base;
  }
  return result;
}

void require_bounded_coins(const Coin& bulk) {
  require_nonzero(bulk.a(), "a");
  require_nonzero(bulk.c(), "c");
  require_nonzero(bulk.d(), "d");
}

}  // namespace

Series lambda_plus_series(const Coin& bulk, std::size_t order) {
  require_order(order);
  const Amplitude d = bulk.d();
  require_nonzero(d, "d");
  const Amplitude delta = bulk.det();
  const Amplitude linear = delta * std::norm(bulk.a()) / d;

  // z^k coefficient of the quadratic divided by -d:
  //   lambda_k = d [lambda^2]_{k-1} - Delta lambda_{k-2} + [k == 1] Delta |a|^2 / d.
  // With lambda_0 = 0, [lambda^2]_{k-1} only involves lambda_1 .. lambda_{k-2}.
  Series lambda(order);
  for (std::size_t k = 1; k < order; ++k) {
    Amplitude square{};
    for (std::size_t j = 1; j + 1 < k; ++j) square += lambda[j] * lambda[k - 1 - j];
    Amplitude value = d * square;
    if (k >= 2) value -= delta * lambda[k - 2];
    if (k == 1) value += linear;
    lambda[k] = value;
  }
  return lambda;
}

Amplitude lambda_quadratic_residual(const Coin& bulk, Amplitude z, Amplitude lambda) {
  const Amplitude d = bulk.d();
  const Amplitude delta = bulk.det();
  return d * d * z * lambda * lambda - d * (delta * z * z + 1.0) * lambda +
         delta * std::norm(bulk.a()) * z;
}

Amplitude lambda_plus_slope(const Coin& bulk, Amplitude z, Amplitude lambda) {
  const Amplitude d = bulk.d();
  const Amplitude delta = bulk.det();
  const Amplitude by_z = d * d * lambda * lambda - 2.0 * d * delta * z * lambda +
                         delta * std::norm(bulk.a());
  const Amplitude by_lambda = 2.0 * d * d * z * lambda - d * (delta * z * z + 1.0);
  if (std::abs(by_lambda) < kSingularFloor) {
    throw BranchAmbiguityError("lambda_+ has a branch point at this z");
  }
  return -by_z / by_lambda;
}

Amplitude lambda_plus_eval(const Coin& bulk, Amplitude z) {
  require_nonzero_point(z);
  const Amplitude d = bulk.d();
  require_nonzero(d, "d");
  const Amplitude delta = bulk.det();

  const Amplitude qa = d * d * z;
  const Amplitude qb = -d * (delta * z * z + 1.0);
  const Amplitude qc = delta * std::norm(bulk.a()) * z;

  // Cancellation-free pair of roots.
  Amplitude root = std::sqrt(qb * qb - 4.0 * qa * qc);
  if (std::real(std::conj(qb) * root) < 0.0) root = -root;
  const Amplitude big = -0.5 * (qb + root);
  const Amplitude first = big / qa;
  const Amplitude second = (big == Amplitude{}) ? first : qc / big;

  const double m1 = std::abs(first);
  const double m2 = std::abs(second);
  if (std::abs(m1 - m2) > kBranchSeparation * std::max(m1, m2)) return m1 < m2 ? first : second;

  const double radius = std::abs(z);
  if (radius >= 1.0) {
    throw BranchAmbiguityError("lambda_+ branch is ambiguous at |z| = " + std::to_string(radius) +
                               "; use the series form");
  }
  const double wanted = std::log(1e-18) / std::log(radius);
  if (!(wanted < static_cast<double>(kMaxFallbackOrder))) {
    throw BranchAmbiguityError("lambda_+ branch is ambiguous and |z| is too close to 1 for "
                               "series summation");
  }
  return lambda_plus_series(bulk, static_cast<std::size_t>(wanted) + 3).evaluate(z);
}

Series absorbing_gf_series(const Coin& bulk, std::size_t order) {
  require_order(order);
  require_nonzero(bulk.c(), "c");
  const Series z = Series::variable(order);
  const Series lambda = lambda_plus_series(bulk, order);
  return ((bulk.d() * lambda - bulk.det() * z) * z) * (1.0 / bulk.c());
}

Amplitude absorbing_gf_eval(const Coin& bulk, Amplitude z) {
  require_nonzero(bulk.c(), "c");
  const Amplitude lambda = lambda_plus_eval(bulk, z);
  return (bulk.d() * lambda - bulk.det() * z) * z / bulk.c();
}

BSeries b_gf_closed_series(const Coin& bulk, int n, std::size_t order) {
  require_order(order);
  require_site(n, 0);
  require_bounded_coins(bulk);
  const Amplitude a = bulk.a(), c = bulk.c(), d = bulk.d();

  // One extra coefficient so that (lambda - a z) / z keeps the requested order.
  const Series lambda = lambda_plus_series(bulk, order + 1);
  const Series z = Series::variable(order + 1);
  const Series power = (lambda.truncated(order) * (d / a)).pow(static_cast<unsigned>(n));
  const Series tail = (lambda - a * z).divided_by_z() * (1.0 / (a * c));
  return {power * (1.0 / d), power * tail};
}

BValues b_gf_closed_eval(const Coin& bulk, int n, Amplitude z) {
  require_site(n, 0);
  require_nonzero_point(z);
  require_bounded_coins(bulk);
  const Amplitude a = bulk.a(), c = bulk.c(), d = bulk.d();
  const Amplitude lambda = lambda_plus_eval(bulk, z);
  const Amplitude power = integer_power(d * lambda / a, n);
  return {power / d, power * (lambda - a * z) / (a * c * z)};
}

SpinorSeries bounded_gf_series(const Coin& bulk, const Coin& boundary, int n, std::size_t order) {
  require_order(order);
  require_site(n, 1);
  require_bounded_coins(bulk);
  const Amplitude a = bulk.a(), c = bulk.c(), d = bulk.d();
  const Amplitude ct = boundary.c();

  const Series z = Series::variable(order);
  const Series lambda = lambda_plus_series(bulk, order);
  const Series absorbing = absorbing_gf_series(bulk, order);
  const Series denominator = 1.0 - ct * absorbing;
  // A^r starts at z^2, so the constant term is exactly one.
  if (denominator[0] != Amplitude{1.0}) {
    throw SingularityError("return denominator has a non-unit constant term");
  }
  const Series power = (lambda * (d / a)).pow(static_cast<unsigned>(n - 1));
  const Series common = power / denominator;
  return {common * (lambda - a * z) * (ct * d / (a * c)), common * z * ct};
}

Amplitude return_denominator_eval(const Coin& bulk, const Coin& boundary, Amplitude z) {
  require_bounded_coins(bulk);
  return point_terms(bulk, boundary, z).denominator;
}

Spinor bounded_gf_eval(const Coin& bulk, const Coin& boundary, int n, Amplitude z) {
  require_site(n, 1);
  require_nonzero_point(z);
  require_bounded_coins(bulk);
  const Amplitude a = bulk.a(), c = bulk.c(), d = bulk.d();
  const Amplitude ct = boundary.c();
  const PointTerms t = point_terms(bulk, boundary, z);
  if (std::abs(t.denominator) < kPoleTolerance) {
    throw PoleError("bounded generating function has a pole at this z");
  }
  const Amplitude common = integer_power(t.ratio, n - 1) / t.denominator;
  return {common * ct * d / (a * c) * (t.lambda - a * z), common * ct * z};
}

Series gf_site0_series(const Coin& bulk, const Coin& boundary, std::size_t order) {
  const SpinorSeries first = bounded_gf_series(bulk, boundary, 1, order);
  const Series hop = first.left * bulk.a() + first.right * bulk.b();
  return 1.0 + hop.shifted_up(1);
}

Amplitude gf_site0_eval(const Coin& bulk, const Coin& boundary, Amplitude z) {
  const Spinor first = bounded_gf_eval(bulk, boundary, 1, z);
  return 1.0 + z * (bulk.a() * first.left + bulk.b() * first.right);
}

std::vector<SpinorSeries> site_gf_table(const Coin& bulk, const Coin& boundary, int n_max,
                                        std::size_t order) {
  require_site(n_max, 0);
  std::vector<SpinorSeries> table;
  table.reserve(static_cast<std::size_t>(n_max) + 1);

  SpinorSeries current = bounded_gf_series(bulk, boundary, 1, order);
  const Series hop = current.left * bulk.a() + current.right * bulk.b();
  table.push_back({1.0 + hop.shifted_up(1), Series(order)});
  if (n_max == 0) return table;

  const Series ratio = lambda_plus_series(bulk, order) * (bulk.d() / bulk.a());
  table.push_back(current);
  for (int n = 2; n <= n_max; ++n) {
    current.left *= ratio;
    current.right *= ratio;
    table.push_back(current);
  }
  return table;
}

}  // namespace lzwalk
