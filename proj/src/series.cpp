#include "lzwalk/series.hpp"

#include <algorithm>
#include <cmath>

#include "lzwalk/errors.hpp"

namespace lzwalk {

namespace {

constexpr double kInvertibleFloor = 1e-300;

}  // namespace

Series Series::constant(Amplitude value, std::size_t order) {
  Series s(order);
  if (order > 0) s.coeffs_[0] = value;
  return s;
}

Series Series::variable(std::size_t order) {
  Series s(order);
  if (order > 1) s.coeffs_[1] = 1.0;
  return s;
}

Series Series::truncated(std::size_t order) const {
  Series s(std::min(order, coeffs_.size()));
  std::copy_n(coeffs_.begin(), s.order(), s.coeffs_.begin());
  return s;
}

Series Series::shifted_up(std::size_t k) const {
  Series s(order());
  for (std::size_t i = k; i < order(); ++i) s.coeffs_[i] = coeffs_[i - k];
  return s;
}

Series Series::divided_by_z(double tolerance) const {
  if (coeffs_.empty()) return {};
  if (std::abs(coeffs_[0]) > tolerance) {
    throw SingularityError("series division by z needs a vanishing constant term");
  }
  return Series(std::vector<Amplitude>(coeffs_.begin() + 1, coeffs_.end()));
}

Amplitude Series::evaluate(Amplitude z) const {
  Amplitude acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Series Series::reciprocal() const { return Series::constant(1.0, order()) / *this; }

Series Series::pow(unsigned exponent) const {
  Series result = Series::constant(1.0, order());
  Series base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool Series::is_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Amplitude x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

Series& Series::operator+=(const Series& o) {
  coeffs_.resize(std::min(order(), o.order()));
  for (std::size_t k = 0; k < order(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  coeffs_.resize(std::min(order(), o.order()));
  for (std::size_t k = 0; k < order(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series operator*(const Series& x, const Series& y) {
  const std::size_t n = std::min(x.order(), y.order());
  Series out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Amplitude xi = x.coeffs_[i];
    if (xi == Amplitude{}) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += xi * y.coeffs_[j];
  }
  return out;
}

Series& Series::operator*=(const Series& o) { return *this = *this * o; }

Series operator/(const Series& x, const Series& y) {
  const std::size_t n = std::min(x.order(), y.order());
  if (n == 0) return {};
  const Amplitude lead = y.coeffs_[0];
  if (std::abs(lead) < kInvertibleFloor) {
    throw SingularityError("series division by a series with vanishing constant term");
  }
  Series q(n);
  for (std::size_t k = 0; k < n; ++k) {
    Amplitude acc = x.coeffs_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= y.coeffs_[j] * q.coeffs_[k - j];
    q.coeffs_[k] = acc / lead;
  }
  return q;
}

Series& Series::operator/=(const Series& o) { return *this = *this / o; }

Series& Series::operator*=(Amplitude s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Series& Series::operator+=(Amplitude s) {
  if (!coeffs_.empty()) coeffs_[0] += s;
  return *this;
}

}  // namespace lzwalk
