#ifndef LZWALK_SERIES_HPP
#define LZWALK_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lzwalk/linalg.hpp"

namespace lzwalk {

/// Truncated power series sum_{k < order} c_k z^k with complex coefficients.
///
/// Binary operations on series of different orders truncate to the smaller order. Division
/// requires an invertible constant term (|c_0| >= 1e-300) and throws SingularityError
/// otherwise.
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order) : coeffs_(order) {}
  explicit Series(std::vector<Amplitude> coeffs) : coeffs_(std::move(coeffs)) {}

  static Series constant(Amplitude value, std::size_t order);
  /// The series z (zero when order < 2).
  static Series variable(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  std::span<const Amplitude> coefficients() const { return coeffs_; }

  Amplitude operator[](std::size_t k) const { return coeffs_[k]; }
  Amplitude& operator[](std::size_t k) { return coeffs_[k]; }

  /// Coefficient of z^k, or zero when k >= order.
  Amplitude coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Amplitude{}; }

  Series truncated(std::size_t order) const;

  /// Multiply by z^k, keeping the order.
  Series shifted_up(std::size_t k) const;

  /// Divide by z. Drops the constant term, which must vanish to within `tolerance`
  /// (SingularityError otherwise); the result has order - 1.
  Series divided_by_z(double tolerance = 1e-12) const;

  /// Horner evaluation of the truncated polynomial.
  Amplitude evaluate(Amplitude z) const;

  Series reciprocal() const;
  Series pow(unsigned exponent) const;

  bool is_finite() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator/=(const Series& o);
  Series& operator*=(Amplitude s);
  Series& operator+=(Amplitude s);

  friend Series operator+(Series x, const Series& y) { return x += y; }
  friend Series operator-(Series x, const Series& y) { return x -= y; }
  friend Series operator*(const Series& x, const Series& y);
  friend Series operator/(const Series& x, const Series& y);
  friend Series operator*(Series x, Amplitude s) { return x *= s; }
  friend Series operator*(Amplitude s, Series x) { return x *= s; }
  friend Series operator+(Series x, Amplitude s) { return x += s; }
  friend Series operator+(Amplitude s, Series x) { return x += s; }
  friend Series operator-(Series x, Amplitude s) { return x += -s; }
  friend Series operator-(Amplitude s, Series x) {
    x *= -1.0;
    return x += s;
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Amplitude> coeffs_;
};

}  // namespace lzwalk

#endif  // LZWALK_SERIES_HPP
