#ifndef LZWALK_LINALG_HPP
#define LZWALK_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>

namespace lzwalk {

using Amplitude = std::complex<double>;

/// Two-component wavefunction on one site: left- and right-moving amplitudes.
struct Spinor {
  Amplitude left{};
  Amplitude right{};

  double norm_sq() const { return std::norm(left) + std::norm(right); }
  friend bool operator==(const Spinor&, const Spinor&) = default;
};

/// 2x2 complex matrix laid out as [[a, b], [c, d]].
struct Mat2 {
  Amplitude a{};
  Amplitude b{};
  Amplitude c{};
  Amplitude d{};

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 zero() { return {}; }

  Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
  Amplitude trace() const { return a + d; }
  Amplitude det() const { return a * d - b * c; }

  double max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  }

  bool is_finite() const {
    auto ok = [](Amplitude x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); };
    return ok(a) && ok(b) && ok(c) && ok(d);
  }

  Mat2& operator+=(const Mat2& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
  }
  Mat2& operator*=(Amplitude s) {
    a *= s;
    b *= s;
    c *= s;
    d *= s;
    return *this;
  }

  friend Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
  friend Mat2 operator-(Mat2 x, const Mat2& y) { return x -= y; }
  friend Mat2 operator*(Mat2 x, Amplitude s) { return x *= s; }
  friend Mat2 operator*(Amplitude s, Mat2 x) { return x *= s; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }

  friend Spinor operator*(const Mat2& m, const Spinor& v) {
    return {m.a * v.left + m.b * v.right, m.c * v.left + m.d * v.right};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Hilbert-Schmidt inner product Tr(x^dagger y).
inline Amplitude inner(const Mat2& x, const Mat2& y) { return (x.adjoint() * y).trace(); }

}  // namespace lzwalk

#endif  // LZWALK_LINALG_HPP
