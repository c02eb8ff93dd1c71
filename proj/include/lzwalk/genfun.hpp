#ifndef LZWALK_GENFUN_HPP
#define LZWALK_GENFUN_HPP

#include <cstddef>
#include <vector>

#include "lzwalk/coin.hpp"
#include "lzwalk/linalg.hpp"
#include "lzwalk/series.hpp"

// Closed-form generating functions of the bounded walk. Every quantity comes in two
// flavours: a truncated power series (`*_series`, coefficient of z^tau is the amplitude at
// step tau) and a pointwise value (`*_eval`) on the branch analytic at z = 0.

namespace lzwalk {

inline constexpr std::size_t kDefaultSeriesOrder = 1024;

/// Taylor coefficients of lambda_+(z), the root of
///   d^2 z lambda^2 - d (Delta z^2 + 1) lambda + Delta |a|^2 z = 0
/// that vanishes at z = 0. Only odd coefficients are nonzero.
Series lambda_plus_series(const Coin& bulk, std::size_t order);

/// lambda_+(z) at a point. Picks the smaller-modulus root of the quadratic; if the two
/// moduli agree to 1e-9 it sums the Taylor series instead (|z| < 1 only), and throws
/// BranchAmbiguityError otherwise. Throws DomainError at z = 0.
Amplitude lambda_plus_eval(const Coin& bulk, Amplitude z);

/// Left-hand side of the defining quadratic at (z, lambda).
Amplitude lambda_quadratic_residual(const Coin& bulk, Amplitude z, Amplitude lambda);

/// d lambda / dz by implicit differentiation of the quadratic at a root (z, lambda).
Amplitude lambda_plus_slope(const Coin& bulk, Amplitude z, Amplitude lambda);

/// First-return generating function of the absorbing walk, [d lambda_+ - Delta z] z / c.
/// Throws SingularityError when c = 0 (no backscattering).
Series absorbing_gf_series(const Coin& bulk, std::size_t order);
Amplitude absorbing_gf_eval(const Coin& bulk, Amplitude z);

struct BSeries {
  Series q;
  Series r;
};

struct BValues {
  Amplitude q;
  Amplitude r;
};

/// Generating functions of the Q and R coefficients of Xi(0 -> n) for the walk whose
/// boundary coin equals the bulk coin:
///   B^q = (d lambda_+/a)^n / d,   B^r = (d lambda_+/a)^n (lambda_+ - a z) / (a c z).
BSeries b_gf_closed_series(const Coin& bulk, int n, std::size_t order);
BValues b_gf_closed_eval(const Coin& bulk, int n, Amplitude z);

struct SpinorSeries {
  Series left;
  Series right;
};

/// Generating functions Psi^{L,R}(0 -> n; z) of the reflecting walk for n >= 1.
SpinorSeries bounded_gf_series(const Coin& bulk, const Coin& boundary, int n, std::size_t order);
/// Throws PoleError at a zero of 1 - c~ A^r(0 -> 0; z).
Spinor bounded_gf_eval(const Coin& bulk, const Coin& boundary, int n, Amplitude z);

/// Psi^L(0 -> 0; z) = 1 + z [a Psi^L(0 -> 1; z) + b Psi^R(0 -> 1; z)]. The R component at
/// site 0 is identically zero.
Series gf_site0_series(const Coin& bulk, const Coin& boundary, std::size_t order);
Amplitude gf_site0_eval(const Coin& bulk, const Coin& boundary, Amplitude z);

/// 1 - c~ A^r(0 -> 0; z), the denominator shared by all bounded generating functions.
Amplitude return_denominator_eval(const Coin& bulk, const Coin& boundary, Amplitude z);

/// Generating functions for every site 0..n_max at once; entry n holds Psi^{L,R}(0 -> n).
std::vector<SpinorSeries> site_gf_table(const Coin& bulk, const Coin& boundary, int n_max,
                                        std::size_t order);

}  // namespace lzwalk

#endif  // LZWALK_GENFUN_HPP
