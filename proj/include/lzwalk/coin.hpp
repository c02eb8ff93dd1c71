#ifndef LZWALK_COIN_HPP
#define LZWALK_COIN_HPP

#include "lzwalk/linalg.hpp"

namespace lzwalk {

inline constexpr double kPi = 3.14159265358979323846;

/// Entrywise tolerance for U^dagger U = I and |det U| = 1.
inline constexpr double kUnitarityTolerance = 1e-12;

/// Reduce an angle to the half-open interval (-pi, pi].
double reduce_phase(double angle);

/// Landau-Zener tunneling probability exp(-pi * fbar / field).
double tunneling_probability(double field, double fbar);

/// Field at which the tunneling probability equals p; infinite for p = 1.
double field_for_probability(double p, double fbar);

/// Unitary 2x2 transfer matrix acting at one anticrossing.
///
/// A Coin can only be built from a matrix that passes the unitarity check, so every
/// instance satisfies U^dagger U = I and |det U| = 1 within kUnitarityTolerance.
class Coin {
 public:
  /// Validates `m`; throws DomainError if it is non-finite or not unitary within `tolerance`.
  static Coin from_matrix(const Mat2& m, double tolerance = kUnitarityTolerance);

  const Mat2& matrix() const { return m_; }
  Amplitude a() const { return m_.a; }
  Amplitude b() const { return m_.b; }
  Amplitude c() const { return m_.c; }
  Amplitude d() const { return m_.d; }
  Amplitude det() const { return m_.det(); }

  /// max_ij |(U^dagger U - I)_ij|
  double unitarity_defect() const;

  friend bool operator==(const Coin&, const Coin&) = default;

 private:
  explicit Coin(const Mat2& m) : m_(m) {}
  Mat2 m_;
};

/// Bulk Landau-Zener coin [[sqrt(p) e^{i beta}, sqrt(1-p) e^{i gamma}],
/// [-sqrt(1-p) e^{-i gamma}, sqrt(p) e^{-i beta}]]. Requires 0 < p <= 1.
Coin make_bulk_coin(double p, double beta, double gamma);

/// Fully reflecting boundary coin [[0, e^{i gamma_tilde}], [-e^{-i gamma_tilde}, 0]].
Coin make_boundary_coin(double gamma_tilde);

/// Row split of a coin: P and Q keep the first and second row in place, R and S swap them.
struct PqrsBasis {
  Mat2 p;
  Mat2 q;
  Mat2 r;
  Mat2 s;
};

PqrsBasis pqrs_decompose(const Coin& coin);

/// Coordinates of a matrix in a PQRS basis, taken as Tr(B^dagger X) per basis element.
struct PqrsComponents {
  Amplitude p;
  Amplitude q;
  Amplitude r;
  Amplitude s;
};

PqrsComponents pqrs_components(const Mat2& x, const PqrsBasis& basis);

/// Physical parameters of a driven run. The tunneling probability is always derived from
/// `field` and `fbar`; it is never stored.
struct ModelParams {
  double field = 1.0;        // F
  double fbar = 1.0;         // Zener threshold field
  double beta = 0.0;         // diagonal phase of the bulk coin
  double gamma = 0.0;        // off-diagonal phase of the bulk coin
  double gamma_tilde = 0.0;  // phase of the boundary coin
  double length = 1.0;
  double j0 = 1.0;
  double e0 = 1.0;

  /// Build parameters from a tunneling probability instead of a field.
  static ModelParams from_probability(double p, double fbar, double beta, double gamma,
                                      double gamma_tilde);

  double probability() const { return tunneling_probability(field, fbar); }

  /// Bulk/boundary phase difference gamma - gamma_tilde, reduced to (-pi, pi].
  double theta() const { return reduce_phase(gamma - gamma_tilde); }

  /// Throws DomainError unless field > 0, fbar > 0, length > 0 and all phases are finite.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

Coin bulk_coin(const ModelParams& params);
Coin boundary_coin(const ModelParams& params);

}  // namespace lzwalk

#endif  // LZWALK_COIN_HPP
