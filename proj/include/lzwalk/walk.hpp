#ifndef LZWALK_WALK_HPP
#define LZWALK_WALK_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "lzwalk/coin.hpp"
#include "lzwalk/linalg.hpp"

namespace lzwalk {

/// Largest number of steps `evolve` accepts. Storage is dense over the light cone, so the
/// final state alone needs 32 * (steps + 1) bytes.
inline constexpr int kMaxEvolveSteps = 1'000'000;

/// Wavefunction {psi_L(n, tau), psi_R(n, tau)} over the light cone 0 <= n <= tau.
class WalkState {
 public:
  /// The ground state: tau = 0, psi_L(0) = 1.
  WalkState();

  int tau() const { return tau_; }
  std::size_t sites() const { return left_.size(); }

  std::span<const Amplitude> left() const { return left_; }
  std::span<const Amplitude> right() const { return right_; }

  /// Amplitudes at site n; zero outside the light cone.
  Spinor at(int n) const;

  /// Sum over sites of |psi_L|^2 + |psi_R|^2.
  double norm() const;

 private:
  friend WalkState step(const WalkState&, const Coin&, const Coin&);

  int tau_ = 0;
  std::vector<Amplitude> left_;
  std::vector<Amplitude> right_;
};

WalkState initial_state();

/// One application of the bounded recursion:
///   Psi'(n) = P Psi(n+1) + Q Psi(n-1)   for n >= 2
///   Psi'(1) = P Psi(2)   + Q~ Psi(0)
///   Psi'(0) = P Psi(1)
WalkState step(const WalkState& state, const Coin& bulk, const Coin& boundary);

/// `steps` applications of `step` to the initial state. Throws ResourceError above
/// kMaxEvolveSteps and DomainError for negative counts.
WalkState evolve(const Coin& bulk, const Coin& boundary, int steps);

/// As above, calling `observer` with every intermediate state, tau = 0 .. steps.
WalkState evolve(const Coin& bulk, const Coin& boundary, int steps,
                 const std::function<void(const WalkState&)>& observer);

struct SiteProbability {
  int site;
  double left;
  double right;

  friend bool operator==(const SiteProbability&, const SiteProbability&) = default;
};

/// Per-site probabilities on the sites allowed by parity (n = tau mod 2), ascending n.
std::vector<SiteProbability> distribution(const WalkState& state);

}  // namespace lzwalk

#endif  // LZWALK_WALK_HPP
