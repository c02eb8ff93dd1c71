#ifndef LZWALK_PATHSUM_HPP
#define LZWALK_PATHSUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lzwalk/coin.hpp"
#include "lzwalk/linalg.hpp"

// Brute-force path enumeration. Exponential in tau; used as an oracle for the transfer
// recursion and for the generating functions.

namespace lzwalk {

/// Path enumeration refuses tau above this bound.
inline constexpr int kMaxPathSteps = 16;

enum class Move : std::uint8_t {
  down,         // P
  up,           // Q, from a site n >= 1
  boundary_up,  // Q~, from site 0
};

enum class Boundary : std::uint8_t {
  reflecting,
  // First-passage walk: site 0 is visited only at the start and, for paths ending there,
  // at the final step.
  absorbing,
};

/// Lattice path starting at site 0. Moves are stored in time order.
struct PathWord {
  std::vector<Move> moves;

  int end_site() const;

  /// Operator word with the latest move leftmost and repeated letters collapsed,
  /// e.g. "PQ^2Q~".
  std::string to_string() const;

  friend bool operator==(const PathWord&, const PathWord&) = default;
  friend auto operator<=>(const PathWord&, const PathWord&) = default;
};

/// All paths 0 -> n in tau steps that stay at n >= 0, in lexicographic time order
/// (down before up). Throws DomainError unless 0 <= n <= tau, ResourceError above
/// kMaxPathSteps.
std::vector<PathWord> enumerate_paths(int n, int tau, Boundary boundary);

/// Time-ordered matrix product of one path (later moves multiply on the left).
Mat2 path_product(const PathWord& path, const Coin& bulk, const Coin& boundary);

struct TransitionAmplitude {
  Mat2 matrix;
  int site = 0;
  int tau = 0;
  Boundary boundary = Boundary::reflecting;
};

/// Sum of path_product over enumerate_paths(n, tau, boundary_kind).
TransitionAmplitude transition_amplitude(int n, int tau, const Coin& bulk, const Coin& boundary,
                                         Boundary boundary_kind);

struct PqrsCoefficients {
  Amplitude q;      // Tr(Q~^dagger Xi)
  Amplitude r;      // Tr(R~^dagger Xi)
  double residual;  // max |Xi - q Q~ - r R~|
};

/// Expansion of a transition amplitude along Q~ and R~ of the boundary coin.
/// Meaningful for tau >= 1; the empty path (tau = 0) is the identity, which has P~ and S~
/// components and reports a nonzero residual.
PqrsCoefficients pqrs_coefficients(const TransitionAmplitude& amplitude, const Coin& boundary);

}  // namespace lzwalk

#endif  // LZWALK_PATHSUM_HPP
