#ifndef LZWALK_FIT_HPP
#define LZWALK_FIT_HPP

#include <span>
#include <vector>

namespace lzwalk {

struct LinearFit {
  double slope;
  double intercept;
  double r_squared;
};

/// Ordinary least squares y = slope * x + intercept. Needs at least two distinct x values.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Exponent k of y ~ x^k from a least-squares fit in log-log space. All values must be
/// positive.
LinearFit power_law_fit(std::span<const double> x, std::span<const double> y);

/// Remove 2 pi jumps from a sequence of principal-value phases.
std::vector<double> unwrap_phase(std::span<const double> phases);

}  // namespace lzwalk

#endif  // LZWALK_FIT_HPP
