#include "lzwalk/fit.hpp"

#include <cmath>

#include "lzwalk/coin.hpp"
#include "lzwalk/errors.hpp"

namespace lzwalk {

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("fit needs equally many x and y values");
  if (x.size() < 2) throw DomainError("fit needs at least two points");
  const double count = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw DomainError("fit needs at least two distinct x values");
  const double slope = sxy / sxx;
  const double r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return {slope, mean_y - slope * mean_x, r_squared};
}

LinearFit power_law_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("fit needs equally many x and y values");
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("power-law fit needs positive data");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return linear_fit(lx, ly);
}

std::vector<double> unwrap_phase(std::span<const double> phases) {
  std::vector<double> out(phases.begin(), phases.end());
  double offset = 0.0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    const double jump = phases[i] - phases[i - 1];
    offset -= 2.0 * kPi * std::round(jump / (2.0 * kPi));
    out[i] = phases[i] + offset;
  }
  return out;
}

}  // namespace lzwalk
