#include <doctest.h>

#include <cmath>
#include <vector>

#include "lzwalk/errors.hpp"
#include "lzwalk/fit.hpp"

using namespace lzwalk;

TEST_CASE("exact line") {
  const std::vector<double> x{0, 1, 2, 3, 4};
  std::vector<double> y;
  for (double v : x) y.push_back(2.5 * v - 1.0);
  const LinearFit fit = linear_fit(x, y);
  CHECK(std::abs(fit.slope - 2.5) < 1e-14);
  CHECK(std::abs(fit.intercept + 1.0) < 1e-14);
  CHECK(std::abs(fit.r_squared - 1.0) < 1e-14);
}

TEST_CASE("least squares through noisy points") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3.1, 4.9, 7.1, 8.9};
  const LinearFit fit = linear_fit(x, y);
  CHECK(std::abs(fit.slope - 1.96) < 1e-12);
  CHECK(std::abs(fit.intercept - 1.1) < 1e-12);
  CHECK(fit.r_squared < 1.0);
  CHECK(fit.r_squared > 0.99);
}

TEST_CASE("power law exponent") {
  std::vector<double> x, y;
  for (int i = 1; i <= 10; ++i) {
    x.push_back(0.1 * i);
    y.push_back(3.0 * std::pow(0.1 * i, -2.0));
  }
  const LinearFit fit = power_law_fit(x, y);
  CHECK(std::abs(fit.slope + 2.0) < 1e-12);
  CHECK(std::abs(std::exp(fit.intercept) - 3.0) < 1e-12);
}

TEST_CASE("fit preconditions") {
  const std::vector<double> same{1, 1, 1};
  const std::vector<double> y{1, 2, 3};
  CHECK_THROWS_AS(linear_fit(same, y), DomainError);
  CHECK_THROWS_AS(linear_fit(std::vector<double>{1}, std::vector<double>{1}), DomainError);
  CHECK_THROWS_AS(linear_fit(y, std::vector<double>{1, 2}), DomainError);
  CHECK_THROWS_AS(power_law_fit(y, std::vector<double>{1, -2, 3}), DomainError);
}

TEST_CASE("phase unwrapping") {
  std::vector<double> truth, wrapped;
  for (int k = 0; k < 50; ++k) {
    truth.push_back(-1.05 * k + 0.3);
    wrapped.push_back(std::remainder(truth.back(), 2.0 * 3.14159265358979323846));
  }
  const auto unwrapped = unwrap_phase(wrapped);
  REQUIRE(unwrapped.size() == truth.size());
  for (std::size_t k = 0; k < truth.size(); ++k) CHECK(std::abs(unwrapped[k] - truth[k]) < 1e-12);
  CHECK(unwrap_phase(std::vector<double>{}).empty());
}
