#include "lzwalk/walk.hpp"

#include <string>

#include "lzwalk/errors.hpp"

namespace lzwalk {

WalkState::WalkState() : left_{Amplitude{1.0, 0.0}}, right_{Amplitude{}} {}

Spinor WalkState::at(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= left_.size()) return {};
  return {left_[n], right_[n]};
}

double WalkState::norm() const {
  double total = 0.0;
  for (std::size_t n = 0; n < left_.size(); ++n) total += std::norm(left_[n]) + std::norm(right_[n]);
  return total;
}

WalkState initial_state() { return WalkState{}; }

WalkState step(const WalkState& state, const Coin& bulk, const Coin& boundary) {
  const Amplitude a = bulk.a(), b = bulk.b(), c = bulk.c(), d = bulk.d();
  const Amplitude ct = boundary.c(), dt = boundary.d();
  const std::size_t old_sites = state.left_.size();

  WalkState next;
  next.tau_ = state.tau_ + 1;
  next.left_.assign(old_sites + 1, Amplitude{});
  next.right_.assign(old_sites + 1, Amplitude{});

  // P moves down one site and lands in the L component; Q moves up and lands in R.
  for (std::size_t n = 0; n + 1 < old_sites; ++n) {
    next.left_[n] = a * state.left_[n + 1] + b * state.right_[n + 1];
  }
  next.right_[1] = ct * state.left_[0] + dt * state.right_[0];
  for (std::size_t n = 2; n <= old_sites; ++n) {
    next.right_[n] = c * state.left_[n - 1] + d * state.right_[n - 1];
  }
  return next;
}

WalkState evolve(const Coin& bulk, const Coin& boundary, int steps) {
  return evolve(bulk, boundary, steps, {});
}

WalkState evolve(const Coin& bulk, const Coin& boundary, int steps,
                 const std::function<void(const WalkState&)>& observer) {
  if (steps < 0) throw DomainError("step count must be non-negative");
  if (steps > kMaxEvolveSteps) {
    throw ResourceError("step count " + std::to_string(steps) + " exceeds the limit of " +
                        std::to_string(kMaxEvolveSteps));
  }
  WalkState state;
  if (observer) observer(state);
  for (int t = 0; t < steps; ++t) {
    state = step(state, bulk, boundary);
    if (observer) observer(state);
  }
  return state;
}

std::vector<SiteProbability> distribution(const WalkState& state) {
  std::vector<SiteProbability> out;
  out.reserve(state.sites() / 2 + 1);
  const auto left = state.left();
  const auto right = state.right();
  for (std::size_t n = state.tau() % 2; n < state.sites(); n += 2) {
    out.push_back({static_cast<int>(n), std::norm(left[n]), std::norm(right[n])});
  }
  return out;
}

}  // namespace lzwalk
