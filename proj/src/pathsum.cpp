#include "lzwalk/pathsum.hpp"

#include <string>

#include "lzwalk/errors.hpp"

namespace lzwalk {

namespace {

void check_request(int n, int tau) {
  if (tau < 0 || n < 0 || n > tau) {
    throw DomainError("path request requires 0 <= n <= tau, got n=" + std::to_string(n) +
                      " tau=" + std::to_string(tau));
  }
  if (tau > kMaxPathSteps) {
    throw ResourceError("path enumeration is limited to tau <= " + std::to_string(kMaxPathSteps));
  }
}

struct Enumerator {
  int target;
  int tau;
  Boundary boundary;
  std::vector<Move> current;
  std::vector<PathWord> out;

  void run(int site, int t) {
    const int remaining = tau - t;
    if (remaining == 0) {
      if (site == target) out.push_back({current});
      return;
    }
    // The endpoint must stay reachable.
    if (site - target > remaining || target - site > remaining) return;

    if (site == 0) {
      if (boundary == Boundary::absorbing && t > 0) return;
      extend(Move::boundary_up, 1, t);
      return;
    }
    if (site - 1 > 0 || boundary == Boundary::reflecting || remaining == 1) {
      extend(Move::down, site - 1, t);
    }
    extend(Move::up, site + 1, t);
  }

  void extend(Move m, int next_site, int t) {
    current.push_back(m);
    run(next_site, t + 1);
    current.pop_back();
  }
};

const char* letter(Move m) {
  switch (m) {
    case Move::down:
      return "P";
    case Move::up:
      return "Q";
    case Move::boundary_up:
      return "Q~";
  }
  return "?";
}

}  // namespace

int PathWord::end_site() const {
  int site = 0;
  for (Move m : moves) site += (m == Move::down) ? -1 : 1;
  return site;
}

std::string PathWord::to_string() const {
  std::string out;
  for (auto it = moves.rbegin(); it != moves.rend();) {
    auto run_end = it;
    int count = 0;
    while (run_end != moves.rend() && *run_end == *it) {
      ++run_end;
      ++count;
    }
    out += letter(*it);
    if (count > 1) out += "^" + std::to_string(count);
    it = run_end;
  }
  return out;
}

std::vector<PathWord> enumerate_paths(int n, int tau, Boundary boundary) {
  check_request(n, tau);
  Enumerator e{n, tau, boundary, {}, {}};
  e.current.reserve(tau);
  e.run(0, 0);
  return std::move(e.out);
}

Mat2 path_product(const PathWord& path, const Coin& bulk, const Coin& boundary) {
  const PqrsBasis bulk_basis = pqrs_decompose(bulk);
  const Mat2 boundary_up = pqrs_decompose(boundary).q;
  Mat2 product = Mat2::identity();
  for (Move m : path.moves) {
    switch (m) {
      case Move::down:
        product = bulk_basis.p * product;
        break;
      case Move::up:
        product = bulk_basis.q * product;
        break;
      case Move::boundary_up:
        product = boundary_up * product;
        break;
    }
  }
  return product;
}

TransitionAmplitude transition_amplitude(int n, int tau, const Coin& bulk, const Coin& boundary,
                                         Boundary boundary_kind) {
  TransitionAmplitude result{Mat2::zero(), n, tau, boundary_kind};
  for (const PathWord& path : enumerate_paths(n, tau, boundary_kind)) {
    result.matrix += path_product(path, bulk, boundary);
  }
  return result;
}

PqrsCoefficients pqrs_coefficients(const TransitionAmplitude& amplitude, const Coin& boundary) {
  const PqrsBasis basis = pqrs_decompose(boundary);
  const Amplitude q = inner(basis.q, amplitude.matrix);
  const Amplitude r = inner(basis.r, amplitude.matrix);
  const double residual = (amplitude.matrix - q * basis.q - r * basis.r).max_abs();
  return {q, r, residual};
}

}  // namespace lzwalk
