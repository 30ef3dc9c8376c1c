#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ksg/correlations.hpp"

namespace ksg {

// Nonlocal game: input distribution pi(x,y) and winning predicate W(x,y,a,b).
struct Game {
  int nx = 0, ny = 0, na = 0, nb = 0;
  std::vector<Rational> input_dist;  // (x,y) row-major, >= 0, sums to 1
  std::vector<uint8_t> win;          // (x,y,a,b) row-major

  const Rational& pi(int x, int y) const {
    return input_dist[static_cast<size_t>(x * ny + y)];
  }
  bool w(int x, int y, int a, int b) const {
    return win[static_cast<size_t>(((x * ny + y) * na + a) * nb + b)] != 0;
  }
  void validate() const;
};

// W = 0 exactly on the table's zeros; pi uniform.
Game game_from_zeros(const CorrelationTable& t);

struct DeterministicStrategy {
  std::vector<int> alice;  // x -> a
  std::vector<int> bob;    // y -> b
};

struct ClassicalValueResult {
  Rational value;
  DeterministicStrategy strategy;  // first optimum in lexicographic order
  unsigned long long alice_maps_explored = 0;
};

// Exact max over deterministic strategies of sum pi*W, by iterating Alice's
// |A|^|X| response maps with Bob best-responding per y (valid for any pi:
// Bob's per-y terms decouple once Alice's map is fixed).
// Throws GuardExceeded when |A|^|X| > guard.
ClassicalValueResult classical_value(const Game& g,
                                     unsigned long long guard = 100000000ULL);

// Exact sum pi * p * W. Sizes must match.
QuadExt quantum_value(const CorrelationTable& t, const Game& g);

struct BpqsReport {
  bool bpqs = false;
  Rational omega_c;
  DeterministicStrategy optimal_strategy;
  // For a BPQS: an input pair where the optimal classical strategy hits a
  // zero of the correlation, i.e. (x, y, a, b) with p = 0 and the strategy
  // answering (a, b).
  std::optional<std::array<int, 4>> violated_zero;
};

// BPQS iff no deterministic strategy wins on every input pair, i.e. the
// classical value of the zeros game is < 1.
BpqsReport is_bpqs(const CorrelationTable& t, unsigned long long guard = 100000000ULL);

}  // namespace ksg
