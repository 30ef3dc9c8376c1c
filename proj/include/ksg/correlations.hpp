#pragma once

#include <array>
#include <vector>

#include "ksg/catalog.hpp"

namespace ksg {

// Exact p(a,b|x,y), row-major over (x, y, a, b). Outcomes beyond a context's
// length have probability zero.
struct CorrelationTable {
  int nx = 0, ny = 0, na = 0, nb = 0;
  std::vector<QuadExt> values;

  const QuadExt& at(int x, int y, int a, int b) const {
    return values[static_cast<size_t>(((x * ny + y) * na + a) * nb + b)];
  }
  QuadExt& at(int x, int y, int a, int b) {
    return values[static_cast<size_t>(((x * ny + y) * na + a) * nb + b)];
  }
};

// Born-rule table over the scenario's unnormalized state:
//   p(a,b|x,y) = tr(C^T Pi_{a|x} C Pi_{b|y}) / norm2(C).
// Every (x,y) slice is validated to sum to exactly 1 with no negative entry.
CorrelationTable correlation(const Scenario& sc);

// Exact-zero positions, lexicographic (x, y, a, b).
std::vector<std::array<int, 4>> zeros(const CorrelationTable& t);

// True iff Alice's marginals are independent of y and Bob's of x, exactly.
bool check_nosignaling(const CorrelationTable& t);

// Context lists produced by the reduced-state construction: S_A from Alice's
// post-measurement supports, S_B from Alice's supports conditioned on Bob's
// outcomes. Each context is validated (mutually orthogonal, sums to identity)
// before return; a zero-probability outcome contributes nothing and a context
// that then fails validation is an error naming the offending input.
struct ConstructedContexts {
  std::vector<std::vector<Projector>> s_a;
  std::vector<std::vector<Projector>> s_b;
};

ConstructedContexts theorem1_construct(const Scenario& sc);

// Rank-one constructed contexts as a two-sided scenario over the same state,
// suitable for serialization. Throws ValidationError if any constructed
// projector has rank > 1.
Scenario constructed_to_scenario(const ConstructedContexts& cc, const Scenario& source);

}  // namespace ksg
