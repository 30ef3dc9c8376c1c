#include "ksg/games.hpp"

namespace ksg {

void Game::validate() const {
  if (nx <= 0 || ny <= 0 || na <= 0 || nb <= 0) throw ValidationError("empty game");
  if (input_dist.size() != static_cast<size_t>(nx * ny) ||
      win.size() != static_cast<size_t>(nx * ny * na * nb)) {
    throw ValidationError("game table sizes inconsistent");
  }
  Rational sum = 0;
  for (const Rational& q : input_dist) {
    if (q < 0) throw ValidationError("input distribution has a negative weight");
    sum += q;
  }
  if (sum != 1) throw ValidationError("input distribution must sum to 1");
}

Game game_from_zeros(const CorrelationTable& t) {
  Game g;
  g.nx = t.nx;
  g.ny = t.ny;
  g.na = t.na;
  g.nb = t.nb;
  g.input_dist.assign(static_cast<size_t>(t.nx * t.ny), make_rational(1, t.nx * t.ny));
  g.win.resize(static_cast<size_t>(t.nx * t.ny * t.na * t.nb));
  size_t k = 0;
  for (int x = 0; x < t.nx; ++x)
    for (int y = 0; y < t.ny; ++y)
      for (int a = 0; a < t.na; ++a)
        for (int b = 0; b < t.nb; ++b) g.win[k++] = t.at(x, y, a, b).is_zero() ? 0 : 1;
  return g;
}

ClassicalValueResult classical_value(const Game& g, unsigned long long guard) {
  g.validate();

  // Work over a common denominator so the inner loops stay in integers.
  Integer denom = 1;
  for (const Rational& q : g.input_dist) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> weight(static_cast<size_t>(g.nx * g.ny));
  for (int x = 0; x < g.nx; ++x) {
    for (int y = 0; y < g.ny; ++y) {
      const Rational& q = g.pi(x, y);
      weight[static_cast<size_t>(x * g.ny + y)] = q.get_num() * (denom / q.get_den());
    }
  }

  unsigned long long total = 1;
  for (int x = 0; x < g.nx; ++x) {
    if (total > guard / static_cast<unsigned long long>(g.na)) {
      throw GuardExceeded("classical_value: |A|^|X| exceeds the candidate guard of " +
                          std::to_string(guard) + "; raise --guard to force the enumeration");
    }
    total *= static_cast<unsigned long long>(g.na);
  }

  std::vector<int> alice(static_cast<size_t>(g.nx), 0);
  Integer best = -1;
  DeterministicStrategy best_strategy;
  unsigned long long explored = 0;

  while (true) {
    ++explored;
    Integer value = 0;
    std::vector<int> bob(static_cast<size_t>(g.ny), 0);
    for (int y = 0; y < g.ny; ++y) {
      Integer best_y = -1;
      int best_b = 0;
      for (int b = 0; b < g.nb; ++b) {
        Integer acc = 0;
        for (int x = 0; x < g.nx; ++x) {
          if (g.w(x, y, alice[static_cast<size_t>(x)], b)) {
            acc += weight[static_cast<size_t>(x * g.ny + y)];
          }
        }
        if (acc > best_y) {
          best_y = acc;
          best_b = b;
        }
      }
      bob[static_cast<size_t>(y)] = best_b;
      value += best_y;
    }
    if (value > best) {
      best = value;
      best_strategy = DeterministicStrategy{alice, bob};
    }

    // Lexicographic odometer over Alice's maps: last input varies fastest.
    int pos = g.nx - 1;
    while (pos >= 0 && alice[static_cast<size_t>(pos)] == g.na - 1) {
      alice[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++alice[static_cast<size_t>(pos)];
  }

  ClassicalValueResult res;
  res.value = make_rational(best, denom);
  res.strategy = std::move(best_strategy);
  res.alice_maps_explored = explored;
  return res;
}

QuadExt quantum_value(const CorrelationTable& t, const Game& g) {
  g.validate();
  if (t.nx != g.nx || t.ny != g.ny || t.na != g.na || t.nb != g.nb) {
    throw DimensionMismatch("correlation table and game sizes differ");
  }
  QuadExt acc = 0;
  for (int x = 0; x < g.nx; ++x)
    for (int y = 0; y < g.ny; ++y)
      for (int a = 0; a < g.na; ++a)
        for (int b = 0; b < g.nb; ++b)
          if (g.w(x, y, a, b)) acc += QuadExt(g.pi(x, y)) * t.at(x, y, a, b);
  return acc;
}

BpqsReport is_bpqs(const CorrelationTable& t, unsigned long long guard) {
  Game g = game_from_zeros(t);
  ClassicalValueResult cv = classical_value(g, guard);
  BpqsReport report;
  report.omega_c = cv.value;
  report.optimal_strategy = cv.strategy;
  report.bpqs = cv.value < 1;
  if (report.bpqs) {
    // The optimal strategy still loses somewhere: find the first zero it hits.
    for (int x = 0; x < g.nx && !report.violated_zero; ++x) {
      for (int y = 0; y < g.ny; ++y) {
        int a = cv.strategy.alice[static_cast<size_t>(x)];
        int b = cv.strategy.bob[static_cast<size_t>(y)];
        if (!g.w(x, y, a, b)) {
          report.violated_zero = std::array<int, 4>{x, y, a, b};
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace ksg
