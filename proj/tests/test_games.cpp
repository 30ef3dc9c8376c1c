#include <doctest.h>

#include <random>

#include "ksg/games.hpp"

using namespace ksg;

namespace {

// Reference value by enumerating BOTH players' deterministic maps. Exact, and
// independent of the best-response decomposition used by classical_value.
Rational oracle_classical_value(const Game& g) {
  std::vector<int> alice(static_cast<size_t>(g.nx), 0);
  Rational best = 0;
  bool any = false;
  while (true) {
    std::vector<int> bob(static_cast<size_t>(g.ny), 0);
    while (true) {
      Rational v = 0;
      for (int x = 0; x < g.nx; ++x)
        for (int y = 0; y < g.ny; ++y)
          if (g.w(x, y, alice[static_cast<size_t>(x)], bob[static_cast<size_t>(y)]))
            v += g.pi(x, y);
      if (!any || v > best) {
        best = v;
        any = true;
      }
      int pos = g.ny - 1;
      while (pos >= 0 && bob[static_cast<size_t>(pos)] == g.nb - 1) bob[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++bob[static_cast<size_t>(pos)];
    }
    int pos = g.nx - 1;
    while (pos >= 0 && alice[static_cast<size_t>(pos)] == g.na - 1) alice[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++alice[static_cast<size_t>(pos)];
  }
  return best;
}

// The same decomposition with the roles of the players exchanged: an
// independent route to the optimum for games too large to enumerate fully.
Rational role_swapped_value(const Game& g) {
  Game swapped;
  swapped.nx = g.ny;
  swapped.ny = g.nx;
  swapped.na = g.nb;
  swapped.nb = g.na;
  swapped.input_dist.resize(static_cast<size_t>(g.nx * g.ny));
  swapped.win.resize(g.win.size());
  for (int x = 0; x < g.nx; ++x)
    for (int y = 0; y < g.ny; ++y) {
      swapped.input_dist[static_cast<size_t>(y * g.nx + x)] = g.pi(x, y);
      for (int a = 0; a < g.na; ++a)
        for (int b = 0; b < g.nb; ++b)
          swapped.win[static_cast<size_t>(((y * g.nx + x) * g.nb + b) * g.na + a)] =
              g.w(x, y, a, b);
    }
  return classical_value(swapped).value;
}

}  // namespace

TEST_CASE("zeros game construction") {
  CorrelationTable t;
  t.nx = t.ny = 1;
  t.na = t.nb = 3;
  t.values.assign(9, QuadExt(0));
  for (int a = 0; a < 3; ++a) t.at(0, 0, a, a) = QuadExt(make_rational(1, 3));
  Game g = game_from_zeros(t);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(g.w(0, 0, a, b) == (a == b));
  ClassicalValueResult cv = classical_value(g);
  CHECK(cv.value == 1);  // answer the same outcome on both sides

  // A strictly positive table wins everywhere.
  CorrelationTable pos = t;
  for (QuadExt& v : pos.values) v = QuadExt(make_rational(1, 9));
  Game g1 = game_from_zeros(pos);
  for (uint8_t w : g1.win) CHECK(w == 1);
  CHECK(quantum_value(pos, g1) == QuadExt(1));
}

TEST_CASE("magic-square classical value is exactly 8/9") {
  Scenario sc = builtin_scenario("magic-square-scenario");
  CorrelationTable t = correlation(sc);
  Game g = game_from_zeros(t);
  ClassicalValueResult cv = classical_value(g);
  CHECK(cv.alice_maps_explored == 64);  // 4^3 Alice response maps
  CHECK(cv.value == make_rational(8, 9));
  CHECK(oracle_classical_value(g) == make_rational(8, 9));  // full 4096-pair enumeration
  CHECK(quantum_value(t, g) == QuadExt(1));
}

TEST_CASE("qutrit classical value is exactly 62/63") {
  Scenario sc = builtin_scenario("qutrit-scenario");
  CorrelationTable t = correlation(sc);
  Game g = game_from_zeros(t);
  ClassicalValueResult cv = classical_value(g);
  CHECK(cv.alice_maps_explored == 19683);  // 3^9 Alice response maps
  CHECK(cv.value == make_rational(62, 63));
  CHECK(role_swapped_value(g) == make_rational(62, 63));  // 3^7 Bob maps, Alice best response
  CHECK(quantum_value(t, g) == QuadExt(1));
}

TEST_CASE("quantum value of a table against its own zeros game is exactly 1") {
  for (const char* name : {"magic-square-scenario", "qutrit-scenario"}) {
    CorrelationTable t = correlation(builtin_scenario(name));
    Game g = game_from_zeros(t);
    CHECK(quantum_value(t, g) == QuadExt(1));
    Game never = g;
    for (auto& w : never.win) w = 0;
    CHECK(quantum_value(t, never) == QuadExt(0));
    Game always = g;
    for (auto& w : always.win) w = 1;
    CHECK(quantum_value(t, always) == QuadExt(1));
  }
}

TEST_CASE("bpqs verdicts") {
  CorrelationTable ms = correlation(builtin_scenario("magic-square-scenario"));
  BpqsReport rep = is_bpqs(ms);
  CHECK(rep.bpqs);
  CHECK(rep.omega_c == make_rational(8, 9));
  REQUIRE(rep.violated_zero.has_value());
  auto [x, y, a, b] = *rep.violated_zero;
  CHECK(ms.at(x, y, a, b).is_zero());
  CHECK(rep.optimal_strategy.alice[static_cast<size_t>(x)] == a);
  CHECK(rep.optimal_strategy.bob[static_cast<size_t>(y)] == b);

  CHECK(is_bpqs(correlation(builtin_scenario("qutrit-scenario"))).bpqs);

  // Both parties measuring one shared basis: a constant strategy wins.
  RaySetBuilder ab(3, 0), bb(3, 0);
  std::vector<int> ea, eb;
  for (int i = 0; i < 3; ++i) {
    Vec v = Vec::Zero(3);
    v(i) = QuadExt(1);
    ea.push_back(ab.add_ray(v));
    eb.push_back(bb.add_ray(v));
  }
  ab.add_context("x0", ea);
  bb.add_context("y0", eb);
  Scenario comp{PureState(Mat::Identity(3, 3)), ab.build(), bb.build()};
  BpqsReport flat = is_bpqs(correlation(comp));
  CHECK_FALSE(flat.bpqs);
  CHECK(flat.omega_c == 1);
  CHECK_FALSE(flat.violated_zero.has_value());
}

TEST_CASE("classical value is at most 1 and invariant under relabeling") {
  std::mt19937_64 gen(919);
  for (int trial = 0; trial < 200; ++trial) {
    Game g;
    g.nx = 1 + static_cast<int>(gen() % 3);
    g.ny = 1 + static_cast<int>(gen() % 3);
    g.na = 1 + static_cast<int>(gen() % 3);
    g.nb = 1 + static_cast<int>(gen() % 3);
    g.input_dist.assign(static_cast<size_t>(g.nx * g.ny), make_rational(1, g.nx * g.ny));
    g.win.resize(static_cast<size_t>(g.nx * g.ny * g.na * g.nb));
    for (auto& w : g.win) w = gen() % 2;
    Rational v = classical_value(g).value;
    CHECK(v <= 1);
    CHECK(v == oracle_classical_value(g));

    // Relabel x-inputs and a-outputs.
    std::vector<int> px(static_cast<size_t>(g.nx)), pa(static_cast<size_t>(g.na));
    std::iota(px.begin(), px.end(), 0);
    std::iota(pa.begin(), pa.end(), 0);
    std::shuffle(px.begin(), px.end(), gen);
    std::shuffle(pa.begin(), pa.end(), gen);
    Game h = g;
    for (int x = 0; x < g.nx; ++x)
      for (int y = 0; y < g.ny; ++y) {
        h.input_dist[static_cast<size_t>(px[static_cast<size_t>(x)] * g.ny + y)] = g.pi(x, y);
        for (int a = 0; a < g.na; ++a)
          for (int b = 0; b < g.nb; ++b)
            h.win[static_cast<size_t>(
                ((px[static_cast<size_t>(x)] * g.ny + y) * g.na + pa[static_cast<size_t>(a)]) *
                    g.nb +
                b)] = g.w(x, y, a, b);
      }
    CHECK(classical_value(h).value == v);
  }
}

TEST_CASE("non-uniform input distributions are handled exactly") {
  std::mt19937_64 gen(1020);
  for (int trial = 0; trial < 100; ++trial) {
    Game g;
    g.nx = 2;
    g.ny = 2;
    g.na = 2;
    g.nb = 3;
    // Random positive rationals normalized to 1; generally not a product.
    std::vector<Rational> raw;
    Rational total = 0;
    for (int k = 0; k < 4; ++k) {
      Rational r = make_rational(1 + static_cast<long>(gen() % 7), 1 + static_cast<long>(gen() % 5));
      raw.push_back(r);
      total += r;
    }
    for (Rational& r : raw) g.input_dist.push_back(r / total);
    g.win.resize(static_cast<size_t>(g.nx * g.ny * g.na * g.nb));
    for (auto& w : g.win) w = gen() % 2;
    CHECK(classical_value(g).value == oracle_classical_value(g));
  }
}

TEST_CASE("the strategy guard aborts oversized enumerations") {
  Game g;
  g.nx = 9;
  g.ny = 1;
  g.na = 3;
  g.nb = 1;
  g.input_dist.assign(9, make_rational(1, 9));
  g.win.assign(static_cast<size_t>(9 * 3), 1);
  CHECK_THROWS_AS(classical_value(g, 1000), GuardExceeded);
  CHECK(classical_value(g, 20000).value == 1);
}
