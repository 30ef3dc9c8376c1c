#include <array>

#include "ksg/catalog.hpp"

namespace ksg {

namespace {

// d=4 catalogs are integral; d=3 catalogs live in Q(sqrt(2)), entries encoded
// as p + s*sqrt(2).

using Ray4 = std::array<int, 4>;
using Basis4 = std::array<Ray4, 4>;

constexpr std::array<Basis4, 3> kMagicSquareAlice = {{
    {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
    {{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}},
    {{{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}}},
}};

constexpr std::array<Basis4, 3> kMagicSquareBob = {{
    {{{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}}},
    {{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}},
    {{{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}}},
}};

// The 18-ray, 9-basis set in d=4 from Cabello, Estebaranz, Garcia-Alcaine,
// Phys. Lett. A 212, 183 (1996). Transcribed data; a test certifies it is a
// KS set.
constexpr std::array<Basis4, 9> kCabello18 = {{
    {{{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, -1, 0, 0}}},
    {{{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}}},
    {{{1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}}},
    {{{1, -1, 1, -1}, {1, 1, 1, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}},
    {{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, -1}}},
    {{{1, -1, -1, 1}, {1, 1, 1, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}}},
    {{{1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 0, 0}, {0, 0, 1, 1}}},
    {{{1, 1, -1, 1}, {-1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, -1}}},
    {{{1, 1, 1, -1}, {-1, 1, 1, 1}, {1, 0, 0, 1}, {0, 1, -1, 0}}},
}};

struct E {
  int p;  // rational coefficient
  int s;  // sqrt(2) coefficient
};
using Ray3 = std::array<E, 3>;
using Basis3 = std::array<Ray3, 3>;

constexpr std::array<Basis3, 9> kQutritAlice = {{
    {{{{{1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {1, 0}, {1, 0}}}, {{{0, 0}, {1, 0}, {-1, 0}}}}},
    {{{{{0, 0}, {1, 0}, {0, 0}}}, {{{1, 0}, {0, 0}, {1, 0}}}, {{{1, 0}, {0, 0}, {-1, 0}}}}},
    {{{{{0, 0}, {0, 0}, {1, 0}}}, {{{1, 0}, {1, 0}, {0, 0}}}, {{{1, 0}, {-1, 0}, {0, 0}}}}},
    {{{{{1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {1, 0}, {0, 1}}}, {{{0, 0}, {0, 1}, {-1, 0}}}}},
    {{{{{1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {1, 0}, {0, -1}}}, {{{0, 0}, {0, 1}, {1, 0}}}}},
    {{{{{0, 0}, {1, 0}, {0, 0}}}, {{{1, 0}, {0, 0}, {0, 1}}}, {{{0, 1}, {0, 0}, {-1, 0}}}}},
    {{{{{0, 0}, {1, 0}, {0, 0}}}, {{{1, 0}, {0, 0}, {0, -1}}}, {{{0, 1}, {0, 0}, {1, 0}}}}},
    {{{{{0, 0}, {0, 0}, {1, 0}}}, {{{1, 0}, {0, 1}, {0, 0}}}, {{{0, 1}, {-1, 0}, {0, 0}}}}},
    {{{{{0, 0}, {0, 0}, {1, 0}}}, {{{1, 0}, {0, -1}, {0, 0}}}, {{{0, 1}, {1, 0}, {0, 0}}}}},
}};

constexpr std::array<Basis3, 7> kQutritBob = {{
    {{{{{1, 0}, {0, 0}, {0, 0}}}, {{{0, 0}, {1, 0}, {0, 0}}}, {{{0, 0}, {0, 0}, {1, 0}}}}},
    {{{{{1, 0}, {1, 0}, {0, 0}}}, {{{1, 0}, {-1, 0}, {0, 1}}}, {{{-1, 0}, {1, 0}, {0, 1}}}}},
    {{{{{1, 0}, {-1, 0}, {0, 0}}}, {{{1, 0}, {1, 0}, {0, 1}}}, {{{1, 0}, {1, 0}, {0, -1}}}}},
    {{{{{1, 0}, {0, 0}, {1, 0}}}, {{{1, 0}, {0, 1}, {-1, 0}}}, {{{-1, 0}, {0, 1}, {1, 0}}}}},
    {{{{{1, 0}, {0, 0}, {-1, 0}}}, {{{1, 0}, {0, 1}, {1, 0}}}, {{{1, 0}, {0, -1}, {1, 0}}}}},
    {{{{{0, 0}, {1, 0}, {1, 0}}}, {{{0, 1}, {1, 0}, {-1, 0}}}, {{{0, 1}, {-1, 0}, {1, 0}}}}},
    {{{{{0, 0}, {1, 0}, {-1, 0}}}, {{{0, 1}, {1, 0}, {1, 0}}}, {{{0, -1}, {1, 0}, {1, 0}}}}},
}};

Vec vec4(const Ray4& r) {
  Vec v(4);
  for (int i = 0; i < 4; ++i) v(i) = QuadExt(r[static_cast<size_t>(i)]);
  return v;
}

Vec vec3(const Ray3& r) {
  Vec v(3);
  for (int i = 0; i < 3; ++i) {
    const E& e = r[static_cast<size_t>(i)];
    v(i) = QuadExt(Rational(e.p), Rational(e.s), e.s == 0 ? 0 : 2);
  }
  return v;
}

template <size_t N>
void add_bases4(RaySetBuilder& b, const std::array<Basis4, N>& bases, const char* prefix) {
  for (size_t x = 0; x < N; ++x) {
    std::vector<int> elems;
    for (const Ray4& r : bases[x]) elems.push_back(b.add_ray(vec4(r)));
    b.add_context(prefix + std::to_string(x), std::move(elems));
  }
}

template <size_t N>
void add_bases3(RaySetBuilder& b, const std::array<Basis3, N>& bases, const char* prefix) {
  for (size_t x = 0; x < N; ++x) {
    std::vector<int> elems;
    for (const Ray3& r : bases[x]) elems.push_back(b.add_ray(vec3(r)));
    b.add_context(prefix + std::to_string(x), std::move(elems));
  }
}

RaySet make_peres24() {
  RaySetBuilder b(4, 0);
  add_bases4(b, kMagicSquareAlice, "x");
  add_bases4(b, kMagicSquareBob, "y");
  return b.build();
}

RaySet make_peres33() {
  RaySetBuilder b(3, 2);
  add_bases3(b, kQutritAlice, "x");
  add_bases3(b, kQutritBob, "y");
  return b.build();
}

RaySet make_cabello18() {
  RaySetBuilder b(4, 0);
  add_bases4(b, kCabello18, "c");
  return b.build();
}

Scenario make_magic_square_scenario() {
  RaySetBuilder alice(4, 0);
  add_bases4(alice, kMagicSquareAlice, "x");
  RaySetBuilder bob(4, 0);
  add_bases4(bob, kMagicSquareBob, "y");
  return Scenario{PureState(Mat::Identity(4, 4)), alice.build(), bob.build()};
}

Scenario make_qutrit_scenario() {
  RaySetBuilder alice(3, 2);
  add_bases3(alice, kQutritAlice, "x");
  RaySetBuilder bob(3, 2);
  add_bases3(bob, kQutritBob, "y");
  return Scenario{PureState(Mat::Identity(3, 3)), alice.build(), bob.build()};
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "peres24", "peres33", "cabello18", "magic-square-scenario", "qutrit-scenario"};
  return names;
}

bool is_builtin(std::string_view name) {
  for (const std::string& n : builtin_names())
    if (n == name) return true;
  return false;
}

Builtin builtin(std::string_view name) {
  if (name == "peres24") return make_peres24();
  if (name == "peres33") return make_peres33();
  if (name == "cabello18") return make_cabello18();
  if (name == "magic-square-scenario") return make_magic_square_scenario();
  if (name == "qutrit-scenario") return make_qutrit_scenario();
  throw ValidationError("unknown builtin '" + std::string(name) + "'");
}

RaySet builtin_rayset(std::string_view name) {
  Builtin b = builtin(name);
  if (const RaySet* rs = std::get_if<RaySet>(&b)) return *rs;
  throw ValidationError("builtin '" + std::string(name) + "' is a scenario, not a rayset");
}

Scenario builtin_scenario(std::string_view name) {
  Builtin b = builtin(name);
  if (const Scenario* sc = std::get_if<Scenario>(&b)) return *sc;
  throw ValidationError("builtin '" + std::string(name) + "' is a rayset, not a scenario");
}

}  // namespace ksg
