#include <doctest.h>

#include <random>

#include "ksg/coloring.hpp"

using namespace ksg;

namespace {

RaySet computational_basis_set(int d) {
  RaySetBuilder b(d, 0);
  std::vector<int> elems;
  for (int i = 0; i < d; ++i) {
    Vec v = Vec::Zero(d);
    v(i) = QuadExt(1);
    elems.push_back(b.add_ray(v));
  }
  b.add_context("c", elems);
  return b.build();
}

// Exhaustive reference decision over all 2^n assignments.
bool brute_force_colorable(const ColoringInstance& inst) {
  const int n = inst.vertex_count;
  REQUIRE(n <= 20);
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1)) continue;
      for (int u : inst.orth[static_cast<size_t>(v)]) {
        if (u > v && (mask >> u & 1)) {
          ok = false;
          break;
        }
      }
    }
    for (const auto& basis : inst.bases) {
      if (!ok) break;
      int ones = 0;
      for (int v : basis) ones += mask >> v & 1;
      if (ones != 1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("a single complete basis is colorable") {
  RaySet rs = computational_basis_set(3);
  KSResult r = ks_colorable(rs);
  REQUIRE(r.verdict == KSVerdict::Colorable);
  REQUIRE(r.witness.has_value());
  int ones = 0;
  for (uint8_t v : r.witness->value) ones += v;
  CHECK(ones == 1);
  CHECK(verify_ks_assignment(rs, *r.witness));
}

TEST_CASE("assignment verification checks both conditions") {
  RaySet rs = computational_basis_set(3);
  CHECK(verify_ks_assignment(rs, KSAssignment{{1, 0, 0}}));
  CHECK_FALSE(verify_ks_assignment(rs, KSAssignment{{1, 1, 0}}));
  CHECK_FALSE(verify_ks_assignment(rs, KSAssignment{{0, 0, 0}}));
  CHECK_THROWS_AS(verify_ks_assignment(rs, KSAssignment{{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_ks_assignment(rs, KSAssignment{{1, 0, 7}}), std::invalid_argument);
}

TEST_CASE("the catalog KS sets are KS sets") {
  CHECK(ks_colorable(builtin_rayset("peres24")).verdict == KSVerdict::KS);
  CHECK(ks_colorable(builtin_rayset("peres33")).verdict == KSVerdict::KS);
  CHECK(ks_colorable(builtin_rayset("cabello18")).verdict == KSVerdict::KS);
}

TEST_CASE("vacuous instances are reported distinctly") {
  RaySetBuilder b(3, 0);
  Vec u = Vec::Zero(3), v = Vec::Zero(3);
  u(0) = QuadExt(1);
  v(1) = QuadExt(1);
  b.add_ray(u);
  b.add_ray(v);
  RaySet rs = b.build();
  KSResult r = ks_colorable(rs);
  CHECK(r.verdict == KSVerdict::VacuousColorable);
  REQUIRE(r.witness.has_value());
  CHECK(verify_ks_assignment(rs, *r.witness));
}

TEST_CASE("solver agrees with brute force on random sub-catalogs") {
  std::mt19937_64 gen(616);
  RaySet p24 = builtin_rayset("peres24");
  RaySet p33 = builtin_rayset("peres33");
  int ks_seen = 0, colorable_seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const RaySet& source = (trial % 2) ? p24 : p33;
    std::vector<int> keep;
    for (int i = 0; i < source.ray_count(); ++i) {
      if (gen() % 2 == 0 && keep.size() < 16) keep.push_back(i);
    }
    if (keep.size() < 3) continue;
    RaySetBuilder b(source.dimension(), source.radical());
    for (int i : keep) b.add_ray(source.ray(i));
    RaySet sub = b.build();
    ColoringInstance inst = coloring_instance(sub);
    KSResult r = ks_colorable(inst);
    bool colorable = brute_force_colorable(inst);
    if (r.verdict == KSVerdict::KS) {
      CHECK_FALSE(colorable);
      ++ks_seen;
    } else {
      CHECK(colorable);
      ++colorable_seen;
    }
  }
  CHECK(colorable_seen > 0);  // the sample must exercise both branches
}

TEST_CASE("verdict is invariant under ray permutation and scaling") {
  std::mt19937_64 gen(717);
  RaySet p33 = builtin_rayset("peres33");
  std::vector<int> keep;
  for (int i = 0; i < p33.ray_count(); ++i)
    if (gen() % 2) keep.push_back(i);
  RaySetBuilder original(3, 2);
  for (int i : keep) original.add_ray(p33.ray(i));

  std::shuffle(keep.begin(), keep.end(), gen);
  RaySetBuilder scrambled(3, 2);
  QuadExt root2 = QuadExt::sqrt_of(2);
  for (int i : keep) {
    Vec v = p33.ray(i).entries();
    QuadExt scale = QuadExt(make_rational(-3, 7));
    if (gen() % 2) scale *= root2;
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) *= scale;
    scrambled.add_ray(v);
  }
  RaySet a = original.build();
  RaySet b = scrambled.build();
  CHECK(a.rays() == b.rays());  // canonicalization absorbs scale and order
  CHECK((ks_colorable(a).verdict == KSVerdict::KS) == (ks_colorable(b).verdict == KSVerdict::KS));
}

TEST_CASE("generalized instances accept projectors of higher rank") {
  // d=4: two rank-2 projectors split the space; one extra rank-1 inside the
  // first block.
  auto e = [](int i) {
    Vec v = Vec::Zero(4);
    v(i) = QuadExt(1);
    return v;
  };
  Mat block01 = Projector::from_ray(e(0)).matrix() + Projector::from_ray(e(1)).matrix();
  Mat block23 = Projector::from_ray(e(2)).matrix() + Projector::from_ray(e(3)).matrix();
  std::vector<Projector> ps{Projector(block01), Projector(block23), Projector::from_ray(e(0))};
  ColoringInstance inst = coloring_instance(ps);
  CHECK(inst.vertex_count == 3);
  // Complete subsets: {P01, P23} by trace-sum and exact matrix sum.
  REQUIRE(inst.bases.size() == 1);
  CHECK(inst.bases[0] == std::vector<int>{0, 1});
  // Orthogonality: P01 is orthogonal to P23, the rank-1 only to P23.
  KSResult r = ks_colorable(inst);
  CHECK(r.verdict == KSVerdict::Colorable);
}
