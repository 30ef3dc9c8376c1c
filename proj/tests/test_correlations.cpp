#include <doctest.h>

#include <cmath>
#include <vector>

#include "ksg/bks.hpp"
#include "ksg/correlations.hpp"

using namespace ksg;

namespace {

Scenario computational_scenario(int d, Mat state) {
  RaySetBuilder a(d, 0), b(d, 0);
  std::vector<int> ea, eb;
  for (int i = 0; i < d; ++i) {
    Vec v = Vec::Zero(d);
    v(i) = QuadExt(1);
    ea.push_back(a.add_ray(v));
    eb.push_back(b.add_ray(v));
  }
  a.add_context("x0", ea);
  b.add_context("y0", eb);
  return Scenario{PureState(std::move(state)), a.build(), b.build()};
}

// Independent numeric oracle: dense tensor-product Born rule in floating
// point. No shared code with the exact path.
double numeric_probability(const Scenario& sc, int x, int y, int a, int b) {
  const int da = sc.dim_a(), db = sc.dim_b();
  auto ray_approx = [](const RaySet& side, const Context& ctx, int k) {
    std::vector<double> u;
    const Vec& e = side.ray(ctx.elements[static_cast<size_t>(k)]).entries();
    for (Eigen::Index i = 0; i < e.size(); ++i) u.push_back(e(i).approx());
    return u;
  };
  const Context& cx = sc.alice.declared_contexts()[static_cast<size_t>(x)];
  const Context& cy = sc.bob.declared_contexts()[static_cast<size_t>(y)];
  if (a >= static_cast<int>(cx.elements.size()) || b >= static_cast<int>(cy.elements.size())) {
    return 0.0;
  }
  std::vector<double> u = ray_approx(sc.alice, cx, a);
  std::vector<double> v = ray_approx(sc.bob, cy, b);
  auto projector = [](const std::vector<double>& w) {
    double n2 = 0;
    for (double e : w) n2 += e * e;
    std::vector<std::vector<double>> p(w.size(), std::vector<double>(w.size()));
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = 0; j < w.size(); ++j) p[i][j] = w[i] * w[j] / n2;
    return p;
  };
  auto pa = projector(u);
  auto pb = projector(v);
  // Flattened |psi>, tensor operator, quadratic form.
  std::vector<double> psi(static_cast<size_t>(da * db));
  double nrm = 0;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      double c = sc.state.coeff()(i, j).approx();
      psi[static_cast<size_t>(i * db + j)] = c;
      nrm += c * c;
    }
  double acc = 0;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) {
          acc += psi[static_cast<size_t>(i * db + j)] * pa[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                 pb[static_cast<size_t>(j)][static_cast<size_t>(l)] * psi[static_cast<size_t>(k * db + l)];
        }
  return acc / nrm;
}

}  // namespace

TEST_CASE("magic-square probabilities match the numeric tensor oracle") {
  Scenario sc = builtin_scenario("magic-square-scenario");
  CorrelationTable t = correlation(sc);
  // Spot values: computational e0 against (1,1,0,0) and (0,0,1,1).
  CHECK(t.at(0, 0, 0, 0) == QuadExt(make_rational(1, 8)));
  CHECK(t.at(0, 0, 0, 2) == QuadExt(0));
  for (int x = 0; x < t.nx; ++x)
    for (int y = 0; y < t.ny; ++y)
      for (int a = 0; a < t.na; ++a)
        for (int b = 0; b < t.nb; ++b) {
          double exact = t.at(x, y, a, b).approx();
          double oracle = numeric_probability(sc, x, y, a, b);
          CHECK(std::abs(exact - oracle) < 1e-12);
        }
}

TEST_CASE("qutrit probabilities match the numeric tensor oracle") {
  Scenario sc = builtin_scenario("qutrit-scenario");
  CorrelationTable t = correlation(sc);
  for (int x = 0; x < t.nx; ++x)
    for (int y = 0; y < t.ny; ++y)
      for (int a = 0; a < t.na; ++a)
        for (int b = 0; b < t.nb; ++b) {
          CHECK(std::abs(t.at(x, y, a, b).approx() - numeric_probability(sc, x, y, a, b)) <
                1e-12);
        }
}

TEST_CASE("maximally entangled computational bases give the delta table") {
  Scenario sc = computational_scenario(3, Mat::Identity(3, 3));
  CorrelationTable t = correlation(sc);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(t.at(0, 0, a, b) == (a == b ? QuadExt(make_rational(1, 3)) : QuadExt(0)));
  auto z = zeros(t);
  CHECK(z.size() == 6);  // the off-diagonal positions
  CHECK(check_nosignaling(t));
}

TEST_CASE("zeros are the orthogonal cross pairs for maximally entangled states") {
  Scenario sc = builtin_scenario("magic-square-scenario");
  CorrelationTable t = correlation(sc);
  auto z = zeros(t);
  CHECK(z.size() == 72);
  for (int x = 0; x < t.nx; ++x)
    for (int y = 0; y < t.ny; ++y)
      for (int a = 0; a < t.na; ++a)
        for (int b = 0; b < t.nb; ++b) {
          const Ray& u = sc.alice.ray(
              sc.alice.declared_contexts()[static_cast<size_t>(x)].elements[static_cast<size_t>(a)]);
          const Ray& v = sc.bob.ray(
              sc.bob.declared_contexts()[static_cast<size_t>(y)].elements[static_cast<size_t>(b)]);
          bool orth = inner(u.entries(), v.entries()).is_zero();
          CHECK(t.at(x, y, a, b).is_zero() == orth);
        }
}

TEST_CASE("a hand-built signaling table is detected") {
  CorrelationTable t;
  t.nx = 2;
  t.ny = 1;
  t.na = 2;
  t.nb = 2;
  t.values.assign(8, QuadExt(0));
  // x=0: Bob marginal (1, 0); x=1: Bob marginal (0, 1) -> signaling.
  t.at(0, 0, 0, 0) = QuadExt(1);
  t.at(1, 0, 0, 1) = QuadExt(1);
  CHECK_FALSE(check_nosignaling(t));
}

TEST_CASE("reduced-state construction reproduces the measurement bases") {
  for (const char* name : {"magic-square-scenario", "qutrit-scenario"}) {
    Scenario sc = builtin_scenario(name);
    ConstructedContexts cc = theorem1_construct(sc);
    REQUIRE(static_cast<int>(cc.s_a.size()) == sc.num_inputs_a());
    REQUIRE(static_cast<int>(cc.s_b.size()) == sc.num_inputs_b());
    for (int x = 0; x < sc.num_inputs_a(); ++x) {
      const Context& ctx = sc.alice.declared_contexts()[static_cast<size_t>(x)];
      REQUIRE(cc.s_a[static_cast<size_t>(x)].size() == ctx.elements.size());
      for (size_t a = 0; a < ctx.elements.size(); ++a) {
        CHECK(cc.s_a[static_cast<size_t>(x)][a] ==
              sc.alice.projector(ctx.elements[a]));
      }
    }
    for (int y = 0; y < sc.num_inputs_b(); ++y) {
      const Context& ctx = sc.bob.declared_contexts()[static_cast<size_t>(y)];
      for (size_t b = 0; b < ctx.elements.size(); ++b) {
        CHECK(cc.s_b[static_cast<size_t>(y)][b] == sc.bob.projector(ctx.elements[b]));
      }
    }
    CHECK(bks_admissible(bks_instance(cc.s_a, cc.s_b)).verdict == BksVerdict::BKS);
  }
}

TEST_CASE("zeros coincide with orthogonality of the constructed supports") {
  for (const char* name : {"magic-square-scenario", "qutrit-scenario"}) {
    Scenario sc = builtin_scenario(name);
    CorrelationTable t = correlation(sc);
    ConstructedContexts cc = theorem1_construct(sc);
    for (int x = 0; x < t.nx; ++x)
      for (int y = 0; y < t.ny; ++y)
        for (int a = 0; a < t.na; ++a)
          for (int b = 0; b < t.nb; ++b) {
            const Mat& pa = cc.s_a[static_cast<size_t>(x)][static_cast<size_t>(a)].matrix();
            const Mat& pb = cc.s_b[static_cast<size_t>(y)][static_cast<size_t>(b)].matrix();
            bool orth = is_zero(Mat(pa * pb));
            CHECK(t.at(x, y, a, b).is_zero() == orth);
          }
  }
}

TEST_CASE("construction on a shared computational basis is admissible") {
  Scenario sc = computational_scenario(3, Mat::Identity(3, 3));
  ConstructedContexts cc = theorem1_construct(sc);
  REQUIRE(cc.s_a.size() == 1);
  REQUIRE(cc.s_b.size() == 1);
  CHECK(bks_admissible(bks_instance(cc.s_a, cc.s_b)).verdict == BksVerdict::Admissible);
}

TEST_CASE("zero-probability outcomes leave a hole the construction reports") {
  Mat degenerate = Mat::Zero(3, 3);
  degenerate(0, 0) = QuadExt(1);
  degenerate(1, 1) = QuadExt(1);
  Scenario sc = computational_scenario(3, std::move(degenerate));
  CHECK_THROWS_AS(theorem1_construct(sc), ValidationError);
  try {
    theorem1_construct(sc);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("side A, x=0") != std::string::npos);
  }
}

TEST_CASE("constructed contexts serialize as a scenario") {
  Scenario sc = builtin_scenario("magic-square-scenario");
  Scenario constructed = constructed_to_scenario(theorem1_construct(sc), sc);
  Scenario reparsed = parse_scenario(serialize_scenario(constructed));
  CHECK(reparsed.alice == constructed.alice);
  CHECK(bks_admissible(reparsed).verdict == BksVerdict::BKS);
}
