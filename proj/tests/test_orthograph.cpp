#include <doctest.h>

#include <random>

#include "ksg/orthograph.hpp"

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

// All size-d subsets with pairwise orthogonality, by direct enumeration.
std::vector<std::vector<int>> naive_cliques(const OrthGraph& g, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<size_t>(d));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      out.emplace_back(pick.begin(), pick.end());
      return;
    }
    for (int v = start; v < g.vertex_count; ++v) {
      bool ok = true;
      for (int i = 0; i < depth; ++i) {
        if (!g.adjacent(pick[static_cast<size_t>(i)], v)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pick[static_cast<size_t>(depth)] = v;
        rec(v + 1, depth + 1);
      }
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("small graphs") {
  RaySet triangle = computational_basis_set(3);
  OrthGraph g = build_graph(triangle);
  CHECK(g.vertex_count == 3);
  CHECK(g.edges.size() == 3);
  auto bases = enumerate_bases(g, triangle);
  REQUIRE(bases.size() == 1);
  CHECK(bases[0].elements == std::vector<int>{0, 1, 2});

  RaySetBuilder single(3, 0);
  Vec v(3);
  v << QuadExt(1), QuadExt(2), QuadExt(0);
  single.add_ray(v);
  RaySet one = single.build();
  OrthGraph g1 = build_graph(one);
  CHECK(g1.vertex_count == 1);
  CHECK(g1.edges.empty());
  CHECK(enumerate_bases(g1, one).empty());
}

TEST_CASE("catalog graphs have the frozen edge and basis counts") {
  RaySet p24 = builtin_rayset("peres24");
  OrthGraph g24 = build_graph(p24);
  // Independent count over all 276 pairs.
  size_t brute = 0;
  for (int i = 0; i < p24.ray_count(); ++i)
    for (int j = i + 1; j < p24.ray_count(); ++j)
      if (inner(p24.ray(i).entries(), p24.ray(j).entries()).is_zero()) ++brute;
  CHECK(g24.edges.size() == brute);
  CHECK(g24.edges.size() == 108);
  auto bases24 = enumerate_bases(g24, p24);
  CHECK(bases24.size() == 24);

  RaySet p33 = builtin_rayset("peres33");
  OrthGraph g33 = build_graph(p33);
  CHECK(g33.edges.size() == 72);
  auto bases33 = enumerate_bases(g33, p33);
  CHECK(bases33.size() == 16);

  RaySet c18 = builtin_rayset("cabello18");
  OrthGraph g18 = build_graph(c18);
  CHECK(g18.edges.size() == 63);
  CHECK(enumerate_bases(g18, c18).size() == 9);
}

TEST_CASE("enumerated bases cover every declared context") {
  for (const char* name : {"peres24", "peres33", "cabello18"}) {
    RaySet rs = builtin_rayset(name);
    auto bases = enumerate_bases(build_graph(rs), rs);
    for (const Context& declared : rs.declared_contexts()) {
      std::vector<int> sorted = declared.elements;
      std::sort(sorted.begin(), sorted.end());
      bool found = false;
      for (const Context& b : bases) {
        if (b.elements == sorted) {
          found = true;
          break;
        }
      }
      CHECK_MESSAGE(found, "declared context missing from enumeration in ", name);
    }
  }
}

TEST_CASE("pivoting enumeration agrees with naive subset enumeration") {
  std::mt19937_64 gen(515);
  RaySet p33 = builtin_rayset("peres33");
  for (int trial = 0; trial < 30; ++trial) {
    // Random sub-catalog with at most 12 rays.
    std::vector<int> keep;
    for (int i = 0; i < p33.ray_count(); ++i) {
      if (gen() % 3 == 0 && keep.size() < 12) keep.push_back(i);
    }
    if (keep.size() < 3) continue;
    RaySetBuilder b(3, 2);
    for (int i : keep) b.add_ray(p33.ray(i));
    RaySet sub = b.build();
    OrthGraph g = build_graph(sub);
    auto fast = enumerate_cliques_of_size(g, 3);
    auto naive = naive_cliques(g, 3);
    CHECK(fast == naive);

    // Maximal cliques really are maximal and cover all d-cliques.
    auto maximal = maximal_cliques(g);
    for (const auto& c : fast) {
      CHECK(std::find(maximal.begin(), maximal.end(), c) != maximal.end());
    }
  }
}

TEST_CASE("incomplete maximal cliques are reported separately") {
  RaySet p33 = builtin_rayset("peres33");
  OrthGraph g = build_graph(p33);
  auto incomplete = incomplete_maximal_cliques(g);
  CHECK(incomplete.size() == 24);
  for (const auto& c : incomplete) CHECK(static_cast<int>(c.size()) < 3);
}

TEST_CASE("party split of the builtin scenarios") {
  Scenario ms = builtin_scenario("magic-square-scenario");
  RaySet pooled_ms = pooled_rayset(ms);
  auto split_ms = party_split(pooled_ms, ms);
  int a = 0, b = 0, s = 0;
  for (Party p : split_ms) {
    a += p == Party::Alice;
    b += p == Party::Bob;
    s += p == Party::Shared;
  }
  CHECK(a == 12);
  CHECK(b == 12);
  CHECK(s == 0);

  Scenario qt = builtin_scenario("qutrit-scenario");
  RaySet pooled_qt = pooled_rayset(qt);
  auto split_qt = party_split(pooled_qt, qt);
  a = b = s = 0;
  for (Party p : split_qt) {
    a += p == Party::Alice;
    b += p == Party::Bob;
    s += p == Party::Shared;
  }
  // 21 Alice rays and 21 Bob rays overlap in 9, so 12 + 12 + 9 = 33.
  CHECK(a == 12);
  CHECK(b == 12);
  CHECK(s == 9);
}

TEST_CASE("DOT export carries labels and party colors") {
  RaySet triangle = computational_basis_set(3);
  OrthGraph g = build_graph(triangle);
  std::string dot = export_dot(g, triangle);
  CHECK(dot.find("v0 [label=\"(0,0,1)\"]") != std::string::npos);
  CHECK(dot.find("v0 -- v1;") != std::string::npos);

  Scenario qt = builtin_scenario("qutrit-scenario");
  RaySet pooled = pooled_rayset(qt);
  OrthGraph gq = build_graph(pooled);
  auto split = party_split(pooled, qt);
  std::string colored = export_dot(gq, pooled, &split);
  auto count = [&](const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = colored.find(needle, pos)) != std::string::npos) {
      ++n;
      pos += needle.size();
    }
    return n;
  };
  CHECK(count("color=red") == 12);
  CHECK(count("color=blue") == 12);
  CHECK(count("color=violet") == 9);
}

TEST_CASE("adjacency JSON is deterministic") {
  RaySet triangle = computational_basis_set(3);
  OrthGraph g = build_graph(triangle);
  std::string a = export_adjacency_json(g, triangle);
  std::string b = export_adjacency_json(g, triangle);
  CHECK(a == b);
  CHECK(a.find("\"edges\": [[0, 1], [0, 2], [1, 2]]") != std::string::npos);
}
