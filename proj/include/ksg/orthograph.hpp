#pragma once

#include <string>
#include <vector>

#include "ksg/catalog.hpp"

namespace ksg {

// Orthogonality graph of a ray catalog: vertices are ray indices in canonical
// order, edges join exactly the pairs with inner product zero.
struct OrthGraph {
  int dimension = 0;
  int vertex_count = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographic

  bool adjacent(int i, int j) const { return adj[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  int degree(int v) const;
};

OrthGraph build_graph(const RaySet& rs);

// All complete orthogonal bases: cliques of size exactly d, in lexicographic
// order. For rank-one rays, d mutually orthogonal rays always sum to the
// identity; each enumerated basis is nevertheless validated exactly.
std::vector<Context> enumerate_bases(const OrthGraph& g, const RaySet& rs);
std::vector<std::vector<int>> enumerate_cliques_of_size(const OrthGraph& g, int size);

// Maximal cliques (Bron-Kerbosch with pivoting), lexicographically sorted.
std::vector<std::vector<int>> maximal_cliques(const OrthGraph& g);

// Maximal cliques of size < d: orthogonal families that cannot be completed
// to a basis. Reported separately; never treated as contexts.
std::vector<std::vector<int>> incomplete_maximal_cliques(const OrthGraph& g);

enum class Party { None, Alice, Bob, Shared };

// Classifies each pooled-catalog ray by which side's contexts reference it.
std::vector<Party> party_split(const RaySet& pooled, const Scenario& sc);

// DOT export; party colors follow the red (Alice) / blue (Bob) /
// violet (shared) convention when a split is supplied.
std::string export_dot(const OrthGraph& g, const RaySet& rs,
                       const std::vector<Party>* split = nullptr);

// JSON adjacency dump (deterministic ordering).
std::string export_adjacency_json(const OrthGraph& g, const RaySet& rs);

}  // namespace ksg
