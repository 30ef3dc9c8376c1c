#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ksg/catalog.hpp"
#include "ksg/orthograph.hpp"

namespace ksg {

// Vertices with their orthogonality relation and the complete contexts
// (subsets of mutually orthogonal elements summing to the identity).
struct ColoringInstance {
  int vertex_count = 0;
  std::vector<std::vector<int>> orth;    // sorted neighbour lists
  std::vector<std::vector<int>> bases;   // each sorted
};

// Rank-one instance: bases are all d-cliques of the orthogonality graph.
ColoringInstance coloring_instance(const RaySet& rs);

// Generalized instance for projectors of arbitrary rank: orthogonality is
// exact operator-product zero; complete subsets are found among orthogonal
// cliques whose traces sum to d and whose matrix sum is exactly the identity.
ColoringInstance coloring_instance(const std::vector<Projector>& projectors);

// f: vertex -> {0,1}
struct KSAssignment {
  std::vector<uint8_t> value;
};

enum class KSVerdict {
  Colorable,          // assignment exists (witness attached)
  KS,                 // no assignment exists: the set is a (generalized) KS set
  VacuousColorable,   // no complete basis: reported distinctly
};

struct SolveStats {
  unsigned long long nodes = 0;
  unsigned long long propagations = 0;
};

struct KSResult {
  KSVerdict verdict;
  std::optional<KSAssignment> witness;
  SolveStats stats;
};

// Complete backtracking search with orthogonality/basis propagation;
// UNSAT (verdict KS) is by exhaustion.
KSResult ks_colorable(const ColoringInstance& inst);
KSResult ks_colorable(const RaySet& rs);

// True iff the total assignment satisfies both conditions over all orthogonal
// pairs and all complete bases. Throws std::invalid_argument if partial.
bool verify_ks_assignment(const ColoringInstance& inst, const KSAssignment& a);
bool verify_ks_assignment(const RaySet& rs, const KSAssignment& a);

}  // namespace ksg
