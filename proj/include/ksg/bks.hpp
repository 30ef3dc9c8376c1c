#pragma once

#include <optional>
#include <vector>

#include "ksg/catalog.hpp"
#include "ksg/coloring.hpp"

namespace ksg {

// Two-party context family with the cross-party orthogonality relation over a
// global element table. Elements shared between parties reuse one id.
struct BksInstance {
  std::vector<std::vector<int>> alice_contexts;  // element ids, outcome order
  std::vector<std::vector<int>> bob_contexts;
  std::vector<std::vector<bool>> orth;           // element id x element id

  int context_count() const {
    return static_cast<int>(alice_contexts.size() + bob_contexts.size());
  }
};

BksInstance bks_instance(const Scenario& sc);
BksInstance bks_instance(const std::vector<std::vector<Projector>>& s_a,
                         const std::vector<std::vector<Projector>>& s_b);

// One chosen element per context, by position within the context.
struct LocalStrategy {
  std::vector<int> alice_choice;
  std::vector<int> bob_choice;
};

enum class BksVerdict {
  Admissible,         // a cross-consistent choice exists (witness attached)
  BKS,                // no such choice: (S_A, S_B) is a bipartite KS set
  VacuousAdmissible,  // one side has no contexts: reported distinctly
};

struct BksResult {
  BksVerdict verdict;
  std::optional<LocalStrategy> witness;
  SolveStats stats;
};

// Constraint search over one-pick-per-context choices with forward checking:
// chosen cross-party elements must never be orthogonal. Intra-party
// orthogonality between different contexts imposes no constraint.
BksResult bks_admissible(const BksInstance& inst);
BksResult bks_admissible(const Scenario& sc);

// True iff no chosen cross-party pair is orthogonal.
// Throws std::invalid_argument on a partial strategy.
bool verify_local_strategy(const BksInstance& inst, const LocalStrategy& s);

}  // namespace ksg
