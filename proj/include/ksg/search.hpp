#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ksg/bks.hpp"
#include "ksg/catalog.hpp"
#include "ksg/orthograph.hpp"

namespace ksg {

struct SearchOptions {
  long max_product = 0;  // required; largest |S_A|*|S_B| to consider
  enum class Pool { Declared, All } pool = Pool::All;
  int workers = 1;
  std::string checkpoint_path;  // optional sweep checkpoint (JSON lines)
};

struct SearchResult {
  bool found = false;
  std::vector<int> s_a, s_b;        // indices into pool_bases
  std::vector<Context> pool_bases;  // candidate pool (complete bases)
  long product = 0;
  long sum = 0;
  // All pairs with |S_A|*|S_B| < exhausted_below are certified admissible.
  long exhausted_below = 0;
  unsigned long long sa_subsets_examined = 0;
  unsigned long long certificate_prunes = 0;  // S_A subsets covered by a SAT certificate
  unsigned long long solver_confirmations = 0;
};

// Searches pairs of basis subsets in ascending |S_A|*|S_B| (then ascending
// |S_A|+|S_B|, then lexicographic) for the first pair that is a bipartite KS
// set. Subsets may overlap. A pair is skipped only under a covering
// admissibility certificate: an Alice pick tuple compatible with some element
// of every pool basis certifies (S_A, anything) admissible, and aggregated
// hitting-set reasoning over the per-tuple dead sets decides the rest. The
// returned pair is re-verified with a fresh solver instance.
SearchResult minimal_bks_search(const RaySet& rs, const SearchOptions& opt);

struct CriticalityReport {
  int deletions_checked = 0;
  // Contexts whose deletion leaves the scenario a bipartite KS set:
  // ('A' or 'B', context index within the side).
  std::vector<std::pair<char, int>> non_critical;
  bool all_critical() const { return non_critical.empty(); }
};

// Requires bks_admissible(sc) = BKS; checks that deleting any single context
// from either side flips the verdict to admissible.
CriticalityReport criticality_check(const Scenario& sc);

using CandidatePair = std::pair<std::vector<int>, std::vector<int>>;  // pool basis indices

// Removes candidate pairs equivalent under the supplied ray permutations
// (which must be orthogonality-preserving bijections stabilizing the pool)
// and, optionally, under swapping the two parties. Keeps each orbit's
// lexicographic minimum; never changes the minimal product found.
std::vector<CandidatePair> symmetry_filter(const RaySet& rs, const std::vector<Context>& pool,
                                           const std::vector<CandidatePair>& pairs,
                                           const std::vector<std::vector<int>>& ray_permutations,
                                           bool include_party_swap = false);

// The candidate pool minimal_bks_search uses for the given options.
std::vector<Context> search_pool(const RaySet& rs, SearchOptions::Pool pool);

// Bipartite instance for a pair of pool subsets (rank-one rays).
BksInstance bks_instance_for_pair(const RaySet& rs, const std::vector<Context>& pool,
                                  const std::vector<int>& s_a, const std::vector<int>& s_b);

}  // namespace ksg
