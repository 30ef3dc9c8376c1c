#include "ksg/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

namespace ksg {

namespace {

// Minimal dynamic bitset; word count fixed at construction.
struct Bits {
  std::vector<uint64_t> w;
  Bits() = default;
  explicit Bits(size_t n) : w((n + 63) / 64, 0) {}
  void set(size_t i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void ors(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  bool subset_of(const Bits& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  bool none() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }
  friend bool operator==(const Bits& a, const Bits& b) { return a.w == b.w; }
  friend bool operator<(const Bits& a, const Bits& b) { return a.w < b.w; }
};

struct PoolData {
  int ray_count = 0;
  int pool_size = 0;
  std::vector<std::vector<int>> base_rays;  // pool basis -> ray ids
  std::vector<Bits> orth_ray;               // ray -> orthogonal rays
  std::vector<Bits> base_mask;              // basis -> its rays
};

PoolData make_pool_data(const RaySet& rs, const std::vector<Context>& pool) {
  PoolData pd;
  pd.ray_count = rs.ray_count();
  pd.pool_size = static_cast<int>(pool.size());
  OrthGraph g = build_graph(rs);
  pd.orth_ray.assign(static_cast<size_t>(pd.ray_count), Bits(static_cast<size_t>(pd.ray_count)));
  for (const auto& [i, j] : g.edges) {
    pd.orth_ray[static_cast<size_t>(i)].set(static_cast<size_t>(j));
    pd.orth_ray[static_cast<size_t>(j)].set(static_cast<size_t>(i));
  }
  for (const Context& ctx : pool) {
    pd.base_rays.push_back(ctx.elements);
    Bits mask(static_cast<size_t>(pd.ray_count));
    for (int e : ctx.elements) mask.set(static_cast<size_t>(e));
    pd.base_mask.push_back(std::move(mask));
  }
  return pd;
}

// Collects the dead set (pool bases with no element compatible with the
// tuple) for every Alice pick tuple of sa. Returns false as soon as some
// tuple kills nothing: that tuple is an admissibility certificate covering
// (sa, S_B) for every S_B.
bool collect_dead_family(const PoolData& pd, const std::vector<int>& sa, size_t depth, Bits killed,
                         std::vector<Bits>& family) {
  if (depth == sa.size()) {
    Bits dead(static_cast<size_t>(pd.pool_size));
    bool any = false;
    for (int b = 0; b < pd.pool_size; ++b) {
      if (pd.base_mask[static_cast<size_t>(b)].subset_of(killed)) {
        dead.set(static_cast<size_t>(b));
        any = true;
      }
    }
    if (!any) return false;
    family.push_back(std::move(dead));
    return true;
  }
  for (int ray : pd.base_rays[static_cast<size_t>(sa[depth])]) {
    Bits next = killed;
    next.ors(pd.orth_ray[static_cast<size_t>(ray)]);
    if (!collect_dead_family(pd, sa, depth + 1, std::move(next), family)) return false;
  }
  return true;
}

// Keeps only inclusion-minimal sets (hitting those hits every superset).
void prune_to_antichain(std::vector<Bits>& family) {
  std::sort(family.begin(), family.end(),
            [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Bits> minimal;
  for (const Bits& s : family) {
    bool dominated = false;
    for (const Bits& m : minimal) {
      if (m.subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(s);
  }
  family = std::move(minimal);
}

std::vector<int> bits_elements(const Bits& s, int universe) {
  std::vector<int> out;
  for (int e = 0; e < universe; ++e)
    if (s.test(static_cast<size_t>(e))) out.push_back(e);
  return out;
}

struct HittingSolver {
  const std::vector<Bits>& family;
  int universe;
  int best;

  int greedy_disjoint_bound(const std::vector<int>& uncov) const {
    Bits used(static_cast<size_t>(universe));
    int lb = 0;
    for (int idx : uncov) {
      const Bits& s = family[static_cast<size_t>(idx)];
      bool disjoint = true;
      for (size_t w = 0; w < s.w.size(); ++w) {
        if (s.w[w] & used.w[w]) {
          disjoint = false;
          break;
        }
      }
      if (disjoint) {
        ++lb;
        used.ors(s);
      }
    }
    return lb;
  }

  void dfs(const std::vector<int>& uncov, int depth) {
    if (uncov.empty()) {
      best = std::min(best, depth);
      return;
    }
    if (depth + 1 >= best) return;
    if (depth + greedy_disjoint_bound(uncov) >= best) return;
    int pick = uncov[0];
    for (int idx : uncov) {
      if (family[static_cast<size_t>(idx)].count() < family[static_cast<size_t>(pick)].count()) {
        pick = idx;
      }
    }
    for (int e : bits_elements(family[static_cast<size_t>(pick)], universe)) {
      std::vector<int> next;
      next.reserve(uncov.size());
      for (int idx : uncov) {
        if (!family[static_cast<size_t>(idx)].test(static_cast<size_t>(e))) next.push_back(idx);
      }
      dfs(next, depth + 1);
    }
  }
};

// Minimum hitting-set size, capped at cutoff+1.
int min_hitting_size(const std::vector<Bits>& family, int universe, int cutoff) {
  HittingSolver hs{family, universe, cutoff + 1};
  std::vector<int> uncov(family.size());
  std::iota(uncov.begin(), uncov.end(), 0);
  hs.dfs(uncov, 0);
  return hs.best;
}

// h(sa): minimum |S_B| such that (sa, S_B) is a bipartite KS pair, capped at
// cutoff+1; -1 encodes an admissibility certificate (no S_B works, ever).
int sa_min_hitting(const PoolData& pd, const std::vector<int>& sa, int cutoff,
                   std::vector<Bits>* family_out = nullptr) {
  std::vector<Bits> family;
  if (!collect_dead_family(pd, sa, 0, Bits(static_cast<size_t>(pd.ray_count)), family)) {
    return -1;
  }
  prune_to_antichain(family);
  if (family_out) *family_out = family;
  return min_hitting_size(family, pd.pool_size, cutoff);
}

// Lexicographically smallest k-subset of the pool hitting every family set.
// Padding is sound: supersets of hitting sets still hit.
bool find_hitting_lex(const std::vector<Bits>& family, int universe, int k, int start,
                      std::vector<int>& chosen, std::vector<int> uncov) {
  if (uncov.empty()) {
    if (universe - start < k) return false;
    for (int e = start; k > 0; ++e, --k) chosen.push_back(e);
    return true;
  }
  if (k == 0 || universe - start < k) return false;
  for (int e = start; e <= universe - k; ++e) {
    std::vector<int> next;
    next.reserve(uncov.size());
    for (int idx : uncov) {
      if (!family[static_cast<size_t>(idx)].test(static_cast<size_t>(e))) next.push_back(idx);
    }
    chosen.push_back(e);
    if (find_hitting_lex(family, universe, k - 1, e + 1, chosen, std::move(next))) return true;
    chosen.pop_back();
  }
  return false;
}

struct SweepData {
  int j = 0;
  int cutoff = 0;
  int h_min = 0;                              // capped at cutoff+1
  std::vector<std::vector<int>> first_sa_le;  // [h] = first S_A with h(S_A) <= h (1-based index h)
  unsigned long long subsets = 0;
  unsigned long long cert_prunes = 0;
};

struct SweepWorkerResult {
  int h_min;
  std::vector<std::vector<int>> first_sa_le;
  unsigned long long subsets = 0;
  unsigned long long cert_prunes = 0;
};

void sweep_range(const PoolData& pd, int j, int cutoff, std::atomic<int>& next_first,
                 SweepWorkerResult& out) {
  out.h_min = cutoff + 1;
  out.first_sa_le.assign(static_cast<size_t>(cutoff) + 1, {});
  std::vector<int> sa(static_cast<size_t>(j));
  while (true) {
    int first = next_first.fetch_add(1);
    if (first > pd.pool_size - j) break;
    sa[0] = first;
    // Odometer over the remaining j-1 positions, all > previous.
    for (int i = 1; i < j; ++i) sa[static_cast<size_t>(i)] = first + i;
    while (true) {
      ++out.subsets;
      int h = sa_min_hitting(pd, sa, cutoff);
      if (h < 0) {
        ++out.cert_prunes;
      } else {
        out.h_min = std::min(out.h_min, h);
        for (int hh = std::max(h, 1); hh <= cutoff; ++hh) {
          auto& slot = out.first_sa_le[static_cast<size_t>(hh)];
          if (slot.empty() || sa < slot) slot = sa;
        }
      }
      // Advance the tail (positions 1..j-1); position 0 is the stride task.
      int pos = j - 1;
      while (pos >= 1 && sa[static_cast<size_t>(pos)] == pd.pool_size - (j - pos)) --pos;
      if (pos < 1) break;
      ++sa[static_cast<size_t>(pos)];
      for (int q = pos + 1; q < j; ++q) sa[static_cast<size_t>(q)] = sa[static_cast<size_t>(q - 1)] + 1;
    }
  }
}

SweepData run_sweep(const PoolData& pd, int j, int cutoff, int workers) {
  SweepData sw;
  sw.j = j;
  sw.cutoff = cutoff;
  sw.h_min = cutoff + 1;
  sw.first_sa_le.assign(static_cast<size_t>(cutoff) + 1, {});
  if (j > pd.pool_size) return sw;

  int nworkers = std::max(1, workers);
  std::atomic<int> next_first{0};
  std::vector<SweepWorkerResult> results(static_cast<size_t>(nworkers));
  if (nworkers == 1) {
    sweep_range(pd, j, cutoff, next_first, results[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < nworkers; ++w) {
      threads.emplace_back(sweep_range, std::cref(pd), j, cutoff, std::ref(next_first),
                           std::ref(results[static_cast<size_t>(w)]));
    }
    for (auto& t : threads) t.join();
  }
  for (const SweepWorkerResult& r : results) {
    sw.h_min = std::min(sw.h_min, r.h_min);
    sw.subsets += r.subsets;
    sw.cert_prunes += r.cert_prunes;
    for (int h = 1; h <= cutoff; ++h) {
      const auto& cand = r.first_sa_le[static_cast<size_t>(h)];
      if (cand.empty()) continue;
      auto& slot = sw.first_sa_le[static_cast<size_t>(h)];
      if (slot.empty() || cand < slot) slot = cand;
    }
  }
  return sw;
}

uint64_t fnv1a(uint64_t h, const void* data, size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

uint64_t pool_signature(const RaySet& rs, const std::vector<Context>& pool) {
  uint64_t h = 1469598103934665603ULL;
  long dims[2] = {rs.dimension(), rs.radical()};
  h = fnv1a(h, dims, sizeof(dims));
  for (const Ray& r : rs.rays()) {
    for (Eigen::Index i = 0; i < r.entries().size(); ++i) {
      std::string s = to_string(r.entries()(i));
      h = fnv1a(h, s.data(), s.size());
    }
  }
  for (const Context& c : pool) {
    h = fnv1a(h, c.elements.data(), c.elements.size() * sizeof(int));
  }
  return h;
}

class Checkpoint {
 public:
  Checkpoint(std::string path, uint64_t signature) : path_(std::move(path)), sig_(signature) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) continue;
      if (j.value("signature", std::string()) != std::to_string(sig_)) continue;
      if (!j.contains("j") || !j.contains("cutoff")) continue;
      SweepData sw;
      sw.j = j["j"].get<int>();
      sw.cutoff = j["cutoff"].get<int>();
      sw.h_min = j["h_min"].get<int>();
      sw.subsets = j.value("subsets", 0ULL);
      sw.cert_prunes = j.value("certificate_prunes", 0ULL);
      sw.first_sa_le.assign(static_cast<size_t>(sw.cutoff) + 1, {});
      if (j.contains("first_sa_le")) {
        for (auto& [key, val] : j["first_sa_le"].items()) {
          int h = std::stoi(key);
          if (h >= 1 && h <= sw.cutoff) {
            sw.first_sa_le[static_cast<size_t>(h)] = val.get<std::vector<int>>();
          }
        }
      }
      stored_[sw.j] = std::move(sw);
    }
  }

  const SweepData* lookup(int j, int cutoff) const {
    auto it = stored_.find(j);
    if (it == stored_.end() || it->second.cutoff < cutoff) return nullptr;
    return &it->second;
  }

  void record(const SweepData& sw) {
    stored_[sw.j] = sw;
    if (path_.empty()) return;
    nlohmann::json j;
    j["signature"] = std::to_string(sig_);
    j["j"] = sw.j;
    j["cutoff"] = sw.cutoff;
    j["h_min"] = sw.h_min;
    j["subsets"] = sw.subsets;
    j["certificate_prunes"] = sw.cert_prunes;
    nlohmann::json firsts = nlohmann::json::object();
    for (int h = 1; h <= sw.cutoff; ++h) {
      if (!sw.first_sa_le[static_cast<size_t>(h)].empty()) {
        firsts[std::to_string(h)] = sw.first_sa_le[static_cast<size_t>(h)];
      }
    }
    j["first_sa_le"] = firsts;
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
  }

 private:
  std::string path_;
  uint64_t sig_;
  std::map<int, SweepData> stored_;
};

// Caps a stored sweep (computed at a larger cutoff) down to the needed one.
// Work counters are zeroed: a restored sweep costs no new enumeration.
SweepData cap_sweep(const SweepData& src, int cutoff) {
  SweepData sw;
  sw.j = src.j;
  sw.cutoff = cutoff;
  sw.h_min = std::min(src.h_min, cutoff + 1);
  sw.subsets = 0;
  sw.cert_prunes = 0;
  sw.first_sa_le.assign(static_cast<size_t>(cutoff) + 1, {});
  for (int h = 1; h <= cutoff && h <= src.cutoff; ++h) {
    sw.first_sa_le[static_cast<size_t>(h)] = src.first_sa_le[static_cast<size_t>(h)];
  }
  return sw;
}

}  // namespace

std::vector<Context> search_pool(const RaySet& rs, SearchOptions::Pool pool) {
  if (pool == SearchOptions::Pool::Declared) return rs.declared_contexts();
  OrthGraph g = build_graph(rs);
  return enumerate_bases(g, rs);
}

BksInstance bks_instance_for_pair(const RaySet& rs, const std::vector<Context>& pool,
                                  const std::vector<int>& s_a, const std::vector<int>& s_b) {
  BksInstance inst;
  const int n = rs.ray_count();
  inst.orth.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (inner(rs.ray(i).entries(), rs.ray(j).entries()).is_zero()) {
        inst.orth[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        inst.orth[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
      }
    }
  }
  for (int b : s_a) inst.alice_contexts.push_back(pool.at(static_cast<size_t>(b)).elements);
  for (int b : s_b) inst.bob_contexts.push_back(pool.at(static_cast<size_t>(b)).elements);
  return inst;
}

SearchResult minimal_bks_search(const RaySet& rs, const SearchOptions& opt) {
  if (opt.max_product < 1) throw ValidationError("max_product must be >= 1");
  SearchResult res;
  res.pool_bases = search_pool(rs, opt.pool);
  const int pool_size = static_cast<int>(res.pool_bases.size());
  if (pool_size == 0) throw ValidationError("candidate pool has no complete bases");

  PoolData pd = make_pool_data(rs, res.pool_bases);
  Checkpoint ckpt(opt.checkpoint_path, pool_signature(rs, res.pool_bases));
  std::map<int, SweepData> sweeps;

  auto sweep_for = [&](int j) -> const SweepData& {
    int cutoff = static_cast<int>(opt.max_product / j);
    auto it = sweeps.find(j);
    if (it != sweeps.end()) return it->second;
    if (const SweepData* stored = ckpt.lookup(j, cutoff)) {
      return sweeps.emplace(j, cap_sweep(*stored, cutoff)).first->second;
    }
    SweepData sw = run_sweep(pd, j, cutoff, opt.workers);
    ckpt.record(sw);
    return sweeps.emplace(j, std::move(sw)).first->second;
  };

  for (long product = 1; product <= opt.max_product; ++product) {
    // Shapes of this product: ascending |S_A|+|S_B|, then ascending |S_A|.
    std::vector<std::pair<long, long>> shapes;
    for (long j = 1; j * j <= product; ++j) {
      if (product % j == 0) {
        shapes.emplace_back(j, product / j);
        if (j != product / j) shapes.emplace_back(product / j, j);
      }
    }
    std::sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
      if (a.first + a.second != b.first + b.second) return a.first + a.second < b.first + b.second;
      return a.first < b.first;
    });
    for (const auto& [ja, kb] : shapes) {
      if (ja > pool_size || kb > pool_size) continue;
      int jc = static_cast<int>(std::min(ja, kb));
      int kc = static_cast<int>(std::max(ja, kb));
      const SweepData& sw = sweep_for(jc);
      if (sw.h_min > kc) continue;  // no bipartite KS pair of this shape

      const std::vector<int>& sa = sw.first_sa_le[static_cast<size_t>(kc)];
      if (sa.empty()) throw Error("internal: sweep bookkeeping lost its witness");
      std::vector<Bits> family;
      int h = sa_min_hitting(pd, sa, sw.cutoff, &family);
      if (h < 0 || h > kc) throw Error("internal: witness S_A no longer verifies");
      std::vector<int> sb;
      std::vector<int> uncov(family.size());
      std::iota(uncov.begin(), uncov.end(), 0);
      std::vector<int> chosen;
      if (!find_hitting_lex(family, pool_size, kc, 0, chosen, std::move(uncov))) {
        throw Error("internal: hitting set of certified size not found");
      }
      sb = chosen;

      res.s_a = sa;
      res.s_b = sb;
      if (ja > kb) std::swap(res.s_a, res.s_b);  // mirrored shape: swap sides back

      BksResult confirm =
          bks_admissible(bks_instance_for_pair(rs, res.pool_bases, res.s_a, res.s_b));
      ++res.solver_confirmations;
      if (confirm.verdict != BksVerdict::BKS) {
        throw Error("internal: certified pair failed fresh-solver confirmation");
      }
      res.found = true;
      res.product = product;
      res.sum = ja + kb;
      res.exhausted_below = product;
      for (const auto& entry : sweeps) {
        res.sa_subsets_examined += entry.second.subsets;
        res.certificate_prunes += entry.second.cert_prunes;
      }
      return res;
    }
  }

  res.found = false;
  res.exhausted_below = opt.max_product + 1;
  for (const auto& entry : sweeps) {
    res.sa_subsets_examined += entry.second.subsets;
    res.certificate_prunes += entry.second.cert_prunes;
  }
  return res;
}

CriticalityReport criticality_check(const Scenario& sc) {
  BksResult full = bks_admissible(sc);
  if (full.verdict != BksVerdict::BKS) {
    throw ValidationError("criticality check requires a scenario that is a bipartite KS set");
  }
  CriticalityReport report;
  const int na = sc.num_inputs_a();
  const int nb = sc.num_inputs_b();
  auto indices_without = [](int n, int skip) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != skip) keep.push_back(i);
    return keep;
  };
  std::vector<int> all_a = indices_without(na, -1), all_b = indices_without(nb, -1);
  for (int x = 0; x < na; ++x) {
    Scenario sub = subscenario(sc, indices_without(na, x), all_b);
    ++report.deletions_checked;
    if (bks_admissible(sub).verdict == BksVerdict::BKS) report.non_critical.emplace_back('A', x);
  }
  for (int y = 0; y < nb; ++y) {
    Scenario sub = subscenario(sc, all_a, indices_without(nb, y));
    ++report.deletions_checked;
    if (bks_admissible(sub).verdict == BksVerdict::BKS) report.non_critical.emplace_back('B', y);
  }
  return report;
}

std::vector<CandidatePair> symmetry_filter(const RaySet& rs, const std::vector<Context>& pool,
                                           const std::vector<CandidatePair>& pairs,
                                           const std::vector<std::vector<int>>& ray_permutations,
                                           bool include_party_swap) {
  const int n = rs.ray_count();
  OrthGraph g = build_graph(rs);
  for (const auto& perm : ray_permutations) {
    if (static_cast<int>(perm.size()) != n) {
      throw ValidationError("permutation size does not match the ray count");
    }
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int img : perm) {
      if (img < 0 || img >= n || seen[static_cast<size_t>(img)]) {
        throw ValidationError("permutation is not a bijection on the rays");
      }
      seen[static_cast<size_t>(img)] = true;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(i, j) !=
            g.adjacent(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)])) {
          throw ValidationError("permutation does not preserve orthogonality");
        }
      }
    }
  }

  // Permutations act on pool bases by mapping ray sets.
  std::map<std::vector<int>, int> base_index;
  for (size_t b = 0; b < pool.size(); ++b) {
    std::vector<int> key = pool[b].elements;
    std::sort(key.begin(), key.end());
    base_index[key] = static_cast<int>(b);
  }
  std::vector<std::vector<int>> base_maps;
  for (const auto& perm : ray_permutations) {
    std::vector<int> bm(pool.size());
    for (size_t b = 0; b < pool.size(); ++b) {
      std::vector<int> img;
      for (int e : pool[b].elements) img.push_back(perm[static_cast<size_t>(e)]);
      std::sort(img.begin(), img.end());
      auto it = base_index.find(img);
      if (it == base_index.end()) {
        throw ValidationError("permutation does not stabilize the candidate pool");
      }
      bm[b] = it->second;
    }
    base_maps.push_back(std::move(bm));
  }

  auto normalize = [](CandidatePair p) {
    std::sort(p.first.begin(), p.first.end());
    std::sort(p.second.begin(), p.second.end());
    return p;
  };
  auto apply = [](const CandidatePair& p, const std::vector<int>& bm) {
    CandidatePair q;
    for (int b : p.first) q.first.push_back(bm[static_cast<size_t>(b)]);
    for (int b : p.second) q.second.push_back(bm[static_cast<size_t>(b)]);
    std::sort(q.first.begin(), q.first.end());
    std::sort(q.second.begin(), q.second.end());
    return q;
  };

  std::vector<CandidatePair> kept;
  for (const CandidatePair& original : pairs) {
    CandidatePair start = normalize(original);
    // Orbit closure under the supplied generators (and the optional swap).
    std::set<CandidatePair> orbit{start};
    std::vector<CandidatePair> frontier{start};
    while (!frontier.empty()) {
      std::vector<CandidatePair> next;
      for (const CandidatePair& p : frontier) {
        std::vector<CandidatePair> images;
        for (const auto& bm : base_maps) images.push_back(apply(p, bm));
        if (include_party_swap) images.emplace_back(p.second, p.first);
        for (CandidatePair& q : images) {
          if (orbit.insert(q).second) next.push_back(q);
        }
      }
      frontier = std::move(next);
    }
    if (*orbit.begin() == start) kept.push_back(original);
  }
  return kept;
}

}  // namespace ksg
