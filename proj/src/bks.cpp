#include "ksg/bks.hpp"

#include <algorithm>

namespace ksg {

BksInstance bks_instance(const Scenario& sc) {
  if (sc.dim_a() != sc.dim_b()) {
    throw DimensionMismatch("bipartite KS check requires equal local dimensions");
  }
  RaySet pooled = pooled_rayset(sc);
  BksInstance inst;
  const int n = pooled.ray_count();
  inst.orth.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (inner(pooled.ray(i).entries(), pooled.ray(j).entries()).is_zero()) {
        inst.orth[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        inst.orth[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
      }
    }
  }
  auto remap = [&](const RaySet& side, std::vector<std::vector<int>>& out) {
    for (const Context& ctx : side.declared_contexts()) {
      std::vector<int> ids;
      for (int e : ctx.elements) ids.push_back(pooled.find(side.ray(e)));
      out.push_back(std::move(ids));
    }
  };
  remap(sc.alice, inst.alice_contexts);
  remap(sc.bob, inst.bob_contexts);
  return inst;
}

BksInstance bks_instance(const std::vector<std::vector<Projector>>& s_a,
                         const std::vector<std::vector<Projector>>& s_b) {
  std::vector<Projector> table;
  auto intern = [&](const Projector& p) {
    for (size_t i = 0; i < table.size(); ++i) {
      if (table[i] == p) return static_cast<int>(i);
    }
    table.push_back(p);
    return static_cast<int>(table.size() - 1);
  };
  BksInstance inst;
  for (const auto& ctx : s_a) {
    std::vector<int> ids;
    for (const Projector& p : ctx) ids.push_back(intern(p));
    inst.alice_contexts.push_back(std::move(ids));
  }
  for (const auto& ctx : s_b) {
    std::vector<int> ids;
    for (const Projector& p : ctx) ids.push_back(intern(p));
    inst.bob_contexts.push_back(std::move(ids));
  }
  const int n = static_cast<int>(table.size());
  inst.orth.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (is_zero(Mat(table[static_cast<size_t>(i)].matrix() *
                      table[static_cast<size_t>(j)].matrix()))) {
        inst.orth[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        inst.orth[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
      }
    }
  }
  return inst;
}

namespace {

class BksSolver {
 public:
  explicit BksSolver(const BksInstance& inst) : inst_(inst) {
    na_ = static_cast<int>(inst.alice_contexts.size());
    nb_ = static_cast<int>(inst.bob_contexts.size());
    const int total = na_ + nb_;
    domains_.resize(static_cast<size_t>(total));
    for (int c = 0; c < total; ++c) {
      domains_[static_cast<size_t>(c)].assign(context(c).size(), true);
    }
    chosen_.assign(static_cast<size_t>(total), -1);
  }

  BksResult solve() {
    BksResult res;
    if (na_ == 0 || nb_ == 0) {
      res.verdict = BksVerdict::VacuousAdmissible;
      LocalStrategy s;
      s.alice_choice.assign(static_cast<size_t>(na_), 0);
      s.bob_choice.assign(static_cast<size_t>(nb_), 0);
      res.witness = s;
      res.stats = stats_;
      return res;
    }
    if (dfs()) {
      LocalStrategy s;
      for (int c = 0; c < na_; ++c) s.alice_choice.push_back(chosen_[static_cast<size_t>(c)]);
      for (int c = 0; c < nb_; ++c) s.bob_choice.push_back(chosen_[static_cast<size_t>(na_ + c)]);
      res.verdict = BksVerdict::Admissible;
      res.witness = std::move(s);
      res.stats = stats_;
      return res;
    }
    res.verdict = BksVerdict::BKS;
    res.stats = stats_;
    return res;
  }

 private:
  const BksInstance& inst_;
  int na_ = 0, nb_ = 0;
  std::vector<std::vector<bool>> domains_;  // per context, per position
  std::vector<int> chosen_;
  SolveStats stats_;

  const std::vector<int>& context(int c) const {
    return c < na_ ? inst_.alice_contexts[static_cast<size_t>(c)]
                   : inst_.bob_contexts[static_cast<size_t>(c - na_)];
  }
  bool is_alice(int c) const { return c < na_; }

  int domain_size(int c) const {
    int n = 0;
    for (bool alive : domains_[static_cast<size_t>(c)]) n += alive;
    return n;
  }

  // Fail-first: smallest live domain, ties Alice side first, then index.
  int pick_variable() const {
    int best = -1, best_size = 0;
    const int total = na_ + nb_;
    for (int c = 0; c < total; ++c) {
      if (chosen_[static_cast<size_t>(c)] >= 0) continue;
      int size = domain_size(c);
      if (best < 0 || size < best_size) {
        best = c;
        best_size = size;
      }
    }
    return best;
  }

  bool dfs() {
    int var = pick_variable();
    if (var < 0) return true;
    ++stats_.nodes;
    const auto& ctx = context(var);
    for (int pos = 0; pos < static_cast<int>(ctx.size()); ++pos) {
      if (!domains_[static_cast<size_t>(var)][static_cast<size_t>(pos)]) continue;
      std::vector<std::pair<int, int>> pruned;
      if (forward_check(var, pos, pruned)) {
        chosen_[static_cast<size_t>(var)] = pos;
        if (dfs()) return true;
        chosen_[static_cast<size_t>(var)] = -1;
      }
      for (const auto& [c, p] : pruned) {
        domains_[static_cast<size_t>(c)][static_cast<size_t>(p)] = true;
      }
    }
    return false;
  }

  // Prunes cross-party positions orthogonal to the picked element; fails on a
  // domain wipe-out.
  bool forward_check(int var, int pos, std::vector<std::pair<int, int>>& pruned) {
    int elem = context(var)[static_cast<size_t>(pos)];
    int begin = is_alice(var) ? na_ : 0;
    int end = is_alice(var) ? na_ + nb_ : na_;
    for (int c = begin; c < end; ++c) {
      if (chosen_[static_cast<size_t>(c)] >= 0) continue;
      const auto& ctx = context(c);
      int live = 0;
      for (int p = 0; p < static_cast<int>(ctx.size()); ++p) {
        if (!domains_[static_cast<size_t>(c)][static_cast<size_t>(p)]) continue;
        if (inst_.orth[static_cast<size_t>(elem)][static_cast<size_t>(ctx[static_cast<size_t>(p)])]) {
          domains_[static_cast<size_t>(c)][static_cast<size_t>(p)] = false;
          ++stats_.propagations;
          pruned.emplace_back(c, p);
        } else {
          ++live;
        }
      }
      if (live == 0) return false;
    }
    return true;
  }
};

}  // namespace

BksResult bks_admissible(const BksInstance& inst) {
  BksResult res = BksSolver(inst).solve();
  if (res.verdict == BksVerdict::Admissible && !verify_local_strategy(inst, *res.witness)) {
    throw Error("internal: solver produced an invalid witness");
  }
  return res;
}

BksResult bks_admissible(const Scenario& sc) { return bks_admissible(bks_instance(sc)); }

bool verify_local_strategy(const BksInstance& inst, const LocalStrategy& s) {
  if (s.alice_choice.size() != inst.alice_contexts.size() ||
      s.bob_choice.size() != inst.bob_contexts.size()) {
    throw std::invalid_argument("strategy must choose in every context");
  }
  auto element = [](const std::vector<std::vector<int>>& ctxs, const std::vector<int>& choice,
                    size_t i) {
    int pos = choice[i];
    const auto& ctx = ctxs[i];
    if (pos < 0 || pos >= static_cast<int>(ctx.size())) {
      throw std::invalid_argument("strategy choice out of range");
    }
    return ctx[static_cast<size_t>(pos)];
  };
  for (size_t i = 0; i < inst.alice_contexts.size(); ++i) {
    int u = element(inst.alice_contexts, s.alice_choice, i);
    for (size_t j = 0; j < inst.bob_contexts.size(); ++j) {
      int v = element(inst.bob_contexts, s.bob_choice, j);
      if (inst.orth[static_cast<size_t>(u)][static_cast<size_t>(v)]) return false;
    }
  }
  return true;
}

}  // namespace ksg
