#include "ksg/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace ksg {

ColoringInstance coloring_instance(const RaySet& rs) {
  OrthGraph g = build_graph(rs);
  ColoringInstance inst;
  inst.vertex_count = g.vertex_count;
  inst.orth.assign(static_cast<size_t>(g.vertex_count), {});
  for (const auto& [i, j] : g.edges) {
    inst.orth[static_cast<size_t>(i)].push_back(j);
    inst.orth[static_cast<size_t>(j)].push_back(i);
  }
  for (auto& nbrs : inst.orth) std::sort(nbrs.begin(), nbrs.end());
  for (const auto& c : enumerate_cliques_of_size(g, g.dimension)) inst.bases.push_back(c);
  return inst;
}

namespace {

// Orthogonal cliques with trace sum d and exact matrix sum identity.
void complete_subsets(const std::vector<Projector>& ps, const std::vector<std::vector<bool>>& orth,
                      int dim, std::vector<int>& current, int trace_sum, int next,
                      std::vector<std::vector<int>>& out) {
  if (trace_sum == dim) {
    Mat sum = Mat::Zero(dim, dim);
    for (int v : current) sum += ps[static_cast<size_t>(v)].matrix();
    if (is_identity(sum)) out.push_back(current);
    return;
  }
  for (int v = next; v < static_cast<int>(ps.size()); ++v) {
    if (trace_sum + ps[static_cast<size_t>(v)].rank() > dim) continue;
    bool ok = true;
    for (int u : current) {
      if (!orth[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(v);
    complete_subsets(ps, orth, dim, current, trace_sum + ps[static_cast<size_t>(v)].rank(), v + 1,
                     out);
    current.pop_back();
  }
}

}  // namespace

ColoringInstance coloring_instance(const std::vector<Projector>& projectors) {
  const int n = static_cast<int>(projectors.size());
  if (n == 0) throw ValidationError("empty projector set");
  const int dim = projectors[0].dim();
  for (const Projector& p : projectors) {
    if (p.dim() != dim) throw DimensionMismatch("projector set with mixed dimensions");
  }
  std::vector<std::vector<bool>> orth(static_cast<size_t>(n),
                                      std::vector<bool>(static_cast<size_t>(n), false));
  ColoringInstance inst;
  inst.vertex_count = n;
  inst.orth.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mat prod = projectors[static_cast<size_t>(i)].matrix() * projectors[static_cast<size_t>(j)].matrix();
      if (is_zero(prod)) {
        orth[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        orth[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
        inst.orth[static_cast<size_t>(i)].push_back(j);
        inst.orth[static_cast<size_t>(j)].push_back(i);
      }
    }
  }
  std::vector<int> current;
  complete_subsets(projectors, orth, dim, current, 0, 0, inst.bases);
  return inst;
}

namespace {

constexpr uint8_t kUnset = 2;

class KSSolver {
 public:
  explicit KSSolver(const ColoringInstance& inst) : inst_(inst) {
    const size_t n = static_cast<size_t>(inst.vertex_count);
    value_.assign(n, kUnset);
    basis_of_vertex_.assign(n, {});
    for (size_t b = 0; b < inst.bases.size(); ++b) {
      for (int v : inst.bases[b]) basis_of_vertex_[static_cast<size_t>(v)].push_back(b);
    }
    basis_zeros_.assign(inst.bases.size(), 0);
    basis_ones_.assign(inst.bases.size(), 0);
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      size_t da = inst.orth[static_cast<size_t>(a)].size();
      size_t db = inst.orth[static_cast<size_t>(b)].size();
      if (da != db) return da > db;
      return a < b;
    });
  }

  KSResult solve() {
    KSResult res;
    if (inst_.bases.empty()) {
      res.verdict = KSVerdict::VacuousColorable;
      res.witness = KSAssignment{std::vector<uint8_t>(static_cast<size_t>(inst_.vertex_count), 0)};
      res.stats = stats_;
      return res;
    }
    if (dfs(0)) {
      res.verdict = KSVerdict::Colorable;
      res.witness = KSAssignment{value_};
      res.stats = stats_;
      return res;
    }
    res.verdict = KSVerdict::KS;
    res.stats = stats_;
    return res;
  }

 private:
  const ColoringInstance& inst_;
  std::vector<uint8_t> value_;
  std::vector<std::vector<size_t>> basis_of_vertex_;
  std::vector<int> basis_zeros_, basis_ones_;
  std::vector<int> order_;
  std::vector<int> trail_;
  SolveStats stats_;

  bool assign(int v, uint8_t val) {
    if (value_[static_cast<size_t>(v)] != kUnset) return value_[static_cast<size_t>(v)] == val;
    value_[static_cast<size_t>(v)] = val;
    trail_.push_back(v);
    ++stats_.propagations;
    for (size_t b : basis_of_vertex_[static_cast<size_t>(v)]) {
      (val ? basis_ones_ : basis_zeros_)[b] += 1;
    }
    if (val == 1) {
      // Condition (i): orthogonal partners of a 1 must be 0.
      for (int u : inst_.orth[static_cast<size_t>(v)]) {
        if (!assign(u, 0)) return false;
      }
    }
    for (size_t b : basis_of_vertex_[static_cast<size_t>(v)]) {
      int size = static_cast<int>(inst_.bases[b].size());
      if (basis_ones_[static_cast<size_t>(b)] > 1) return false;
      if (basis_zeros_[static_cast<size_t>(b)] == size) return false;  // condition (ii) violated
      if (basis_zeros_[static_cast<size_t>(b)] == size - 1 &&
          basis_ones_[static_cast<size_t>(b)] == 0) {
        // All but one vertex at 0: the remaining one is forced to 1.
        for (int u : inst_.bases[b]) {
          if (value_[static_cast<size_t>(u)] == kUnset) {
            if (!assign(u, 1)) return false;
            break;
          }
        }
      }
    }
    return true;
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      uint8_t val = value_[static_cast<size_t>(v)];
      for (size_t b : basis_of_vertex_[static_cast<size_t>(v)]) {
        (val ? basis_ones_ : basis_zeros_)[b] -= 1;
      }
      value_[static_cast<size_t>(v)] = kUnset;
    }
  }

  bool dfs(size_t order_pos) {
    while (order_pos < order_.size() &&
           value_[static_cast<size_t>(order_[order_pos])] != kUnset) {
      ++order_pos;
    }
    if (order_pos == order_.size()) return true;  // total and conflict-free
    int v = order_[order_pos];
    ++stats_.nodes;
    for (uint8_t val : {uint8_t{1}, uint8_t{0}}) {
      size_t mark = trail_.size();
      if (assign(v, val) && dfs(order_pos + 1)) return true;
      undo_to(mark);
    }
    return false;
  }
};

}  // namespace

KSResult ks_colorable(const ColoringInstance& inst) {
  KSResult res = KSSolver(inst).solve();
  if (res.verdict == KSVerdict::Colorable && !verify_ks_assignment(inst, *res.witness)) {
    throw Error("internal: solver produced an invalid witness");
  }
  return res;
}

KSResult ks_colorable(const RaySet& rs) { return ks_colorable(coloring_instance(rs)); }

bool verify_ks_assignment(const ColoringInstance& inst, const KSAssignment& a) {
  if (static_cast<int>(a.value.size()) != inst.vertex_count) {
    throw std::invalid_argument("assignment must be total over the vertex set");
  }
  for (uint8_t v : a.value) {
    if (v != 0 && v != 1) throw std::invalid_argument("assignment values must be 0 or 1");
  }
  for (int v = 0; v < inst.vertex_count; ++v) {
    if (!a.value[static_cast<size_t>(v)]) continue;
    for (int u : inst.orth[static_cast<size_t>(v)]) {
      if (u > v && a.value[static_cast<size_t>(u)]) return false;  // condition (i)
    }
  }
  for (const auto& basis : inst.bases) {
    int ones = 0;
    for (int v : basis) ones += a.value[static_cast<size_t>(v)];
    if (ones != 1) return false;  // condition (ii)
  }
  return true;
}

bool verify_ks_assignment(const RaySet& rs, const KSAssignment& a) {
  return verify_ks_assignment(coloring_instance(rs), a);
}

}  // namespace ksg
