#include "ksg/orthograph.hpp"

#include <algorithm>
#include <sstream>

namespace ksg {

int OrthGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < vertex_count; ++u)
    if (u != v && adjacent(v, u)) ++d;
  return d;
}

OrthGraph build_graph(const RaySet& rs) {
  OrthGraph g;
  g.dimension = rs.dimension();
  g.vertex_count = rs.ray_count();
  g.adj.assign(static_cast<size_t>(g.vertex_count),
               std::vector<bool>(static_cast<size_t>(g.vertex_count), false));
  for (int i = 0; i < g.vertex_count; ++i) {
    for (int j = i + 1; j < g.vertex_count; ++j) {
      if (inner(rs.ray(i).entries(), rs.ray(j).entries()).is_zero()) {
        g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
        g.adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
        g.edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

namespace {

void extend_clique(const OrthGraph& g, std::vector<int>& current,
                   const std::vector<int>& candidates, int target,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == target) {
    out.push_back(current);
    return;
  }
  int need = target - static_cast<int>(current.size());
  for (size_t idx = 0; idx + static_cast<size_t>(need) <= candidates.size(); ++idx) {
    int v = candidates[idx];
    std::vector<int> next;
    for (size_t k = idx + 1; k < candidates.size(); ++k) {
      if (g.adjacent(v, candidates[k])) next.push_back(candidates[k]);
    }
    current.push_back(v);
    extend_clique(g, current, next, target, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_cliques_of_size(const OrthGraph& g, int size) {
  std::vector<std::vector<int>> out;
  if (size <= 0) return out;
  std::vector<int> all(static_cast<size_t>(g.vertex_count));
  for (int v = 0; v < g.vertex_count; ++v) all[static_cast<size_t>(v)] = v;
  std::vector<int> current;
  extend_clique(g, current, all, size, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Context> enumerate_bases(const OrthGraph& g, const RaySet& rs) {
  std::vector<Context> out;
  auto cliques = enumerate_cliques_of_size(g, g.dimension);
  int counter = 0;
  for (const auto& c : cliques) {
    Mat sum = Mat::Zero(g.dimension, g.dimension);
    for (int v : c) sum += rs.projector(v).matrix();
    if (!is_identity(sum)) {
      throw ValidationError("enumerated orthogonal d-set does not sum to the identity");
    }
    out.push_back(Context{"b" + std::to_string(counter++), c});
  }
  return out;
}

namespace {

void bron_kerbosch(const OrthGraph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of P union X with most neighbours in P.
  int pivot = -1, best = -1;
  for (const auto& pool : {p, x}) {
    for (int u : pool) {
      int cnt = 0;
      for (int v : p)
        if (g.adjacent(u, v)) ++cnt;
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  std::vector<int> branch;
  for (int v : p)
    if (pivot < 0 || !g.adjacent(pivot, v)) branch.push_back(v);
  for (int v : branch) {
    std::vector<int> p2, x2;
    for (int u : p)
      if (g.adjacent(v, u)) p2.push_back(u);
    for (int u : x)
      if (g.adjacent(v, u)) x2.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const OrthGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> r, p(static_cast<size_t>(g.vertex_count)), x;
  for (int v = 0; v < g.vertex_count; ++v) p[static_cast<size_t>(v)] = v;
  bron_kerbosch(g, r, std::move(p), std::move(x), out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> incomplete_maximal_cliques(const OrthGraph& g) {
  std::vector<std::vector<int>> out;
  for (auto& c : maximal_cliques(g)) {
    if (static_cast<int>(c.size()) < g.dimension) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Party> party_split(const RaySet& pooled, const Scenario& sc) {
  std::vector<Party> split(static_cast<size_t>(pooled.ray_count()), Party::None);
  auto mark = [&](const RaySet& side, Party who) {
    for (const Context& ctx : side.declared_contexts()) {
      for (int e : ctx.elements) {
        int idx = pooled.find(side.ray(e));
        if (idx < 0) throw ValidationError("scenario ray missing from pooled catalog");
        Party& p = split[static_cast<size_t>(idx)];
        if (p == Party::None) {
          p = who;
        } else if (p != who) {
          p = Party::Shared;
        }
      }
    }
  };
  mark(sc.alice, Party::Alice);
  mark(sc.bob, Party::Bob);
  return split;
}

namespace {

const char* party_color(Party p) {
  switch (p) {
    case Party::Alice:
      return "red";
    case Party::Bob:
      return "blue";
    case Party::Shared:
      return "violet";
    default:
      return "gray";
  }
}

std::string ray_label(const RaySet& rs, int v) {
  std::string label = "(";
  const Vec& e = rs.ray(v).entries();
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    if (i) label += ",";
    label += to_string(e(i));
  }
  return label + ")";
}

}  // namespace

std::string export_dot(const OrthGraph& g, const RaySet& rs, const std::vector<Party>* split) {
  std::ostringstream os;
  os << "graph orthogonality {\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    os << "  v" << v << " [label=\"" << ray_label(rs, v) << "\"";
    if (split) {
      os << ", color=" << party_color((*split)[static_cast<size_t>(v)]) << ", style=bold";
    }
    os << "];\n";
  }
  for (const auto& [i, j] : g.edges) os << "  v" << i << " -- v" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_adjacency_json(const OrthGraph& g, const RaySet& rs) {
  std::ostringstream os;
  os << "{\n  \"dimension\": " << g.dimension << ",\n  \"vertices\": [";
  for (int v = 0; v < g.vertex_count; ++v) {
    if (v) os << ", ";
    os << "\"" << ray_label(rs, v) << "\"";
  }
  os << "],\n  \"edges\": [";
  for (size_t k = 0; k < g.edges.size(); ++k) {
    if (k) os << ", ";
    os << "[" << g.edges[k].first << ", " << g.edges[k].second << "]";
  }
  os << "]\n}\n";
  return os.str();
}

}  // namespace ksg
