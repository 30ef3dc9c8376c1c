#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ksg/bks.hpp"
#include "ksg/catalog.hpp"
#include "ksg/coloring.hpp"
#include "ksg/correlations.hpp"
#include "ksg/games.hpp"
#include "ksg/orthograph.hpp"
#include "ksg/search.hpp"

namespace {

using nlohmann::json;
using namespace ksg;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_scenario_path(const std::string& path) {
  return path.size() >= 9 && path.substr(path.size() - 9) == ".scenario";
}

// Builtin name, .rays file or .scenario file.
Builtin load_input(const std::string& input) {
  if (is_builtin(input)) return builtin(input);
  std::string text = read_file(input);
  try {
    if (looks_like_scenario_path(input)) return parse_scenario(text);
    return parse_rayset(text);
  } catch (const ParseError& e) {
    throw UsageError(input + ": " + e.what());
  }
}

RaySet load_rayset(const std::string& input) {
  Builtin b = load_input(input);
  if (RaySet* rs = std::get_if<RaySet>(&b)) return std::move(*rs);
  // A scenario verifies through its pooled catalog.
  return pooled_rayset(std::get<Scenario>(b));
}

Scenario load_scenario(const std::string& input) {
  Builtin b = load_input(input);
  if (Scenario* sc = std::get_if<Scenario>(&b)) return std::move(*sc);
  throw UsageError("'" + input + "' is not a scenario");
}

void emit(const json& j, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(output_path);
    out << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    out << text;
  }
}

json ray_labels(const RaySet& rs) {
  json arr = json::array();
  for (int i = 0; i < rs.ray_count(); ++i) {
    std::string label;
    for (Eigen::Index k = 0; k < rs.ray(i).entries().size(); ++k) {
      if (k) label += ",";
      label += to_string(rs.ray(i).entries()(k));
    }
    arr.push_back("(" + label + ")");
  }
  return arr;
}

json stats_json(const SolveStats& stats) {
  return json{{"nodes", stats.nodes}, {"propagations", stats.propagations}};
}

int cmd_catalog_list() {
  json out;
  out["builtins"] = json::array();
  for (const std::string& name : builtin_names()) {
    Builtin b = builtin(name);
    json item;
    item["name"] = name;
    if (const RaySet* rs = std::get_if<RaySet>(&b)) {
      item["kind"] = "rayset";
      item["dimension"] = rs->dimension();
      item["radical"] = rs->radical();
      item["rays"] = rs->ray_count();
      item["contexts"] = rs->declared_contexts().size();
    } else {
      const Scenario& sc = std::get<Scenario>(b);
      item["kind"] = "scenario";
      item["dimension_a"] = sc.dim_a();
      item["dimension_b"] = sc.dim_b();
      item["radical"] = sc.radical();
      item["inputs_a"] = sc.num_inputs_a();
      item["inputs_b"] = sc.num_inputs_b();
      item["outcomes_a"] = sc.num_outcomes_a();
      item["outcomes_b"] = sc.num_outcomes_b();
      item["pooled_rays"] = pooled_distinct_ray_count(sc);
    }
    out["builtins"].push_back(item);
  }
  emit(out, "");
  return kExitOk;
}

int cmd_verify_ks(const std::string& input, const std::string& output) {
  RaySet rs = load_rayset(input);
  KSResult r = ks_colorable(rs);
  json out;
  out["input"] = input;
  out["rays"] = rs.ray_count();
  out["verdict"] = r.verdict == KSVerdict::KS ? "KS" : "colorable";
  if (r.verdict == KSVerdict::VacuousColorable) out["vacuous"] = true;
  if (r.witness) {
    json w = json::array();
    for (uint8_t v : r.witness->value) w.push_back(static_cast<int>(v));
    out["witness"] = w;
    out["witness_rays"] = ray_labels(rs);
  }
  out["stats"] = stats_json(r.stats);
  emit(out, output);
  return kExitOk;
}

int cmd_verify_bks(const std::string& input, const std::string& output, bool criticality) {
  Scenario sc = load_scenario(input);
  BksResult r = bks_admissible(sc);
  json out;
  out["input"] = input;
  out["inputs_a"] = sc.num_inputs_a();
  out["inputs_b"] = sc.num_inputs_b();
  out["verdict"] = r.verdict == BksVerdict::BKS ? "B-KS" : "admissible";
  if (r.verdict == BksVerdict::VacuousAdmissible) out["vacuous"] = true;
  if (r.witness) {
    out["witness"] = json{{"alice", r.witness->alice_choice}, {"bob", r.witness->bob_choice}};
  }
  out["stats"] = stats_json(r.stats);
  if (criticality) {
    CriticalityReport report = criticality_check(sc);
    json nc = json::array();
    for (const auto& [side, idx] : report.non_critical) {
      nc.push_back(json{{"side", std::string(1, side)}, {"context", idx}});
    }
    out["criticality"] = json{{"deletions_checked", report.deletions_checked},
                              {"all_critical", report.all_critical()},
                              {"non_critical", nc}};
  }
  emit(out, output);
  return kExitOk;
}

int cmd_correlation(const std::string& input, const std::string& output, bool pretty) {
  Scenario sc = load_scenario(input);
  CorrelationTable t = correlation(sc);
  json out;
  out["input"] = input;
  out["sizes"] = json{{"x", t.nx}, {"y", t.ny}, {"a", t.na}, {"b", t.nb}};
  json table = json::array();
  for (int x = 0; x < t.nx; ++x) {
    json jx = json::array();
    for (int y = 0; y < t.ny; ++y) {
      json jy = json::array();
      for (int a = 0; a < t.na; ++a) {
        json ja = json::array();
        for (int b = 0; b < t.nb; ++b) ja.push_back(to_string(t.at(x, y, a, b)));
        jy.push_back(ja);
      }
      jx.push_back(jy);
    }
    table.push_back(jx);
  }
  out["table"] = table;
  out["zeros"] = zeros(t).size();
  out["no_signaling"] = check_nosignaling(t);
  if (pretty) {
    json approx = json::array();
    for (int x = 0; x < t.nx; ++x) {
      json jx = json::array();
      for (int y = 0; y < t.ny; ++y) {
        json jy = json::array();
        for (int a = 0; a < t.na; ++a) {
          json ja = json::array();
          for (int b = 0; b < t.nb; ++b) ja.push_back(t.at(x, y, a, b).approx());
          jy.push_back(ja);
        }
        jx.push_back(jy);
      }
      approx.push_back(jx);
    }
    out["table_approx_informational"] = approx;
  }
  emit(out, output);
  return kExitOk;
}

int cmd_construct_bks(const std::string& input, const std::string& output) {
  Scenario sc = load_scenario(input);
  ConstructedContexts cc = theorem1_construct(sc);
  Scenario constructed = constructed_to_scenario(cc, sc);
  emit_text(serialize_scenario(constructed), output);
  return kExitOk;
}

// Lines "x y p/q"; pairs not listed get weight 0. The result must sum to 1.
void apply_pi_file(Game& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::fill(g.input_dist.begin(), g.input_dist.end(), Rational(0));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream is(line);
    int x, y;
    std::string weight;
    if (!(is >> x)) continue;
    if (!(is >> y >> weight)) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'x y p/q'");
    }
    if (x < 0 || x >= g.nx || y < 0 || y >= g.ny) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": input pair out of range");
    }
    QuadExt q = parse_scalar(weight, 0);
    g.input_dist[static_cast<size_t>(x * g.ny + y)] = q.rational_part();
  }
}

// Lines "x y a b 0|1" override the zeros-derived predicate entrywise.
void apply_win_file(Game& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream is(line);
    int x, y, a, b, w;
    if (!(is >> x)) continue;
    if (!(is >> y >> a >> b >> w) || (w != 0 && w != 1)) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'x y a b 0|1'");
    }
    if (x < 0 || x >= g.nx || y < 0 || y >= g.ny || a < 0 || a >= g.na || b < 0 || b >= g.nb) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": indices out of range");
    }
    g.win[static_cast<size_t>(((x * g.ny + y) * g.na + a) * g.nb + b)] =
        static_cast<uint8_t>(w);
  }
}

int cmd_game_value(const std::string& input, const std::string& output,
                   unsigned long long guard, bool pretty, const std::string& pi_file,
                   const std::string& win_file) {
  Scenario sc = load_scenario(input);
  CorrelationTable t = correlation(sc);
  Game g = game_from_zeros(t);
  if (!pi_file.empty()) apply_pi_file(g, pi_file);
  if (!win_file.empty()) apply_win_file(g, win_file);
  try {
    g.validate();
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  // The BPQS verdict is always against the canonical zeros game with uniform
  // inputs; omega_c/omega_q report the (possibly overridden) game.
  ClassicalValueResult cv = classical_value(g, guard);
  BpqsReport rep = is_bpqs(t, guard);
  QuadExt omega_q = quantum_value(t, g);
  json out;
  out["input"] = input;
  out["omega_c"] = cv.value.get_str();
  out["omega_q"] = to_string(omega_q);
  out["bpqs"] = rep.bpqs;
  out["strategy"] = json{{"alice", cv.strategy.alice}, {"bob", cv.strategy.bob}};
  if (rep.violated_zero) {
    out["violated_zero"] = json{{"x", (*rep.violated_zero)[0]},
                                {"y", (*rep.violated_zero)[1]},
                                {"a", (*rep.violated_zero)[2]},
                                {"b", (*rep.violated_zero)[3]}};
  }
  if (pretty) {
    out["omega_c_approx_informational"] = cv.value.get_d();
    out["omega_q_approx_informational"] = omega_q.approx();
  }
  emit(out, output);
  return kExitOk;
}

int cmd_search_bks(const std::string& input, const std::string& output, long max_product,
                   const std::string& pool, int workers, const std::string& checkpoint) {
  RaySet rs = load_rayset(input);
  SearchOptions opt;
  opt.max_product = max_product;
  if (pool == "declared") {
    opt.pool = SearchOptions::Pool::Declared;
  } else if (pool == "all") {
    opt.pool = SearchOptions::Pool::All;
  } else {
    throw UsageError("--pool must be 'declared' or 'all'");
  }
  opt.workers = workers;
  opt.checkpoint_path = checkpoint;
  SearchResult r = minimal_bks_search(rs, opt);
  json out;
  out["input"] = input;
  out["pool"] = pool;
  out["pool_size"] = r.pool_bases.size();
  out["found"] = r.found;
  out["exhausted_below"] = r.exhausted_below;
  out["stats"] = json{{"sa_subsets_examined", r.sa_subsets_examined},
                      {"certificate_prunes", r.certificate_prunes},
                      {"solver_confirmations", r.solver_confirmations}};
  if (r.found) {
    out["product"] = r.product;
    out["sum"] = r.sum;
    out["s_a"] = r.s_a;
    out["s_b"] = r.s_b;
    json bases = json::array();
    for (const Context& c : r.pool_bases) bases.push_back(c.elements);
    out["pool_bases"] = bases;
  }
  emit(out, output);
  if (!r.found) {
    json err;
    err["error"] = "no bipartite KS pair with |S_A|*|S_B| <= " + std::to_string(max_product);
    err["kind"] = "limit";
    std::cerr << err.dump() << "\n";
    return kExitGuard;
  }
  return kExitOk;
}

int cmd_export_graph(const std::string& input, const std::string& output,
                     const std::string& format) {
  Builtin b = load_input(input);
  std::string text;
  if (const Scenario* sc = std::get_if<Scenario>(&b)) {
    RaySet pooled = pooled_rayset(*sc);
    OrthGraph g = build_graph(pooled);
    if (format == "dot") {
      std::vector<Party> split = party_split(pooled, *sc);
      text = export_dot(g, pooled, &split);
    } else if (format == "json") {
      text = export_adjacency_json(g, pooled);
    } else {
      throw UsageError("--format must be 'dot' or 'json'");
    }
  } else {
    const RaySet& rs = std::get<RaySet>(b);
    OrthGraph g = build_graph(rs);
    if (format == "dot") {
      text = export_dot(g, rs);
    } else if (format == "json") {
      text = export_adjacency_json(g, rs);
    } else {
      throw UsageError("--format must be 'dot' or 'json'");
    }
  }
  emit_text(text, output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of Kochen-Specker sets, bipartite KS sets and perfect-strategy games"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "add informational floating-point approximations");

  std::string input, output, format = "dot", pool = "all", checkpoint;
  long max_product = 0;
  unsigned long long guard = 100000000ULL;
  int workers = 1;

  CLI::App* list = app.add_subcommand("catalog-list", "list built-in catalogs");

  CLI::App* vks = app.add_subcommand("verify-ks", "decide KS colorability of a ray catalog");
  vks->add_option("input", input, "builtin name, .rays or .scenario file")->required();
  vks->add_option("-o,--output", output, "write JSON here instead of stdout");

  CLI::App* vbks =
      app.add_subcommand("verify-bks", "decide whether (S_A, S_B) is a bipartite KS set");
  bool criticality = false;
  vbks->add_option("input", input)->required();
  vbks->add_option("-o,--output", output);
  vbks->add_flag("--criticality", criticality,
                 "also check that deleting any single context flips the verdict");

  CLI::App* corr = app.add_subcommand("correlation", "exact Born-rule correlation table");
  corr->add_option("input", input)->required();
  corr->add_option("-o,--output", output);

  CLI::App* cons = app.add_subcommand("construct-bks", "reduced-state context construction");
  cons->add_option("input", input)->required();
  cons->add_option("-o,--output", output, "write the scenario file here");

  CLI::App* game = app.add_subcommand("game-value", "exact classical/quantum game values");
  std::string pi_file, win_file;
  game->add_option("input", input)->required();
  game->add_option("-o,--output", output);
  game->add_option("--guard", guard, "bound on |A|^|X| deterministic-strategy candidates");
  game->add_option("--pi-file", pi_file, "non-uniform input distribution, lines 'x y p/q'");
  game->add_option("--win-file", win_file, "predicate overrides, lines 'x y a b 0|1'");

  CLI::App* search = app.add_subcommand("search-bks", "minimal |S_A|*|S_B| bipartite KS search");
  search->add_option("input", input)->required();
  search->add_option("--max-product", max_product, "largest |S_A|*|S_B| to consider")->required();
  search->add_option("--pool", pool, "'declared' contexts or 'all' enumerated bases");
  search->add_option("--workers", workers, "parallel sweep workers");
  search->add_option("--checkpoint", checkpoint, "sweep checkpoint file");
  search->add_option("-o,--output", output);

  CLI::App* graph = app.add_subcommand("export-graph", "orthogonality graph export");
  graph->add_option("input", input)->required();
  graph->add_option("--format", format, "'dot' or 'json'");
  graph->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_catalog_list();
    if (vks->parsed()) return cmd_verify_ks(input, output);
    if (vbks->parsed()) return cmd_verify_bks(input, output, criticality);
    if (corr->parsed()) return cmd_correlation(input, output, pretty);
    if (cons->parsed()) return cmd_construct_bks(input, output);
    if (game->parsed())
      return cmd_game_value(input, output, guard, pretty, pi_file, win_file);
    if (search->parsed())
      return cmd_search_bks(input, output, max_product, pool, workers, checkpoint);
    if (graph->parsed()) return cmd_export_graph(input, output, format);
  } catch (const UsageError& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "guard"}}.dump() << "\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "parse"}}.dump() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "validation"}}.dump() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
