#include "ksg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ksg {

namespace {

void validate_context(const Context& ctx, const std::vector<Ray>& rays, int dimension) {
  if (ctx.elements.empty()) throw ValidationError("context '" + ctx.label + "' is empty");
  std::set<int> seen;
  for (int e : ctx.elements) {
    if (e < 0 || e >= static_cast<int>(rays.size())) {
      throw ValidationError("context '" + ctx.label + "' references ray index out of range");
    }
    if (!seen.insert(e).second) {
      throw ValidationError("context '" + ctx.label + "' repeats a ray");
    }
  }
  for (size_t i = 0; i < ctx.elements.size(); ++i) {
    for (size_t j = i + 1; j < ctx.elements.size(); ++j) {
      const Ray& u = rays[static_cast<size_t>(ctx.elements[i])];
      const Ray& v = rays[static_cast<size_t>(ctx.elements[j])];
      if (!inner(u.entries(), v.entries()).is_zero()) {
        throw ValidationError("context '" + ctx.label + "' is not mutually orthogonal");
      }
    }
  }
  Mat sum = Mat::Zero(dimension, dimension);
  for (int e : ctx.elements) {
    sum += Projector::from_ray(rays[static_cast<size_t>(e)]).matrix();
  }
  if (!is_identity(sum)) {
    throw ValidationError("context '" + ctx.label + "' does not sum to the identity");
  }
}

}  // namespace

RaySet::RaySet(int dimension, long radical, std::vector<Ray> rays,
               std::vector<std::string> ray_names, std::vector<Context> declared_contexts)
    : dimension_(dimension),
      radical_(radical),
      rays_(std::move(rays)),
      ray_names_(std::move(ray_names)),
      contexts_(std::move(declared_contexts)) {
  if (dimension_ < 2) throw ValidationError("dimension must be >= 2");
  if (ray_names_.size() != rays_.size()) throw ValidationError("ray/name size mismatch");
  for (size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].dim() != dimension_) {
      throw ValidationError("ray '" + ray_names_[i] + "' has inconsistent dimension");
    }
    if (i > 0 && !(rays_[i - 1] < rays_[i])) {
      throw ValidationError("rays must be canonically sorted and deduplicated");
    }
  }
  for (const Context& ctx : contexts_) validate_context(ctx, rays_, dimension_);
}

int RaySet::find(const Ray& r) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), r);
  if (it != rays_.end() && *it == r) return static_cast<int>(it - rays_.begin());
  return -1;
}

bool operator==(const RaySet& x, const RaySet& y) {
  return x.dimension_ == y.dimension_ && x.radical_ == y.radical_ && x.rays_ == y.rays_ &&
         x.contexts_.size() == y.contexts_.size() &&
         std::equal(x.contexts_.begin(), x.contexts_.end(), y.contexts_.begin(),
                    [](const Context& a, const Context& b) {
                      return a.label == b.label && a.elements == b.elements;
                    });
}

RaySetBuilder::RaySetBuilder(int dimension, long radical)
    : dimension_(dimension), radical_(radical) {
  if (dimension < 2) throw ValidationError("dimension must be >= 2");
  if (radical != 0) validate_radical(radical);
}

int RaySetBuilder::add_ray(const Vec& entries, std::string name_hint) {
  return add_ray(Ray(entries, radical_), std::move(name_hint));
}

int RaySetBuilder::add_ray(const Ray& ray, std::string name_hint) {
  if (ray.dim() != dimension_) {
    throw ValidationError("ray dimension " + std::to_string(ray.dim()) +
                          " inconsistent with catalog dimension " + std::to_string(dimension_));
  }
  for (size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i] == ray) return static_cast<int>(i);
  }
  rays_.push_back(ray);
  names_.push_back(name_hint.empty() ? "v" + std::to_string(anonymous_counter_++)
                                     : std::move(name_hint));
  return static_cast<int>(rays_.size() - 1);
}

void RaySetBuilder::add_context(std::string label, std::vector<int> ray_indices) {
  contexts_.push_back(Context{std::move(label), std::move(ray_indices)});
}

RaySet RaySetBuilder::build() const {
  std::vector<int> order(rays_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rays_[static_cast<size_t>(a)] < rays_[static_cast<size_t>(b)]; });
  std::vector<int> remap(rays_.size());
  std::vector<Ray> sorted_rays;
  std::vector<std::string> sorted_names;
  sorted_rays.reserve(rays_.size());
  for (size_t pos = 0; pos < order.size(); ++pos) {
    remap[static_cast<size_t>(order[pos])] = static_cast<int>(pos);
    sorted_rays.push_back(rays_[static_cast<size_t>(order[pos])]);
    sorted_names.push_back(names_[static_cast<size_t>(order[pos])]);
  }
  std::vector<Context> remapped = contexts_;
  for (Context& ctx : remapped) {
    for (int& e : ctx.elements) e = remap[static_cast<size_t>(e)];
  }
  return RaySet(dimension_, radical_, std::move(sorted_rays), std::move(sorted_names),
                std::move(remapped));
}

int Scenario::num_outcomes_a() const {
  int m = 0;
  for (const Context& c : alice.declared_contexts()) m = std::max(m, static_cast<int>(c.elements.size()));
  return m;
}

int Scenario::num_outcomes_b() const {
  int m = 0;
  for (const Context& c : bob.declared_contexts()) m = std::max(m, static_cast<int>(c.elements.size()));
  return m;
}

namespace {

RaySet restrict_contexts(const RaySet& side, const std::vector<int>& keep) {
  for (int ci : keep) {
    if (ci < 0 || ci >= static_cast<int>(side.declared_contexts().size())) {
      throw ValidationError("context index out of range in subscenario");
    }
  }
  RaySetBuilder b(side.dimension(), side.radical());
  for (int ci : keep) {
    const Context& src = side.declared_contexts()[static_cast<size_t>(ci)];
    std::vector<int> elems;
    for (int e : src.elements) elems.push_back(b.add_ray(side.ray(e), side.ray_name(e)));
    b.add_context(src.label, std::move(elems));
  }
  return b.build();
}

}  // namespace

Scenario subscenario(const Scenario& sc, const std::vector<int>& alice_contexts,
                     const std::vector<int>& bob_contexts) {
  return Scenario{sc.state, restrict_contexts(sc.alice, alice_contexts),
                  restrict_contexts(sc.bob, bob_contexts)};
}

RaySet pooled_rayset(const Scenario& sc) {
  if (sc.dim_a() != sc.dim_b()) {
    throw DimensionMismatch("pooled catalog requires equal local dimensions");
  }
  long radical = sc.alice.radical() != 0 ? sc.alice.radical() : sc.bob.radical();
  RaySetBuilder b(sc.dim_a(), radical);
  auto add_side = [&](const RaySet& side, const char* prefix) {
    for (const Context& ctx : side.declared_contexts()) {
      std::vector<int> elems;
      for (int e : ctx.elements) elems.push_back(b.add_ray(side.ray(e), side.ray_name(e)));
      b.add_context(std::string(prefix) + ctx.label, std::move(elems));
    }
  };
  add_side(sc.alice, "A.");
  add_side(sc.bob, "B.");
  return b.build();
}

int pooled_distinct_ray_count(const Scenario& sc) {
  return pooled_rayset(sc).ray_count();
}

// ---- Parsing -------------------------------------------------------------

namespace {

struct RawLine {
  int no;
  std::string text;
};

std::vector<RawLine> content_lines(std::string_view text) {
  std::vector<RawLine> out;
  int no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos) {
      size_t e = line.find_last_not_of(" \t\r");
      out.push_back(RawLine{no, std::string(line.substr(b, e - b + 1))});
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct Header {
  int dim_a = 0;
  int dim_b = 0;  // 0 for plain rayset headers
  long radical = 0;
};

Header parse_header(const RawLine& line) {
  Header h;
  auto toks = split_ws(line.text);
  bool have_dim = false, have_radical = false;
  for (const std::string& t : toks) {
    size_t eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in header", line.no, 1);
    std::string key = t.substr(0, eq), val = t.substr(eq + 1);
    try {
      if (key == "dim") {
        size_t x = val.find('x');
        if (x == std::string::npos) {
          h.dim_a = std::stoi(val);
          h.dim_b = 0;
        } else {
          h.dim_a = std::stoi(val.substr(0, x));
          h.dim_b = std::stoi(val.substr(x + 1));
        }
        have_dim = true;
      } else if (key == "radical") {
        h.radical = std::stol(val);
        have_radical = true;
      } else {
        throw ParseError("unknown header key '" + key + "'", line.no, 1);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed header value '" + val + "'", line.no, 1);
    } catch (const std::out_of_range&) {
      throw ParseError("header value out of range '" + val + "'", line.no, 1);
    }
  }
  if (!have_dim || !have_radical) {
    throw ParseError("header must declare dim=<d> and radical=<r>", line.no, 1);
  }
  if (h.dim_a < 2 || (h.dim_b != 0 && h.dim_b < 2)) {
    throw ParseError("dimension must be >= 2", line.no, 1);
  }
  if (h.radical < 0) throw ParseError("radical must be non-negative", line.no, 1);
  if (h.radical != 0) {
    try {
      validate_radical(h.radical);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line.no, 1);
    }
  }
  return h;
}

// Splits "(a, b, c)" into scalar substrings with their column offsets.
std::vector<std::pair<std::string, int>> split_tuple(const std::string& s, int line_no,
                                                     int col_offset) {
  size_t open = s.find('(');
  size_t close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw ParseError("expected parenthesized tuple", line_no, col_offset + 1);
  }
  std::vector<std::pair<std::string, int>> parts;
  size_t start = open + 1;
  for (size_t i = open + 1; i <= close; ++i) {
    if (i == close || s[i] == ',') {
      parts.emplace_back(s.substr(start, i - start), col_offset + static_cast<int>(start) + 1);
      start = i + 1;
    }
  }
  return parts;
}

Vec parse_vector(const std::string& tuple_text, long radical, int line_no, int col_offset) {
  auto parts = split_tuple(tuple_text, line_no, col_offset);
  Vec v(static_cast<Eigen::Index>(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i) {
    try {
      v(static_cast<Eigen::Index>(i)) = parse_scalar(parts[i].first, radical == 0 ? 0 : radical);
    } catch (const RadicalMismatch& e) {
      throw ParseError(e.what(), line_no, parts[i].second);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no, parts[i].second);
    }
  }
  return v;
}

}  // namespace

// Shared body for rayset files and the per-side sections of scenario files.
namespace {

class SectionParser {
 public:
  SectionParser(int dim, long radical) : dim_(dim), radical_(radical), builder_(dim, radical) {}

  void ray_line(const RawLine& line, const std::string& rest) {
    size_t eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError("expected '=' in ray declaration", line.no, 1);
    std::string name = rest.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               name.end());
    if (name.empty()) throw ParseError("ray needs a name", line.no, 1);
    Vec v = parse_vector(rest.substr(eq + 1), radical_, line.no, static_cast<int>(eq) + 1);
    if (v.size() != dim_) {
      throw ParseError("ray '" + name + "' has " + std::to_string(v.size()) +
                           " entries, expected " + std::to_string(dim_),
                       line.no, 1);
    }
    int idx;
    try {
      idx = builder_.add_ray(v, name);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line.no, 1);
    }
    auto [it, inserted] = names_.emplace(name, idx);
    if (!inserted && it->second != idx) {
      throw ParseError("name '" + name + "' reused for a different ray", line.no, 1);
    }
  }

  void context_line(const RawLine& line, const std::string& rest) {
    size_t eq = rest.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected '=' in context declaration", line.no, 1);
    }
    std::string label = rest.substr(0, eq);
    label.erase(std::remove_if(label.begin(), label.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                label.end());
    if (label.empty()) throw ParseError("context needs a label", line.no, 1);
    std::vector<int> elems;
    for (const std::string& name : split_ws(rest.substr(eq + 1))) {
      auto it = names_.find(name);
      if (it == names_.end()) {
        throw ParseError("context '" + label + "' references unknown ray '" + name + "'", line.no,
                         1);
      }
      elems.push_back(it->second);
    }
    if (elems.empty()) throw ParseError("context '" + label + "' is empty", line.no, 1);
    builder_.add_context(label, std::move(elems));
    context_lines_.push_back(line.no);
  }

  RaySet build(int header_line_no) const {
    try {
      return builder_.build();
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), header_line_no, 1);
    }
  }

 private:
  int dim_;
  long radical_;
  RaySetBuilder builder_;
  std::map<std::string, int> names_;
  std::vector<int> context_lines_;
};

}  // namespace

RaySet parse_rayset(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty catalog", 1, 1);
  Header h = parse_header(lines[0]);
  if (h.dim_b != 0) {
    throw ParseError("rayset header takes a single dimension (dim=<d>)", lines[0].no, 1);
  }
  SectionParser sec(h.dim_a, h.radical);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i].text);
    const std::string& kw = toks[0];
    std::string rest = lines[i].text.substr(kw.size());
    if (kw == "ray") {
      sec.ray_line(lines[i], rest);
    } else if (kw == "context") {
      sec.context_line(lines[i], rest);
    } else if (kw == "state" || kw == "side") {
      throw ParseError("'" + kw + "' is scenario syntax; not allowed in a rayset file",
                       lines[i].no, 1);
    } else {
      throw ParseError("unknown directive '" + kw + "'", lines[i].no, 1);
    }
  }
  return sec.build(lines[0].no);
}

namespace {

Mat parse_state_grid(const std::string& rest, const Header& h, int line_no) {
  size_t open = rest.find('(');
  size_t close = rest.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw ParseError("state grid must be parenthesized", line_no, 1);
  }
  std::string body = rest.substr(open + 1, close - open - 1);
  std::vector<std::string> rows;
  size_t start = 0;
  while (true) {
    size_t semi = body.find(';', start);
    rows.push_back(body.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  int dim_b = h.dim_b == 0 ? h.dim_a : h.dim_b;
  if (static_cast<int>(rows.size()) != h.dim_a) {
    throw ParseError("state grid has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(h.dim_a),
                     line_no, 1);
  }
  Mat c(h.dim_a, dim_b);
  for (int i = 0; i < h.dim_a; ++i) {
    Vec row = parse_vector("(" + rows[static_cast<size_t>(i)] + ")", h.radical, line_no, 0);
    if (row.size() != dim_b) {
      throw ParseError("state grid row " + std::to_string(i) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(dim_b),
                       line_no, 1);
    }
    for (int j = 0; j < dim_b; ++j) c(i, j) = row(j);
  }
  return c;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty scenario", 1, 1);
  Header h = parse_header(lines[0]);
  int dim_b = h.dim_b == 0 ? h.dim_a : h.dim_b;

  std::optional<Mat> state;
  SectionParser alice(h.dim_a, h.radical);
  SectionParser bob(dim_b, h.radical);
  SectionParser* current = nullptr;
  char current_side = '\0';

  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i].text);
    const std::string& kw = toks[0];
    std::string rest = lines[i].text.substr(kw.size());
    if (kw == "state") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("expected '=' after state", lines[i].no, 1);
      if (state) throw ParseError("duplicate state grid", lines[i].no, 1);
      state = parse_state_grid(rest.substr(eq + 1), h, lines[i].no);
    } else if (kw == "side") {
      if (toks.size() != 2 || (toks[1] != "A" && toks[1] != "B")) {
        throw ParseError("expected 'side A' or 'side B'", lines[i].no, 1);
      }
      current_side = toks[1][0];
      current = current_side == 'A' ? &alice : &bob;
    } else if (kw == "ray") {
      if (!current) throw ParseError("ray declared outside a side block", lines[i].no, 1);
      current->ray_line(lines[i], rest);
    } else if (kw == "context") {
      if (!current) throw ParseError("context declared outside a side block", lines[i].no, 1);
      current->context_line(lines[i], rest);
    } else {
      throw ParseError("unknown directive '" + kw + "'", lines[i].no, 1);
    }
  }
  if (!state) throw ParseError("scenario is missing its state grid", lines[0].no, 1);

  try {
    return Scenario{PureState(*state), alice.build(lines[0].no), bob.build(lines[0].no)};
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), lines[0].no, 1);
  }
}

// ---- Serialization --------------------------------------------------------

namespace {

std::string format_ray_tuple(const Ray& r) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < r.entries().size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.entries()(i));
  }
  out += ")";
  return out;
}

void serialize_section(std::ostringstream& os, const RaySet& rs) {
  for (int i = 0; i < rs.ray_count(); ++i) {
    os << "ray " << rs.ray_name(i) << " = " << format_ray_tuple(rs.ray(i)) << "\n";
  }
  for (const Context& ctx : rs.declared_contexts()) {
    os << "context " << ctx.label << " =";
    for (int e : ctx.elements) os << " " << rs.ray_name(e);
    os << "\n";
  }
}

}  // namespace

std::string serialize_rayset(const RaySet& rs) {
  std::ostringstream os;
  os << "dim=" << rs.dimension() << " radical=" << rs.radical() << "\n";
  serialize_section(os, rs);
  return os.str();
}

std::string serialize_scenario(const Scenario& sc) {
  std::ostringstream os;
  os << "dim=" << sc.dim_a() << "x" << sc.dim_b() << " radical=" << sc.radical() << "\n";
  os << "state = (";
  for (int i = 0; i < sc.dim_a(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < sc.dim_b(); ++j) {
      if (j) os << ", ";
      os << to_string(sc.state.coeff()(i, j));
    }
  }
  os << ")\n";
  os << "side A\n";
  serialize_section(os, sc.alice);
  os << "side B\n";
  serialize_section(os, sc.bob);
  return os.str();
}

}  // namespace ksg
