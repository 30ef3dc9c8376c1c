#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ksg/linalg.hpp"

namespace ksg {

// An ordered complete measurement context: element indices into a ray table.
// The position of an element is its outcome index.
struct Context {
  std::string label;
  std::vector<int> elements;
};

// Deduplicated, canonically sorted rank-one ray catalog with validated
// declared contexts. Immutable after construction.
class RaySet {
 public:
  RaySet(int dimension, long radical, std::vector<Ray> rays, std::vector<std::string> ray_names,
         std::vector<Context> declared_contexts);

  int dimension() const { return dimension_; }
  long radical() const { return radical_; }
  int ray_count() const { return static_cast<int>(rays_.size()); }
  const std::vector<Ray>& rays() const { return rays_; }
  const Ray& ray(int i) const { return rays_.at(static_cast<size_t>(i)); }
  const std::string& ray_name(int i) const { return ray_names_.at(static_cast<size_t>(i)); }
  const std::vector<Context>& declared_contexts() const { return contexts_; }

  // Index of a canonically equal ray, or -1.
  int find(const Ray& r) const;

  Projector projector(int i) const { return Projector::from_ray(ray(i)); }

  friend bool operator==(const RaySet& x, const RaySet& y);

 private:
  int dimension_;
  long radical_;
  std::vector<Ray> rays_;
  std::vector<std::string> ray_names_;
  std::vector<Context> contexts_;
};

// Incremental construction with dedup; build() sorts rays canonically,
// remaps context indices and validates everything.
class RaySetBuilder {
 public:
  RaySetBuilder(int dimension, long radical);

  int add_ray(const Vec& entries, std::string name_hint = "");
  int add_ray(const Ray& ray, std::string name_hint = "");
  void add_context(std::string label, std::vector<int> ray_indices);

  int ray_count() const { return static_cast<int>(rays_.size()); }
  RaySet build() const;

 private:
  int dimension_;
  long radical_;
  std::vector<Ray> rays_;
  std::vector<std::string> names_;
  std::vector<Context> contexts_;
  int anonymous_counter_ = 0;
};

// Two-party measurement scenario: a shared pure state plus per-side ray
// catalogs whose declared contexts are S_A and S_B.
struct Scenario {
  PureState state;
  RaySet alice;
  RaySet bob;

  int dim_a() const { return state.dim_a(); }
  int dim_b() const { return state.dim_b(); }
  long radical() const { return alice.radical() ? alice.radical() : bob.radical(); }
  int num_inputs_a() const { return static_cast<int>(alice.declared_contexts().size()); }
  int num_inputs_b() const { return static_cast<int>(bob.declared_contexts().size()); }
  int num_outcomes_a() const;  // max context length on Alice's side
  int num_outcomes_b() const;
};

// Restriction to subsets of each side's contexts (indices into the declared
// context lists); unreferenced rays are dropped.
Scenario subscenario(const Scenario& sc, const std::vector<int>& alice_contexts,
                     const std::vector<int>& bob_contexts);

// Union of both sides' context rays as one catalog (requires dim_a == dim_b).
// Context labels are prefixed "A." / "B.".
RaySet pooled_rayset(const Scenario& sc);

// Number of distinct rays referenced by the contexts of both sides.
int pooled_distinct_ray_count(const Scenario& sc);

// ---- Catalog file format ----------------------------------------------
//
//   dim=<d> radical=<r>                  header (rayset)
//   dim=<dA>x<dB> radical=<r>            header (scenario)
//   ray <name> = (s, s, ...)             scalar syntax: p/q, p/q+s/t*sqrt(r)
//   context <label> = name1 name2 ...
//   state = (row; row; ...)              scenario only, dA rows of dB entries
//   side A | side B                      scenario section markers

RaySet parse_rayset(std::string_view text);
Scenario parse_scenario(std::string_view text);
std::string serialize_rayset(const RaySet& rs);
std::string serialize_scenario(const Scenario& sc);

// ---- Built-in catalogs --------------------------------------------------

using Builtin = std::variant<RaySet, Scenario>;

const std::vector<std::string>& builtin_names();
bool is_builtin(std::string_view name);
Builtin builtin(std::string_view name);  // throws ValidationError on unknown name
RaySet builtin_rayset(std::string_view name);
Scenario builtin_scenario(std::string_view name);

}  // namespace ksg
