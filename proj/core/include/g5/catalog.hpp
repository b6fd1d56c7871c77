#pragma once

#include "g5/graph.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g5 {

class CatalogInvalid : public std::runtime_error {
 public:
  CatalogInvalid(std::string constraint, const std::string& what)
      : std::runtime_error("CatalogInvalid(" + constraint + "): " + what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

constexpr int kHalfEdge = -1;

struct Configuration {
  std::string id;  // R1 .. R7''''
  std::vector<std::string> names;
  // cyclic order of neighbours, kHalfEdge marking a half-edge slot
  std::vector<std::vector<int>> rotation;
  std::vector<int> half_edges;
  std::vector<std::vector<int>> faces;  // F, each in face-tracing order
  std::vector<int> d;                   // 0 outside dom(d)
  std::vector<int> I, A;
  std::map<std::pair<int, int>, std::vector<int>> paths;  // keyed by ordered pair
  std::vector<std::pair<int, int>> identifiable;          // pairs an imprint may merge
  std::vector<std::vector<int>> automorphisms;
  std::vector<std::string> anchors;

  int n() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const;  // -1 when absent
  bool has(const std::string& name) const { return index(name) >= 0; }
  bool in_dom(int v) const { return d[v] > 0; }
  bool adjacent(int u, int v) const;
  std::vector<int> neighbors(int v) const;  // real edges only
  const std::vector<int>* path(int u, int v) const;
  bool is(const char* family) const { return id == family; }
  bool r7_family() const { return id.rfind("R7", 0) == 0; }
};

Configuration parse_configuration(const std::string& id, const std::string& text);
// Generic and per-configuration textual checks; throws CatalogInvalid.
void validate_configuration(const Configuration& c);
std::vector<Configuration> load_catalog();
const std::vector<Configuration>& catalog();
const Configuration& configuration(const std::string& id);

enum class Strength { Faint, Weak, Appears, Strong };
const char* to_string(Strength s);
std::optional<Strength> parse_strength(const std::string& s);

struct Appearance {
  int config = -1;                  // index into catalog()
  std::vector<VertexId> imprint;    // catalog vertex -> host vertex
  std::vector<int> face_map;        // F face index -> host face
  bool mirrored = false;
  std::optional<std::pair<int, int>> identified;  // catalog vertices sharing an image
  bool weak = false, appears = false, strong = false;

  const Configuration& conf() const;
  VertexId at(const std::string& name) const;  // -1 when the catalog vertex is absent
  Strength strength() const;
  bool meets(Strength s) const;
};

struct CheckResult {
  bool ok = true;
  std::string reason;
};

// Independent per-tier checks of a candidate imprint.
CheckResult check_faint(const EmbeddedGraph& g, const Appearance& a);
CheckResult check_weak(const EmbeddedGraph& g, const Appearance& a);
CheckResult check_appears(const EmbeddedGraph& g, const Appearance& a);
CheckResult check_strong(const EmbeddedGraph& g, const Appearance& a);

std::vector<Appearance> find_appearances(const EmbeddedGraph& g, Strength min_strength = Strength::Faint);
std::vector<Appearance> find_appearances(const EmbeddedGraph& g, const Configuration& c, int config_index,
                                         Strength min_strength);

// J given as host edge ids.
bool touched_by(const EmbeddedGraph& g, const Appearance& a, const std::vector<int>& edges);

struct ExceptionalWheel {
  int s = 0;
  std::vector<VertexId> ring;
  Cycle cycle;
};

class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string invariant, const std::string& what)
      : std::runtime_error("PreconditionFailed(" + invariant + "): " + what), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

struct StrengthenResult {
  std::optional<Appearance> strong;
  std::optional<ExceptionalWheel> wheel;
};

StrengthenResult strengthen(const EmbeddedGraph& g, const Appearance& a);
std::optional<ExceptionalWheel> exceptional_wheel(const EmbeddedGraph& g);

std::string describe(const Appearance& a);

}  // namespace g5
