#pragma once

#include "g5/graph.hpp"
#include "g5/io.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace g5 {

struct ReductionResult;

// colour per vertex, 0 = uncoloured
using Coloring = std::vector<int>;

enum class ColorErrorCode {
  ImproperPrecoloring,
  AllListsEqual,
  InvalidInput,
  TooLarge,
  PrecoloringExtends,
  LiftCaseExhausted,
};
const char* to_string(ColorErrorCode c);

class ColorError : public std::runtime_error {
 public:
  ColorError(ColorErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ColorErrorCode code() const { return code_; }

 private:
  ColorErrorCode code_;
};

using AdjList = std::vector<std::vector<int>>;

// Lexicographically first proper colouring with colours drawn from the per-vertex bitmask
// domains (bit c-1 allows colour c), or nullopt.
std::optional<Coloring> solve_domains(const AdjList& adj, std::vector<std::uint8_t> domains);

// Per-vertex domains for extending phi on g: fixed colours at precoloured vertices, the two
// other colours at weak vertex rings, everything elsewhere.
std::vector<std::uint8_t> extension_domains(const EmbeddedGraph& g, const Precoloring& phi);
AdjList adjacency_of(const EmbeddedGraph& g);

std::optional<Coloring> oracle_extend(const EmbeddedGraph& g, const Precoloring& phi);
bool is_proper(const EmbeddedGraph& g, const Coloring& c);
// c is proper, complete and extends phi (with the weak-ring convention).
bool extends(const EmbeddedGraph& g, const Precoloring& phi, const Coloring& c);

// u1 ~ w1, w2, u2 and u2 ~ w3, w4.
std::optional<std::pair<int, int>> extend_adjacent_pair(int w1, int w2, int w3, int w4);

using ColorList = std::array<int, 2>;
std::array<std::vector<int>, 3> color_path_lists(const std::vector<ColorList>& lists);

// Proper colourings of the ring vertices, one per colour-permutation class unless all is set.
std::vector<Precoloring> ring_precolorings(const EmbeddedGraph& g, bool all = false);

enum class CritVerdict { RCritical, PhiCritical, Neither };
struct CriticalityCertificate {
  CritVerdict verdict = CritVerdict::Neither;
  std::map<int, Precoloring> witness;  // edge -> precolouring extending to G-e but not G
  int unwitnessed_edge = -1;
  bool is_critical() const { return verdict != CritVerdict::Neither; }
};

CriticalityCertificate is_R_critical(const EmbeddedGraph& g, int max_ring_length = 12);
CriticalityCertificate is_phi_critical(const EmbeddedGraph& g, const Precoloring& phi);

Subgraph extract_critical(const EmbeddedGraph& g, const Precoloring& phi);

// Extends a colouring of the reduced graph (indexed by its vertices) to the host, following the
// per-configuration case analysis; throws LiftCaseExhausted with the step trace if a step fails.
Coloring lift_coloring(const EmbeddedGraph& g, const ReductionResult& res, const Coloring& reduced);

struct DiskSolveStats {
  int reductions = 0;
  int oracle_calls = 0;
  int fallbacks = 0;  // reduced graph refused, host handed to the oracle
};

// Reduce-recurse-lift on a disk with one facial ring, the oracle below the threshold.
std::optional<Coloring> solve_disk(const EmbeddedGraph& g, const Precoloring& phi, int threshold = 18,
                                   DiskSolveStats* stats = nullptr);

}  // namespace g5
