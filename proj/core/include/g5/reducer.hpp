#pragma once

#include "g5/catalog.hpp"
#include "g5/graph.hpp"
#include "g5/invariants.hpp"
#include "g5/io.hpp"
#include "g5/rational.hpp"
#include "g5/weights.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g5 {

enum class ReduceErrorCode {
  StrengthTooLow,
  MissingPrecoloring,
  LoopCreated,
  Condition1Violated,
  UnclassifiedFace,
  LemmaViolated,
};
const char* to_string(ReduceErrorCode c);

class ReduceError : public std::runtime_error {
 public:
  ReduceError(ReduceErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ReduceErrorCode code() const { return code_; }

 private:
  ReduceErrorCode code_;
};

enum class R4Mode { NotR4, Identify, PhiEqual, PhiDifferent };
const char* to_string(R4Mode m);

struct ReductionResult {
  Appearance appearance;
  EmbeddedGraph graph;
  std::vector<VertexId> vertex_map;              // host vertex -> G' vertex, -1 if deleted
  std::vector<std::vector<VertexId>> preimage;   // G' vertex -> host vertices
  std::vector<int> edge_origin;                  // G' edge -> host edge, -1 for the new edge
  std::vector<std::vector<int>> edge_sources;    // G' edge -> every host edge merged into it
  std::vector<int> pruned;                       // host edges dropped from parallel bunches
  std::optional<VertexId> new_vertex;
  std::optional<int> new_edge;
  std::vector<int> squashed;                     // G' edges
  std::vector<VertexId> identified;              // host vertices merged into the new vertex
  std::pair<VertexId, VertexId> new_edge_ends{-1, -1};  // host ends of the added edge
  std::vector<Path> paths_used;                  // host replacement paths
  R4Mode r4_mode = R4Mode::NotR4;
  std::vector<VertexId> deleted;

  // Host replacement path between two identified host vertices (or the new edge's ends).
  const Path* replacement_path(VertexId u, VertexId v) const;
  bool is_new_edge(int e) const { return new_edge && *new_edge == e; }
  bool is_squashed(int e) const;
};

// phi is needed only for R4 with both x4 and x5 on rings.
ReductionResult reduce(const EmbeddedGraph& g, const Appearance& a, const std::optional<Precoloring>& phi = {});

// Cycles of G that are lifts of the G' cycle c (empty when none is a cycle of G).
std::vector<Cycle> lift_cycle(const EmbeddedGraph& g, const ReductionResult& res, const Cycle& c);

struct ShortCycleReport {
  bool applicable = true;
  std::string skipped_reason;
  int cycles_checked = 0;
  int lifted = 0;
  int witnessed = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the short-cycle lemma on every cycle of length at most four in G'.
ShortCycleReport verify_short_cycle_lemma(const EmbeddedGraph& g, const ReductionResult& res,
                                          bool assume_critical = false);

// A subgraph G'' of G': G'' vertex -> G' vertex, G'' edge -> G' edge.
struct Reduced {
  EmbeddedGraph graph;
  std::vector<VertexId> to_gp;
  std::vector<int> edge_to_gp;
};
Reduced whole(const ReductionResult& res);
// Largest G'' in which every internal vertex has degree at least three.
Reduced i0_core(const ReductionResult& res);

struct ExpansionMember {
  EmbeddedGraph graph;             // the face cut open, one facial ring per boundary walk
  std::vector<VertexId> to_host;   // member vertex -> host vertex
  std::vector<int> host_faces;     // internal host faces drawn inside
  bool built = false;
  std::string note;
};

struct ExpansionRecord {
  int face = -1;                   // f'' in G''
  std::vector<int> j_edges;        // host edges of J
  std::vector<VertexId> j_vertices;
  std::vector<std::vector<VertexId>> walks;  // rewritten boundary walks (host vertices)
  int j_face_count = 0;            // |S|
  std::vector<int> s_lengths;      // |f| for f in S
  std::vector<ExpansionMember> members;
  int elasticity = 0;
  bool uses_replacement_path = false;
};

ExpansionRecord build_expansion(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp, int face);

struct ElasticityReport {
  std::vector<std::pair<int, int>> elasticity;  // (face of G'', el)
  int total = 0;
  int nonzero = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
ElasticityReport elasticity_audit(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp);

struct ContributionDetail {
  ExtQ value;
  std::string rule;
};
ContributionDetail contribution(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp,
                                const ExpansionRecord& rec, const WeightFunction& w);
// Omnipresent faces are evaluated from the components of G''.
ContributionDetail omnipresent_contribution(const Reduced& gpp, int elasticity, const WeightFunction& w);
ExtQ total_contribution(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp,
                        const WeightFunction& w);

struct AuditReport {
  bool applicable = true;
  std::string skipped_reason;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};
AuditReport winners_audit(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp,
                          const WeightFunction& w);
AuditReport face_cover_audit(const EmbeddedGraph& g, const ReductionResult& res, const Reduced& gpp);

}  // namespace g5
