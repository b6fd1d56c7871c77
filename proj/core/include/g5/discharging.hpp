#pragma once

#include "g5/graph.hpp"
#include "g5/rational.hpp"
#include "g5/weights.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g5 {

enum class Phase { Initial, Primary, Final };
const char* to_string(Phase p);

struct Node {
  enum class Kind { None, Vertex, Face } kind = Kind::None;
  int id = -1;
  static Node vertex(VertexId v) { return {Kind::Vertex, v}; }
  static Node face(int f) { return {Kind::Face, f}; }
  std::string str() const;
};

struct Transfer {
  int rule = 0;
  Node from, to;  // from.kind == None for charge created by Rule 5
  Q amount;
  int edge = -1;  // edge crossed by Rules 3 and 4
};

struct ChargeLedger {
  Phase phase = Phase::Initial;
  Q epsilon = 0;
  std::vector<int> M;  // edge ids, sorted; empty means null
  std::vector<Q> vertex;
  std::vector<Q> face;
  std::vector<Transfer> log;

  Q total() const;
  const Q& at(Node n) const;
  void move(int rule, Node from, Node to, const Q& amount, int edge = -1);
  void create(int rule, Node to, const Q& amount);
};

// Union of the edges of all cycles of length at most four (empty when there are none).
std::vector<int> capture_4cycles(const EmbeddedGraph& g);
bool captures_4cycles(const EmbeddedGraph& g, const std::vector<int>& M);
// capture_4cycles plus the boundary of one image face of every appearing configuration it misses.
std::vector<int> touching_subgraph(const EmbeddedGraph& g);

ChargeLedger initial(const EmbeddedGraph& g, const std::vector<int>& M);

struct FaceDanger {
  std::optional<int> k_dangerous;
  bool extremely_4dangerous = false;
  // for a 4-dangerous face: the edge uv opposite the odd vertex and the face across it
  int link_edge = -1;
  int linked_face = -1;
  std::vector<std::pair<int, int>> linked_from;  // (4-dangerous face, edge) this face is linked to
  std::vector<VertexId> opposite_of;
};
std::vector<FaceDanger> classify_danger(const EmbeddedGraph& g, const std::vector<int>& M);

ChargeLedger primary(const EmbeddedGraph& g, const ChargeLedger& init);

struct SafeReach {
  std::vector<char> safe;
  std::vector<std::vector<int>> reach3;  // vertex -> faces 3-reachable from it, sorted
};
SafeReach safe_and_reachable(const EmbeddedGraph& g, const ChargeLedger& prim);

ChargeLedger final_charges(const EmbeddedGraph& g, const ChargeLedger& prim, const Q& epsilon);

// Re-applies a transfer log on top of a ledger's charges.
ChargeLedger replay(const ChargeLedger& from, const std::vector<Transfer>& log, std::size_t begin = 0);

enum class LemmaVerdict { Holds, Violated, Skipped };
const char* to_string(LemmaVerdict v);

struct LemmaLine {
  std::string lemma;
  std::string object;
  LemmaVerdict verdict = LemmaVerdict::Holds;
  Q margin = 0;
  std::string note;
  std::string str() const;
};

struct ChargeAudit {
  ChargeLedger init, prim, fin;
  std::vector<LemmaLine> lines;
  std::vector<std::pair<int, Q>> rule_deltas;  // (rule, change of the total)
  bool ok() const;
  bool skipped(const std::string& lemma) const;
  std::vector<LemmaLine> violations() const;
  std::string text() const;
};

class LemmaViolated : public std::runtime_error {
 public:
  LemmaViolated(const LemmaLine& l)
      : std::runtime_error("LemmaViolated(" + l.lemma + "): " + l.object + " margin " + to_string(l.margin)),
        line_(l) {}
  const LemmaLine& line() const { return line_; }

 private:
  LemmaLine line_;
};

// Runs the charge system and checks every charge lemma whose hypotheses hold.
ChargeAudit audit_charges(const EmbeddedGraph& g, const std::vector<int>& M, const Q& epsilon,
                          const WeightFunction& w);
void raise_if_violated(const ChargeAudit& a);

}  // namespace g5
