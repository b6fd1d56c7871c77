#pragma once

#include "g5/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace g5 {

enum class Inv { I0, I1, I2, I3, I4, I5, I6, I7, I8, I9 };
constexpr int kNumInvariants = 10;
const char* to_string(Inv i);

struct Verdict {
  bool holds = true;
  std::vector<VertexId> witness;  // vertex, path or cycle
  int face = -1;                  // witness face, when the failure is about a face
  std::string note;

  static Verdict ok() { return {}; }
  static Verdict fail(std::vector<VertexId> w, std::string note = {}, int face = -1) {
    Verdict v;
    v.holds = false;
    v.witness = std::move(w);
    v.note = std::move(note);
    v.face = face;
    return v;
  }
};

using InvariantReport = std::array<Verdict, kNumInvariants>;

Verdict check_invariant(const EmbeddedGraph& g, Inv which);
InvariantReport check_all(const EmbeddedGraph& g);

bool is_allowable(const EmbeddedGraph& g, const Path& p);
Verdict is_well_behaved(const EmbeddedGraph& g);

// Returns the cut pair {x, y} together with the ring-free side B - A.
struct TwoCut {
  VertexId x = -1, y = -1;
  std::vector<VertexId> detached;
};
std::optional<TwoCut> has_internal_2cut(const EmbeddedGraph& g);

enum class FaceClass { Closed2Cell, Open2CellOnly, Omnipresent, Other };
const char* to_string(FaceClass c);
FaceClass classify_face(const EmbeddedGraph& g, int f);

enum class ExcClass { E0, E1, E2, E3, E4, E5, None };
const char* to_string(ExcClass c);
struct ExceptionalClass {
  ExcClass cls = ExcClass::None;
  bool very_exceptional = false;
};

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requires exactly one facial ring; throws InvariantError("MultipleRings") otherwise.
ExceptionalClass classify_exceptional(const EmbeddedGraph& g);

enum class PlaneCase { A, B, C, NonCritical, NotApplicable, Unmatched };
const char* to_string(PlaneCase c);
PlaneCase planechar_case(const EmbeddedGraph& g);

// Helpers shared with the reducer and the discharging audit.
bool ring_is_induced(const EmbeddedGraph& g, int ring);
// Vertices strictly inside side s of cycle c.
std::vector<VertexId> vertices_inside(const EmbeddedGraph& g, const Cycle& c,
                                      const std::vector<int>& sides, int s);
// Number of edges of g drawn inside side s of c (not on c).
int edges_inside(const EmbeddedGraph& g, const Cycle& c, const std::vector<int>& sides, int s);

}  // namespace g5
