#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace g5 {

using VertexId = int;
using DartId = int;
using Cycle = std::vector<VertexId>;
using Path = std::vector<VertexId>;

enum class GraphErrorCode {
  NonSymmetricRotation,
  GenusNonZero,
  RingNotCycle,
  ParallelEdgeOrLoop,
  InvalidInput,
  NotContractible,
  RingInsideDisk,
};

const char* to_string(GraphErrorCode c);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  GraphErrorCode code() const { return code_; }

 private:
  GraphErrorCode code_;
};

enum class RingKind { Facial, Vertex, WeakVertex };

struct Ring {
  RingKind kind = RingKind::Facial;
  std::vector<VertexId> vertices;

  bool is_vertex_ring() const { return kind != RingKind::Facial; }
  int length() const {
    switch (kind) {
      case RingKind::Facial: return static_cast<int>(vertices.size());
      case RingKind::Vertex: return 1;
      case RingKind::WeakVertex: return 0;
    }
    return 0;
  }
};

struct Dart {
  VertexId origin = -1;
  DartId twin = -1;
  DartId next = -1;  // next dart around origin in the rotation
  DartId prev = -1;
};

struct Face {
  std::vector<std::vector<DartId>> walks;
  std::vector<VertexId> isolated;  // isolated vertices drawn in this face
  int length = 0;
  int ring = -1;  // index of the facial ring bounding this face, or -1
  DartId min_dart = -1;
};

class EmbeddedGraph {
 public:
  int n() const { return static_cast<int>(rot_.size()); }
  int m() const { return static_cast<int>(darts_.size() / 2); }
  int num_darts() const { return static_cast<int>(darts_.size()); }

  const std::vector<std::vector<VertexId>>& rotation() const { return rot_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return rot_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }
  bool adjacent(VertexId u, VertexId v) const { return dart(u, v) >= 0; }

  DartId dart(VertexId u, VertexId v) const;
  int edge_id(VertexId u, VertexId v) const {
    DartId d = dart(u, v);
    return d < 0 ? -1 : d / 2;
  }
  std::pair<VertexId, VertexId> edge_ends(int e) const {
    return {darts_[2 * e].origin, darts_[2 * e + 1].origin};
  }
  const Dart& dart_at(DartId d) const { return darts_[d]; }
  VertexId tail(DartId d) const { return darts_[d].origin; }
  VertexId head(DartId d) const { return darts_[darts_[d].twin].origin; }
  DartId twin(DartId d) const { return darts_[d].twin; }
  DartId rot_next(DartId d) const { return darts_[d].next; }
  DartId rot_prev(DartId d) const { return darts_[d].prev; }
  // The face-tracing successor of d.
  DartId face_next(DartId d) const { return darts_[darts_[d].twin].next; }
  std::vector<DartId> darts_out(VertexId v) const;

  const std::vector<Face>& faces() const { return faces_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int face_of_dart(DartId d) const { return dart_face_[d]; }
  // Face holding the corner between d and rot_next(d) at tail(d).
  int corner_face(DartId d) const { return dart_face_[darts_[d].twin]; }
  std::vector<int> faces_at(VertexId v) const;
  std::vector<VertexId> face_vertices(int f) const;
  std::vector<std::vector<VertexId>> face_walk_vertices(int f) const;
  std::vector<int> edge_faces(int e) const { return {dart_face_[2 * e], dart_face_[2 * e + 1]}; }
  int isolated_face(VertexId v) const;

  const std::vector<Ring>& rings() const { return rings_; }
  int ring_of(VertexId v) const { return ring_of_[v]; }
  bool is_ring_vertex(VertexId v) const { return ring_of_[v] >= 0; }
  bool is_internal(VertexId v) const { return ring_of_[v] < 0; }
  bool is_vertex_ring(VertexId v) const {
    return ring_of_[v] >= 0 && rings_[ring_of_[v]].is_vertex_ring();
  }
  bool is_ring_face(int f) const { return faces_[f].ring >= 0; }
  bool is_ring_edge(int e) const;
  int cuff_face(int ring) const { return cuff_face_[ring]; }
  // Cuff faces of vertex rings, with the ring index.
  bool is_vertex_ring_cuff(int f) const;
  std::vector<int> internal_faces() const;
  int num_components() const { return components_; }
  std::vector<int> component_of() const;

  // Sum over ring lengths (|R| summed).
  int ring_total_length() const;
  std::vector<VertexId> ring_vertices() const;

 private:
  friend EmbeddedGraph build(const std::vector<std::vector<VertexId>>& rot,
                             const std::vector<Ring>& rings);
  std::vector<std::vector<VertexId>> rot_;
  std::vector<Dart> darts_;
  std::unordered_map<long long, DartId> dart_index_;
  std::vector<Face> faces_;
  std::vector<int> dart_face_;
  std::vector<int> isolated_face_;
  std::vector<Ring> rings_;
  std::vector<int> ring_of_;
  std::vector<int> cuff_face_;
  int components_ = 0;
};

EmbeddedGraph build(const std::vector<std::vector<VertexId>>& rot, const std::vector<Ring>& rings);

// Shortest cycle length, nullopt for forests.
std::optional<int> girth(const EmbeddedGraph& g);

// All cycles of length <= k (k <= 9), each once, starting at its minimum vertex with
// the smaller neighbour second.
std::vector<Cycle> cycles_up_to(const EmbeddedGraph& g, int k);

// Canonical form of a cycle: rotation to minimum vertex, orientation with smaller second vertex.
Cycle canonical_cycle(const Cycle& c);

// Side labels of the faces w.r.t. a cycle: 0 or 1 for each face, two sides in genus 0.
std::vector<int> cycle_sides(const EmbeddedGraph& g, const Cycle& c);

struct DiskSubgraph {
  EmbeddedGraph graph;
  std::vector<VertexId> to_host;  // new vertex -> host vertex
  std::vector<int> host_faces;    // faces of the host inside the disk
};

DiskSubgraph disk_subgraph(const EmbeddedGraph& g, const Cycle& c);

struct Subgraph {
  EmbeddedGraph graph;
  std::vector<VertexId> to_host;
  std::vector<int> edge_to_host;  // edge of graph -> edge of host
};

// Keeps the marked edges and vertices (plus their ends and all ring vertices), inheriting
// rotations and rings.
Subgraph edge_subgraph(const EmbeddedGraph& g, const std::vector<char>& keep_edge,
                       const std::vector<char>& keep_vertex);

enum class CycleClass { Contractible, SurroundsCuff, Separating };
struct CycleTopology {
  CycleClass kind = CycleClass::Contractible;
  int cuff = -1;  // ring index for SurroundsCuff
};
CycleTopology surrounds_cuff(const EmbeddedGraph& g, const Cycle& c);

// Faces on one side of c that are free of rings: returns the sides (0/1) that bound an open
// disk disjoint from all rings.
std::vector<int> ring_free_sides(const EmbeddedGraph& g, const Cycle& c,
                                 const std::vector<int>& sides);

std::vector<int> bfs_distances(const EmbeddedGraph& g, VertexId s);
bool is_cycle_in(const EmbeddedGraph& g, const Cycle& c);

}  // namespace g5
