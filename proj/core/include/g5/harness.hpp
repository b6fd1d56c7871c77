#pragma once

#include "g5/catalog.hpp"
#include "g5/graph.hpp"

#include <functional>
#include <string>
#include <vector>

namespace g5 {

// The configuration drawn inside a facial ring. Half-edges reach the ring through a leaf,
// other low-degree outer vertices through a path of length two.
struct CanonicalHost {
  EmbeddedGraph graph;
  std::vector<VertexId> of_catalog;  // catalog vertex -> host vertex
};
CanonicalHost canonical_host(const Configuration& c, int min_ring = 5);

struct CorpusSpec {
  int ring_length = 5;
  int max_n = 10;
  int girth = 5;
  bool critical_only = false;  // keep only R-critical graphs
};

// Minimum code over all ring-rooted traversals, both orientations; equal codes mean
// isomorphic embeddings with the ring mapped onto the ring.
std::vector<int> canonical_code(const EmbeddedGraph& g);

// All 2-connected plane graphs of the given girth with one facial ring of length l and at most
// max_n vertices, one per isomorphism class, ordered by (n, m, code).
std::vector<EmbeddedGraph> enumerate_corpus(const CorpusSpec& spec);

}  // namespace g5
