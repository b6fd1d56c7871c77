#pragma once

#include "g5/graph.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace g5 {

using Precoloring = std::map<VertexId, int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct GraphFile {
  EmbeddedGraph graph;
  Precoloring precolor;
};

GraphFile parse_graph(const std::string& text);
GraphFile read_graph_file(const std::string& path);
std::string serialize(const EmbeddedGraph& g, const Precoloring& precolor = {});

// "v=c,v=c" with colours 1..3
Precoloring parse_precolor_spec(const std::string& spec);

}  // namespace g5
