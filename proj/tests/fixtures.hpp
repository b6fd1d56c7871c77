#pragma once

#include "g5/io.hpp"

#include <string>

namespace g5::test {

inline EmbeddedGraph fixture(const std::string& name) {
  return read_graph_file(std::string(G5_FIXTURES) + "/" + name + ".g5").graph;
}

}  // namespace g5::test
