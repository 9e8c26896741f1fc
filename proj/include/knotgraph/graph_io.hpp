#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "knotgraph/graph.hpp"

namespace knotgraph {

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

/// Reads every `graph <name> <n>` block from an edge-list stream. Lines
/// starting with '#' are comments; a blank line ends a block.
std::vector<NamedGraph> read_graphs(std::istream& in);
std::vector<NamedGraph> read_graph_file(const std::string& path);
/// First block of the file, or the block named `name` when non-empty.
NamedGraph read_graph(const std::string& path, const std::string& name = "");

void write_graph(std::ostream& out, const NamedGraph& g);

}  // namespace knotgraph
