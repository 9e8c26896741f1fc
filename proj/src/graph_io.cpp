#include "knotgraph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "knotgraph/errors.hpp"

namespace knotgraph {

namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::vector<NamedGraph> read_graphs(std::istream& in) {
  std::vector<NamedGraph> out;
  std::string line;
  int lineno = 0;
  bool open = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) {
      open = false;
      continue;
    }
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "graph") {
      std::string name;
      int n = -1;
      if (!(ls >> name >> n) || n < 1) {
        throw ParseError(lineno, "expected 'graph <name> <n>' with n >= 1");
      }
      if (n > kMaxVertices) {
        throw ParseError(lineno, "graph '" + name + "' exceeds " +
                                     std::to_string(kMaxVertices) + " vertices");
      }
      out.push_back({name, SimpleGraph(n)});
      open = true;
      continue;
    }
    if (!open) throw ParseError(lineno, "edge line outside a graph block");
    std::istringstream es(line);
    long u = 0;
    long v = 0;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) {
      throw ParseError(lineno, "expected 'u v', got '" + line + "'");
    }
    SimpleGraph& g = out.back().graph;
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > g.order() || v > g.order()) {
      throw ParseError(lineno, "endpoint outside 1.." + std::to_string(g.order()));
    }
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(lineno, "duplicate edge " + line);
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return out;
}

std::vector<NamedGraph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  return read_graphs(in);
}

NamedGraph read_graph(const std::string& path, const std::string& name) {
  auto all = read_graph_file(path);
  for (auto& g : all) {
    if (name.empty() || g.name == name) return g;
  }
  if (name.empty()) throw Error("no graph block in '" + path + "'");
  throw Error("no graph named '" + name + "' in '" + path + "'");
}

void write_graph(std::ostream& out, const NamedGraph& g) {
  out << "graph " << g.name << ' ' << g.graph.order() << '\n';
  for (const Edge& e : g.graph.edges()) out << e.u << ' ' << e.v << '\n';
  out << '\n';
}

}  // namespace knotgraph
