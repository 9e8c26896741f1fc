#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace knotgraph {

/// Vertex labels are 1-based throughout.
using Vertex = int;

/// Graphs are stored as 64-bit adjacency rows.
inline constexpr int kMaxVertices = 64;

/// An undirected edge, always normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Finite simple undirected graph on the vertices 1..n.
///
/// Isolated vertices are part of the graph: two graphs that differ only in
/// the number of isolated vertices are different graphs.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::span<const Edge> edges);
  SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;

  bool has_edge(Vertex a, Vertex b) const;
  /// Throws InvalidArgument on a loop, an out-of-range endpoint or a
  /// duplicate edge.
  void add_edge(Vertex a, Vertex b);
  /// Throws InvalidArgument if the edge is absent.
  void remove_edge(Vertex a, Vertex b);

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Bit (w - 1) is set iff w is adjacent to v.
  std::uint64_t row(Vertex v) const { return adj_[v - 1]; }

  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Induced subgraph on the vertices not in `removed`, relabeled to
  /// 1..n-k preserving relative order.
  SimpleGraph without_vertices(std::span<const Vertex> removed) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

std::ostream& operator<<(std::ostream& os, const SimpleGraph& g);

/// Token identifying an isomorphism class: "n<k>:" followed by the hex dump
/// of the canonical upper-triangular adjacency bitstring.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string text) : text_(std::move(text)) {}

  const std::string& str() const { return text_; }
  /// Vertex count encoded in the key.
  int order() const;

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string text_;
};

std::ostream& operator<<(std::ostream& os, const CanonicalKey& k);

/// Orders keys by (vertex count, key text).
struct ByOrderThenKey {
  bool operator()(const CanonicalKey& a, const CanonicalKey& b) const;
};

/// A bijection of {1..n}.
class Permutation {
 public:
  Permutation() = default;
  /// images[i - 1] is the image of i. Throws InvalidArgument unless the
  /// array is a bijection of 1..n.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int n);
  /// Parses disjoint-cycle notation such as "(1,5)(2,4)(6,7)" on n points.
  /// "()" is the identity. Throws ParseError.
  static Permutation from_cycles(int n, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const;
  const std::vector<Vertex>& images() const { return images_; }

  /// (p * q)(v) = p(q(v)).
  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  Permutation pow(int k) const;
  bool is_identity() const;

  /// Disjoint-cycle notation; fixed points omitted; "()" for identity.
  std::string to_cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

/// Image of g under p: edge {u,v} becomes {p(u), p(v)}.
SimpleGraph relabel(const SimpleGraph& g, const Permutation& p);

/// Canonical labeling of g. Position k of the result holds the vertex of g
/// that receives canonical label k + 1.
std::vector<Vertex> canonical_labeling(const SimpleGraph& g);
/// g relabeled by its canonical labeling.
SimpleGraph canonical_form(const SimpleGraph& g);
CanonicalKey canonical_key(const SimpleGraph& g);
/// Hex-encoded key of a labeled graph as is, without canonicalization.
CanonicalKey adjacency_key(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h);
bool is_automorphism(const SimpleGraph& g, const Permutation& p);
SimpleGraph complement(const SimpleGraph& g);

/// Disjoint union; vertices of h are shifted by g.order().
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
/// Complete multipartite graph; parts are numbered consecutively.
SimpleGraph complete_multipartite(std::span<const int> parts);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);

}  // namespace knotgraph
