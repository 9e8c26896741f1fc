#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knotgraph/graph.hpp"

namespace knotgraph {

struct MinorOp {
  enum class Kind { Delete, Contract };
  Kind kind = Kind::Delete;
  Edge edge;

  /// "G-(u,v)" or "G/(u,v)".
  std::string str() const;
  auto operator<=>(const MinorOp&) const = default;
};

/// Throws InvalidArgument if the edge is absent.
SimpleGraph delete_edge(const SimpleGraph& g, Edge e);

/// Contracts (a,b), a < b. The merged vertex keeps label a and vertex n
/// takes over label b. Parallel edges collapse. Throws InvalidArgument if
/// the edge is absent.
SimpleGraph contract_edge(const SimpleGraph& g, Edge e);

SimpleGraph apply(const SimpleGraph& g, const MinorOp& op);

/// Rotation[v - 1] lists the neighbors of v in clockwise order.
using RotationSystem = std::vector<std::vector<Vertex>>;

struct PlanarityResult {
  bool planar = false;
  /// Set when planar.
  RotationSystem rotation;
  /// Set when not planar: edges of a subdivided K5 or K3,3.
  std::vector<Edge> kuratowski;
};

PlanarityResult planarity(const SimpleGraph& g);
bool is_planar(const SimpleGraph& g);

/// Number of faces traced by the rotation system, or nullopt when the
/// rotation does not list exactly each vertex's neighbors.
std::optional<int> count_faces(const SimpleGraph& g, const RotationSystem& rot);

/// Checks V - E + F = 2 on every component with an edge.
bool verify_rotation_system(const SimpleGraph& g, const RotationSystem& rot);

/// Checks that the edges lie in g and form a subdivision of K5 or K3,3.
bool verify_kuratowski(const SimpleGraph& g, const std::vector<Edge>& edges);

/// Checks whichever witness the result carries.
bool verify_planarity_result(const SimpleGraph& g, const PlanarityResult& r);

struct ApexCertificate {
  std::vector<Vertex> removed;
  auto operator<=>(const ApexCertificate&) const = default;
};

/// Lexicographically first k-subset whose removal leaves a planar graph.
std::optional<ApexCertificate> find_apex_set(const SimpleGraph& g, int k);

/// g minus the removed vertices is planar, with a verified rotation system.
bool verify_apex_certificate(const SimpleGraph& g, const ApexCertificate& c);

struct MinorWitness {
  /// branch_sets[i] is the host vertex set for pattern vertex i + 1.
  std::vector<std::vector<Vertex>> branch_sets;
  /// Host edge realizing each pattern edge, in the pattern's edge order.
  std::vector<std::pair<Edge, Edge>> edge_map;
};

enum class MinorVerdict { Found, Absent, Inconclusive };

struct MinorResult {
  MinorVerdict verdict = MinorVerdict::Inconclusive;
  std::optional<MinorWitness> witness;
};

/// Searches for h as a minor of g by vertex deletions and edge contractions,
/// tracking branch sets. `budget` bounds the number of search nodes; running
/// out yields Inconclusive.
MinorResult has_minor(const SimpleGraph& g, const SimpleGraph& h,
                      std::size_t budget = 2'000'000);

/// Branch sets disjoint, nonempty and connected; every mapped edge lies in
/// g between the right branch sets; every pattern edge mapped.
bool verify_minor_witness(const SimpleGraph& g, const SimpleGraph& h, const MinorWitness& w);

struct MinorReport {
  MinorOp op;
  SimpleGraph minor;
  std::optional<ApexCertificate> apex;
  /// Planarity of the minor with the apex vertices removed, when found.
  PlanarityResult witness;
};

/// Edge orbits of the group generated by `symmetries`, each orbit as a
/// sorted list; orbits ordered by their smallest edge. Throws
/// InvalidArgument if a permutation is not an automorphism.
std::vector<std::vector<Edge>> edge_orbits(const SimpleGraph& g,
                                           const std::vector<Permutation>& symmetries);

/// Every G-e and G/e (edges taken from orbit representatives when
/// symmetries are given), each searched for a k-apex set. Minors are
/// checked on `threads` workers; output order is deletion then contraction
/// per edge, edges ascending.
std::vector<MinorReport> sweep_minors(const SimpleGraph& g, int k,
                                      const std::vector<Permutation>& symmetries = {},
                                      unsigned threads = 0);

}  // namespace knotgraph
