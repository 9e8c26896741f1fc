#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls the routine it is meant to check.

#include <optional>
#include <random>
#include <vector>

#include "knotgraph/graph.hpp"

namespace test_support {

using knotgraph::Permutation;
using knotgraph::SimpleGraph;
using knotgraph::Vertex;

Permutation random_permutation(int n, std::mt19937_64& rng);
SimpleGraph random_graph(int n, double p, std::mt19937_64& rng);

/// Tries all n! bijections.
bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// Sorted degree sequence.
std::vector<int> degree_sequence(const SimpleGraph& g);

/// Quotient by merging a and b into a, then moving vertex n onto label b.
/// Built from an explicit label map and an edge set, no shared code.
SimpleGraph quotient_oracle(const SimpleGraph& g, Vertex a, Vertex b);

/// Planarity by Wagner: searches for a K5 or K3,3 minor by assigning every
/// vertex to one of the branch sets or to "unused". Exponential; n <= 8.
bool brute_planar(const SimpleGraph& g);

/// Whether h is a minor of g by exhaustive branch-set assignment.
/// Exponential; intended for |V(g)| <= 8.
bool brute_has_minor(const SimpleGraph& g, const SimpleGraph& h);

}  // namespace test_support
