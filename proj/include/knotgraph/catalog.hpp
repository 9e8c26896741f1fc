#pragma once

#include <array>
#include <optional>
#include <vector>

#include "knotgraph/graph.hpp"
#include "knotgraph/minor.hpp"

namespace knotgraph::catalog {

/// K_{3,3,1,1}.
SimpleGraph k3311();
/// Complement of the 7-cycle 1..7 together with the edge (8,9).
SimpleGraph g9_28();
/// (1,5)(2,4)(6,7) on 9 points.
Permutation g9_28_delta();
/// (1,2,3,4,5,6,7) on 9 points.
Permutation g9_28_gamma();

/// The 14-vertex, 25-edge graph with its involution.
SimpleGraph g14_25();
Permutation g14_25_involution();

/// Parentless 10-vertex members of the E9+e family, by edge list.
SimpleGraph e9e_cousin41();
SimpleGraph e9e_cousin47();
SimpleGraph e9e_cousin50();

/// 8-vertex graph whose complement is two disjoint 4-vertex stars.
SimpleGraph two_star_complement();
/// 8-vertex graph whose complement is a triangle plus a 4-vertex star.
SimpleGraph triangle_star_complement();

/// Childless 16-vertex cousin of G9,28 whose 56 minors are tabulated with
/// apex pairs; edge list read off that table.
SimpleGraph g9_28_cousin1151();

/// A published (minor, apex pair) entry; no pair means "not 2-apex".
struct ApexTableEntry {
  MinorOp op;
  std::optional<std::array<Vertex, 2>> apex;
};

/// The 26 minors of G14,25 up to its involution.
std::vector<ApexTableEntry> g14_25_apex_table();
/// All 56 minors of Cousin 1151 in its own labels.
std::vector<ApexTableEntry> cousin1151_apex_table();

}  // namespace knotgraph::catalog
