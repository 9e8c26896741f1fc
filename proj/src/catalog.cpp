#include "knotgraph/catalog.hpp"

#include <array>

namespace knotgraph::catalog {

SimpleGraph k3311() {
  const std::array<int, 4> parts{3, 3, 1, 1};
  return complete_multipartite(parts);
}

SimpleGraph g9_28() {
  SimpleGraph c = disjoint_union(cycle_graph(7), SimpleGraph(2, {{1, 2}}));
  return complement(c);
}

Permutation g9_28_delta() { return Permutation::from_cycles(9, "(1,5)(2,4)(6,7)"); }
Permutation g9_28_gamma() { return Permutation::from_cycles(9, "(1,2,3,4,5,6,7)"); }

SimpleGraph g14_25() {
  return SimpleGraph(14, {{1, 6},  {1, 9},  {1, 10}, {1, 11}, {2, 6},  {2, 7},  {2, 8},
                          {2, 14}, {3, 10}, {3, 12}, {3, 13}, {4, 6},  {4, 7},  {4, 9},
                          {4, 11}, {5, 7},  {5, 8},  {5, 10}, {5, 14}, {6, 13}, {7, 12},
                          {8, 11}, {8, 13}, {9, 12}, {9, 14}});
}

Permutation g14_25_involution() {
  return Permutation::from_cycles(14, "(1,5)(2,4)(6,7)(8,9)(11,14)(12,13)");
}

SimpleGraph e9e_cousin41() {
  return SimpleGraph(10, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {2, 8}, {2, 10},
                          {3, 6}, {3, 7}, {3, 8}, {3, 9}, {4, 8}, {4, 9}, {4, 10}, {5, 7},
                          {5, 9}, {6, 9}, {6, 10}, {7, 9}, {7, 10}, {8, 9}});
}

SimpleGraph e9e_cousin47() {
  return SimpleGraph(10, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {2, 8}, {2, 10},
                          {3, 6}, {3, 7}, {3, 8}, {4, 8}, {4, 9}, {4, 10}, {5, 7}, {5, 8},
                          {5, 9}, {5, 10}, {6, 9}, {7, 9}, {7, 10}, {8, 9}});
}

SimpleGraph e9e_cousin50() {
  return SimpleGraph(10, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 10}, {2, 5}, {2, 6}, {2, 8},
                          {2, 10}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {4, 8}, {4, 9}, {4, 10},
                          {5, 7}, {5, 8}, {5, 9}, {6, 9}, {7, 9}, {7, 10}});
}

SimpleGraph two_star_complement() {
  return complement(SimpleGraph(8, {{1, 2}, {1, 3}, {1, 4}, {5, 6}, {5, 7}, {5, 8}}));
}

SimpleGraph triangle_star_complement() {
  return complement(SimpleGraph(8, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {4, 6}, {4, 7}}));
}

SimpleGraph g9_28_cousin1151() {
  return SimpleGraph(16, {{1, 8},  {1, 9},   {1, 10},  {1, 11},  {2, 12},  {2, 13}, {2, 14},
                          {3, 7},  {3, 9},   {3, 10},  {3, 15},  {4, 8},   {4, 9},  {4, 11},
                          {4, 12}, {5, 10},  {5, 13},  {5, 16},  {6, 11},  {6, 14}, {6, 15},
                          {7, 8},  {7, 12},  {7, 16},  {8, 13},  {8, 15},  {9, 14}, {9, 16}});
}

namespace {

MinorOp D(Vertex u, Vertex v) { return {MinorOp::Kind::Delete, Edge(u, v)}; }
MinorOp C(Vertex u, Vertex v) { return {MinorOp::Kind::Contract, Edge(u, v)}; }

}  // namespace

std::vector<ApexTableEntry> g14_25_apex_table() {
  return {
      {D(1, 6), {{2, 3}}},
      {C(1, 6), {{1, 6}}},
      {D(1, 9), {{2, 4}}},
      {C(1, 9), {{1, 2}}},
      {D(1, 10), {{2, 4}}},
      {C(1, 10), {{2, 4}}},
      {D(1, 11), {{2, 3}}},
      {C(1, 11), {{1, 7}}},
      {D(2, 6), {{1, 7}}},
      {C(2, 6), {{2, 3}}},
      {D(2, 7), {{1, 3}}},
      {C(2, 7), {{1, 2}}},
      {D(2, 8), {{3, 5}}},
      {C(2, 8), {{1, 3}}},
      {D(2, 14), {{1, 3}}},
      {C(2, 14), {{1, 2}}},
      {D(3, 10), {{2, 4}}},
      {C(3, 10), {{2, 4}}},
      {D(3, 12), {{1, 2}}},
      {C(3, 12), {{3, 4}}},
      {D(6, 13), {{1, 7}}},
      {C(6, 13), {{2, 5}}},
      {D(8, 11), {{1, 7}}},
      {C(8, 11), {{2, 3}}},
      {D(8, 13), {{2, 3}}},
      {C(8, 13), {{1, 7}}},
  };
}

std::vector<ApexTableEntry> cousin1151_apex_table() {
  return {
      {D(1, 8), {{4, 5}}},
      {C(1, 8), {{1, 2}}},
      {D(1, 9), {{4, 14}}},
      {C(1, 9), {{1, 2}}},
      {D(1, 10), {{2, 8}}},
      {C(1, 10), {{4, 14}}},
      {D(1, 11), {{2, 3}}},
      {C(1, 11), {{5, 14}}},
      {D(2, 12), {{1, 3}}},
      {C(2, 12), {{2, 8}}},
      {D(2, 13), {{1, 7}}},
      {C(2, 13), {{1, 2}}},
      {D(2, 14), {{1, 5}}},
      {C(2, 14), {{2, 3}}},
      {D(3, 7), {{1, 2}}},
      {C(3, 7), {{3, 4}}},
      {D(3, 9), {{6, 7}}},
      {C(3, 9), {{1, 2}}},
      {D(3, 10), {{2, 4}}},
      {C(3, 10), {{3, 8}}},
      {D(3, 15), {{1, 9}}},
      {C(3, 15), {{2, 3}}},
      {D(4, 8), {{7, 13}}},
      {C(4, 8), {{2, 3}}},
      {D(4, 9), {{1, 7}}},
      {C(4, 9), {{2, 3}}},
      {D(4, 11), {{2, 3}}},
      {C(4, 11), {{7, 13}}},
      {D(4, 12), {{2, 8}}},
      {C(4, 12), {{1, 13}}},
      {D(5, 10), {{3, 8}}},
      {C(5, 10), std::nullopt},
      {D(5, 13), {{1, 2}}},
      {C(5, 13), {{5, 6}}},
      {D(5, 16), {{1, 2}}},
      {C(5, 16), std::nullopt},
      {D(6, 11), {{5, 7}}},
      {C(6, 11), {{2, 3}}},
      {D(6, 14), {{1, 7}}},
      {C(6, 14), {{5, 6}}},
      {D(6, 15), {{1, 7}}},
      {C(6, 15), {{6, 7}}},
      {D(7, 8), {{3, 4}}},
      {C(7, 8), {{1, 2}}},
      {D(7, 12), {{1, 9}}},
      {C(7, 12), {{3, 14}}},
      {D(7, 16), {{3, 4}}},
      {C(7, 16), {{1, 2}}},
      {D(8, 13), {{1, 2}}},
      {C(8, 13), {{3, 4}}},
      {D(8, 15), {{2, 3}}},
      {C(8, 15), {{1, 9}}},
      {D(9, 14), {{2, 3}}},
      {C(9, 14), {{1, 7}}},
      {D(9, 16), {{1, 2}}},
      {C(9, 16), {{6, 13}}},
  };
}

}  // namespace knotgraph::catalog
