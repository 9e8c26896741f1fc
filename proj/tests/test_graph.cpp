#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "knotgraph/catalog.hpp"
#include "knotgraph/errors.hpp"
#include "knotgraph/graph.hpp"
#include "knotgraph/graph_io.hpp"
#include "support/oracles.hpp"

using namespace knotgraph;

TEST_CASE("edge list construction rejects loops, duplicates and range errors") {
  SimpleGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(1, 4), InvalidArgument);
  g.add_edge(2, 1);
  CHECK(g.has_edge(1, 2));
  CHECK_THROWS_AS(g.add_edge(1, 2), InvalidArgument);
  CHECK_THROWS_AS(g.remove_edge(2, 3), InvalidArgument);
  CHECK(SimpleGraph(5).size() == 0);
}

TEST_CASE("adjacency key packs the upper triangle most significant bit first") {
  CHECK(adjacency_key(SimpleGraph(3, {{1, 2}, {2, 3}})).str() == "n3:a0");
  CHECK(adjacency_key(complete_graph(3)).str() == "n3:e0");
  CHECK(adjacency_key(SimpleGraph(1)).str() == "n1:");
  // K4 has six pairs: 111111 then two padding zeros.
  CHECK(adjacency_key(complete_graph(4)).str() == "n4:fc");
  CHECK(canonical_key(complete_graph(4)).order() == 4);
}

TEST_CASE("canonical key is invariant under relabeling") {
  std::mt19937_64 rng(20240611);
  const SimpleGraph fixtures[] = {catalog::g14_25(), catalog::g9_28(), catalog::k3311(),
                                  catalog::two_star_complement(),
                                  catalog::g9_28_cousin1151(), complete_graph(3)};
  for (const auto& g : fixtures) {
    const CanonicalKey k = canonical_key(g);
    for (int trial = 0; trial < 100; ++trial) {
      const Permutation p = test_support::random_permutation(g.order(), rng);
      REQUIRE(canonical_key(relabel(g, p)) == k);
    }
  }
}

TEST_CASE("path and triangle get distinct keys") {
  CHECK(canonical_key(SimpleGraph(3, {{1, 2}, {2, 3}})) != canonical_key(complete_graph(3)));
}

TEST_CASE("isolated vertices are part of the identity") {
  CHECK(canonical_key(SimpleGraph(3, {{1, 2}})) != canonical_key(SimpleGraph(2, {{1, 2}})));
  const std::array<int, 2> parts{3, 3};
  CHECK_FALSE(are_isomorphic(complete_multipartite(parts),
                             disjoint_union(complete_graph(4), SimpleGraph(2))));
}

TEST_CASE("key equality agrees with brute-force isomorphism on small random graphs") {
  std::mt19937_64 rng(7);
  std::vector<SimpleGraph> pool;
  for (int i = 0; i < 60; ++i) {
    const int n = 4 + static_cast<int>(rng() % 4);
    pool.push_back(test_support::random_graph(n, 0.45, rng));
    // A relabeled copy guarantees positive pairs.
    pool.push_back(relabel(pool.back(), test_support::random_permutation(n, rng)));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      const bool brute = test_support::brute_isomorphic(pool[i], pool[j]);
      REQUIRE(are_isomorphic(pool[i], pool[j]) == brute);
      REQUIRE((canonical_key(pool[i]) == canonical_key(pool[j])) == brute);
    }
  }
}

TEST_CASE("regular and highly symmetric graphs canonicalize consistently") {
  std::mt19937_64 rng(99);
  // Petersen graph versus a 3-regular 10-vertex graph that is not Petersen.
  SimpleGraph petersen(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8},
                            {4, 9}, {5, 10}, {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
  SimpleGraph prism(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 7}, {3, 8},
                         {4, 9}, {5, 10}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 6}});
  CHECK_FALSE(are_isomorphic(petersen, prism));
  for (int t = 0; t < 50; ++t) {
    auto p = test_support::random_permutation(10, rng);
    CHECK(canonical_key(relabel(petersen, p)) == canonical_key(petersen));
    CHECK(canonical_key(relabel(prism, p)) == canonical_key(prism));
  }
  const std::array<int, 2> k33{3, 3};
  const SimpleGraph cube(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5},
                             {1, 5}, {2, 6}, {3, 7}, {4, 8}});
  for (int t = 0; t < 50; ++t) {
    CHECK(are_isomorphic(cube, relabel(cube, test_support::random_permutation(8, rng))));
    CHECK(are_isomorphic(complete_multipartite(k33),
                         relabel(complete_multipartite(k33),
                                 test_support::random_permutation(6, rng))));
  }
}

TEST_CASE("isomorphism is an equivalence on the fixture set") {
  std::mt19937_64 rng(3);
  const SimpleGraph a = catalog::two_star_complement();
  const SimpleGraph b = relabel(a, test_support::random_permutation(8, rng));
  const SimpleGraph c = relabel(b, test_support::random_permutation(8, rng));
  CHECK(are_isomorphic(a, a));
  CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
  CHECK(are_isomorphic(a, b));
  CHECK(are_isomorphic(b, c));
  CHECK(are_isomorphic(a, c));
  CHECK_FALSE(are_isomorphic(a, catalog::triangle_star_complement()));
}

TEST_CASE("automorphisms of the named graphs") {
  CHECK(is_automorphism(catalog::g9_28(), catalog::g9_28_delta()));
  CHECK(is_automorphism(catalog::g9_28(), catalog::g9_28_gamma()));
  CHECK(is_automorphism(catalog::g14_25(), catalog::g14_25_involution()));
  CHECK_FALSE(is_automorphism(catalog::g14_25(), Permutation::from_cycles(14, "(1,2)")));
  std::vector<Vertex> v{1, 2, 3, 4};
  do {
    CHECK(is_automorphism(complete_graph(4), Permutation(v)));
  } while (std::next_permutation(v.begin(), v.end()));
  for (const auto& g : {catalog::g14_25(), catalog::k3311(), SimpleGraph(4, {{1, 2}})}) {
    CHECK(is_automorphism(g, Permutation::identity(g.order())));
  }
}

TEST_CASE("complement") {
  const SimpleGraph g = catalog::g9_28();
  CHECK(g.order() == 9);
  CHECK(g.size() == 28);
  CHECK(complement(complement(g)) == g);
  CHECK(catalog::triangle_star_complement().size() == 22);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const SimpleGraph r = test_support::random_graph(9, 0.3, rng);
    CHECK(r.size() + complement(r).size() == 36);
    CHECK(complement(complement(r)) == r);
  }
}

TEST_CASE("permutations compose right to left") {
  const Permutation d = catalog::g9_28_delta();
  const Permutation c = catalog::g9_28_gamma();
  CHECK(d * c == c.inverse() * d);
  CHECK(c.pow(7).is_identity());
  CHECK(d.pow(2).is_identity());
  CHECK(c.to_cycles() == "(1,2,3,4,5,6,7)");
  CHECK(Permutation::from_cycles(4, "()").is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles(4, "(1,2)(2,3)"), ParseError);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
  const Permutation p = Permutation::from_cycles(5, "(1,2)");
  const Permutation q = Permutation::from_cycles(5, "(2,3)");
  CHECK((p * q)(3) == 1);
}

TEST_CASE("edge-list text round trip and diagnostics") {
  std::istringstream in(
      "# fixtures\n"
      "graph tri 3\n1 2\n2 3\n1 3\n\n"
      "graph lonely 4\n1 2\n");
  const auto gs = read_graphs(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].graph == complete_graph(3));
  CHECK(gs[1].graph.order() == 4);
  std::ostringstream out;
  write_graph(out, gs[1]);
  std::istringstream back(out.str());
  CHECK(read_graphs(back)[0].graph == gs[1].graph);

  auto bad = [](const char* text, int line) {
    std::istringstream s(text);
    try {
      read_graphs(s);
    } catch (const ParseError& e) {
      return e.line() == line;
    }
    return false;
  };
  CHECK(bad("graph g 3\n1 1\n", 2));
  CHECK(bad("graph g 3\n1 4\n", 2));
  CHECK(bad("graph g 3\n1 2\n2 1\n", 3));
  CHECK(bad("1 2\n", 1));
  CHECK(bad("graph g x\n", 1));
  CHECK(bad("graph g 3\n1 2 3\n", 2));
}

TEST_CASE("without_vertices keeps relative order") {
  const SimpleGraph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  const std::array<Vertex, 1> drop{3};
  const SimpleGraph h = g.without_vertices(drop);
  CHECK(h == SimpleGraph(4, {{1, 2}, {3, 4}, {1, 4}}));
}
