#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "knotgraph/catalog.hpp"
#include "knotgraph/errors.hpp"
#include "knotgraph/family.hpp"
#include "support/oracles.hpp"

using namespace knotgraph;

namespace {

SimpleGraph star3() { return SimpleGraph(4, {{1, 2}, {1, 3}, {1, 4}}); }

// Checks the structural invariants every enumerated family must satisfy.
void check_family_invariants(const Family& f, int m) {
  for (const auto& [key, rec] : f.members) {
    CHECK(rec.m == m);
    CHECK(rec.representative.size() == m);
    CHECK(canonical_key(rec.representative) == key);
    for (const auto& c : rec.children) {
      REQUIRE(f.contains(c));
      CHECK(f.at(c).parents.contains(key));
      CHECK(f.at(c).n == rec.n + 1);
    }
    for (const auto& p : rec.parents) {
      REQUIRE(f.contains(p));
      CHECK(f.at(p).children.contains(key));
      CHECK(f.at(p).n == rec.n - 1);
    }
  }
}

}  // namespace

TEST_CASE("triangle sites") {
  CHECK(triangle_sites(complete_graph(4)).size() == 4);
  const std::array<int, 2> k33{3, 3};
  CHECK(triangle_sites(complete_multipartite(k33)).empty());
  CHECK(triangle_sites(complete_graph(7)).size() == 35);
}

TEST_CASE("y sites and the Y-bar flag") {
  auto k4 = y_sites(complete_graph(4));
  CHECK(k4.size() == 4);
  CHECK(std::all_of(k4.begin(), k4.end(), [](const YSite& y) { return y.ybar; }));
  auto st = y_sites(star3());
  REQUIRE(st.size() == 1);
  CHECK(st[0].center == 1);
  CHECK_FALSE(st[0].ybar);
  CHECK(y_sites(complete_graph(7)).empty());
}

TEST_CASE("delta to Y") {
  const SimpleGraph k3 = complete_graph(3);
  const SimpleGraph y = delta_to_y(k3, {{1, 2, 3}});
  CHECK(y == SimpleGraph(4, {{1, 4}, {2, 4}, {3, 4}}));
  CHECK(are_isomorphic(y, star3()));

  const SimpleGraph h8 = delta_to_y(complete_graph(7), {{1, 2, 3}});
  CHECK(h8.order() == 8);
  CHECK(h8.size() == 21);
  // Three corners lose two edges and gain one; the new vertex has degree 3.
  CHECK(test_support::degree_sequence(h8) == std::vector<int>{3, 5, 5, 5, 6, 6, 6, 6});

  CHECK_THROWS_AS(delta_to_y(star3(), {{2, 3, 4}}), InvalidArgument);
  for (const auto& g : {complete_graph(7), catalog::k3311(), catalog::g9_28()}) {
    for (const auto& t : triangle_sites(g)) CHECK(delta_to_y(g, t).size() == g.size());
  }
}

TEST_CASE("Y to delta") {
  CHECK(y_to_delta(star3(), y_sites(star3())[0]) == SimpleGraph(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK_THROWS_AS(y_to_delta(complete_graph(4), y_sites(complete_graph(4))[0]), RejectedYbar);
  CHECK_THROWS_AS(y_to_delta(complete_graph(5), YSite{1, {2, 3, 4}, false}), InvalidArgument);

  // The last vertex moves into the gap left by the center.
  const SimpleGraph g(5, {{2, 1}, {2, 3}, {2, 4}, {4, 5}});
  const SimpleGraph h = y_to_delta(g, YSite{2, {1, 3, 4}, false});
  CHECK(h == SimpleGraph(4, {{1, 3}, {1, 4}, {3, 4}, {2, 4}}));
}

TEST_CASE("delta-Y then Y-delta at the new vertex is the identity up to isomorphism") {
  for (const auto& g : {complete_graph(7), catalog::k3311()}) {
    for (const auto& t : triangle_sites(g)) {
      const SimpleGraph c = delta_to_y(g, t);
      const auto ys = y_sites(c);
      auto it = std::find_if(ys.begin(), ys.end(),
                             [&](const YSite& y) { return y.center == c.order(); });
      REQUIRE(it != ys.end());
      if (it->ybar) continue;
      CHECK(are_isomorphic(y_to_delta(c, *it), g));
    }
  }
}

TEST_CASE("K7 family") {
  const Family f = enumerate_family(complete_graph(7));
  CHECK(f.complete);
  CHECK(f.size() == 20);
  CHECK(genealogy(f, f.seed, Relation::Descendants, true).size() == 14);
  CHECK(genealogy(f, f.seed, Relation::Descendants).size() == 13);
  CHECK(genealogy(f, f.seed, Relation::Ancestors).empty());
  CHECK(ybar_census(f) == 0);
  check_family_invariants(f, 21);
  // H8 is the only child of K7.
  const SimpleGraph h8 = delta_to_y(complete_graph(7), {{1, 2, 3}});
  CHECK(f.at(f.seed).children == KeySet{canonical_key(h8)});
}

TEST_CASE("K3311 family") {
  const Family f = enumerate_family(catalog::k3311());
  CHECK(f.size() == 58);
  CHECK(count_parentless(f) == 4);
  CHECK(count_childless(f) == 4);
  CHECK(ybar_census(f) == 0);
  check_family_invariants(f, 22);
  // Structural status agrees with the recorded links in a complete family.
  for (const auto& [k, rec] : f.members) {
    CHECK(is_parentless(rec) == rec.parents.empty());
    CHECK(is_childless(rec) == rec.children.empty());
  }
}

TEST_CASE("trivial and Y-bar families") {
  CHECK(enumerate_family(SimpleGraph(1)).size() == 1);
  CHECK(ybar_census(enumerate_family(complete_graph(4))) > 0);
}

TEST_CASE("enumeration is deterministic and thread-count independent") {
  const Family a = enumerate_family(catalog::k3311(), {.cap = 200000, .threads = 1});
  const Family b = enumerate_family(catalog::k3311(), {.cap = 200000, .threads = 4});
  std::ostringstream ea, eb;
  write_family(ea, a);
  write_family(eb, b);
  CHECK(ea.str() == eb.str());
  for (const auto& [k, rec] : a.members) CHECK(rec.representative == b.at(k).representative);
}

TEST_CASE("cap truncation") {
  const Family f = enumerate_family(catalog::k3311(), {.cap = 10, .threads = 2});
  CHECK_FALSE(f.complete);
  CHECK(f.size() == 10);
  CHECK_THROWS_AS(genealogy(f, f.seed, Relation::Descendants), InvalidArgument);
  CHECK_THROWS_AS(f.at(canonical_key(complete_graph(3))), InvalidArgument);
}

TEST_CASE("export format") {
  const Family f = enumerate_family(complete_graph(7));
  std::ostringstream out;
  write_family(out, f);
  std::istringstream in(out.str());
  std::string line;
  int lines = 0;
  int prev_n = 0;
  while (std::getline(in, line)) {
    ++lines;
    std::istringstream ls(line);
    std::string key, parents, children;
    int n = 0, m = 0;
    ls >> key >> n >> m >> parents >> children;
    CHECK(m == 21);
    CHECK(n >= prev_n);
    prev_n = n;
    CHECK(parents.rfind("parents=", 0) == 0);
    CHECK(children.rfind("children=", 0) == 0);
    CHECK(key.rfind("n" + std::to_string(n) + ":", 0) == 0);
  }
  CHECK(lines == 20);
}
