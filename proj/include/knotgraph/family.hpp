#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "knotgraph/graph.hpp"

namespace knotgraph {

/// A 3-clique, vertices ascending.
struct TriangleSite {
  std::array<Vertex, 3> vertices{};
  auto operator<=>(const TriangleSite&) const = default;
};

/// A degree-3 vertex and its neighbors (ascending). `ybar` is set when two
/// of the leaves are adjacent.
struct YSite {
  Vertex center = 0;
  std::array<Vertex, 3> leaves{};
  bool ybar = false;
  auto operator<=>(const YSite&) const = default;
};

std::vector<TriangleSite> triangle_sites(const SimpleGraph& g);
std::vector<YSite> y_sites(const SimpleGraph& g);

/// Replaces the triangle by a new vertex n+1 joined to its corners.
/// Throws InvalidArgument if `t` is not a triangle of g.
SimpleGraph delta_to_y(const SimpleGraph& g, const TriangleSite& t);

/// Removes the center and joins its leaves pairwise. Vertex n takes over
/// the center's label. Throws RejectedYbar on a Ȳ site and InvalidArgument
/// when the center does not have degree 3. The site is re-read from g.
SimpleGraph y_to_delta(const SimpleGraph& g, const YSite& y);

using KeySet = std::set<CanonicalKey, ByOrderThenKey>;

struct FamilyRecord {
  CanonicalKey key;
  SimpleGraph representative;
  KeySet parents;
  KeySet children;
  int n = 0;
  int m = 0;
};

struct Family {
  std::map<CanonicalKey, FamilyRecord, ByOrderThenKey> members;
  CanonicalKey seed;
  bool complete = true;

  std::size_t size() const { return members.size(); }
  bool contains(const CanonicalKey& k) const { return members.contains(k); }
  /// Throws InvalidArgument for an unknown key.
  const FamilyRecord& at(const CanonicalKey& k) const;
};

struct FamilyOptions {
  std::size_t cap = 200000;
  /// 0 means: KNOTGRAPH_THREADS if set, otherwise the hardware count.
  unsigned threads = 0;
};

/// Breadth-first closure of `seed` under ∇Y and non-Ȳ Y∇ moves. Levels are
/// expanded in (n, key) order, so the result does not depend on the thread
/// count. When adding a member would exceed the cap, the search stops and
/// `complete` is false.
Family enumerate_family(const SimpleGraph& seed, const FamilyOptions& opts = {});

unsigned default_thread_count();

enum class Relation { Parents, Children, Ancestors, Descendants };

/// Keys related to `key`. Ancestors/descendants are transitive closures;
/// `inclusive` adds `key` itself. Closures require a complete family.
KeySet genealogy(const Family& f, const CanonicalKey& key, Relation r,
                 bool inclusive = false);

/// No non-Ȳ degree-3 vertex.
bool is_parentless(const FamilyRecord& r);
/// No triangle.
bool is_childless(const FamilyRecord& r);

std::size_t count_parentless(const Family& f);
std::size_t count_childless(const Family& f);
/// Members with at least one Ȳ site.
std::size_t ybar_census(const Family& f);

/// `<key> <n> <m> parents=<k1,...> children=<...>` per member, by (n, key).
void write_family(std::ostream& out, const Family& f);

}  // namespace knotgraph
