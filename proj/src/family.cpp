#include "knotgraph/family.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <ostream>
#include <string>
#include <thread>

#include "knotgraph/errors.hpp"

namespace knotgraph {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

struct Discovery {
  CanonicalKey key;
  SimpleGraph graph;
  bool is_child = false;
};

std::vector<Discovery> expand(const SimpleGraph& g) {
  std::vector<Discovery> out;
  for (const TriangleSite& t : triangle_sites(g)) {
    SimpleGraph c = delta_to_y(g, t);
    CanonicalKey k = canonical_key(c);
    out.push_back({std::move(k), std::move(c), true});
  }
  for (const YSite& y : y_sites(g)) {
    if (y.ybar) continue;
    SimpleGraph p = y_to_delta(g, y);
    CanonicalKey k = canonical_key(p);
    out.push_back({std::move(k), std::move(p), false});
  }
  return out;
}

std::string join(const KeySet& keys) {
  std::string s;
  for (const auto& k : keys) {
    if (!s.empty()) s += ',';
    s += k.str();
  }
  return s;
}

}  // namespace

std::vector<TriangleSite> triangle_sites(const SimpleGraph& g) {
  std::vector<TriangleSite> out;
  const int n = g.order();
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      if (!g.has_edge(a, b)) continue;
      std::uint64_t common = g.row(a) & g.row(b);
      common &= ~((bit(b) << 1) - 1);  // c > b only
      while (common) {
        Vertex c = std::countr_zero(common) + 1;
        common &= common - 1;
        out.push_back({{a, b, c}});
      }
    }
  }
  return out;
}

std::vector<YSite> y_sites(const SimpleGraph& g) {
  std::vector<YSite> out;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != 3) continue;
    auto nb = g.neighbors(v);
    YSite y{v, {nb[0], nb[1], nb[2]}, false};
    y.ybar = g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) ||
             g.has_edge(nb[1], nb[2]);
    out.push_back(y);
  }
  return out;
}

SimpleGraph delta_to_y(const SimpleGraph& g, const TriangleSite& t) {
  const auto& [a, b, c] = t.vertices;
  if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) {
    throw InvalidArgument("not a triangle of the graph");
  }
  if (g.order() + 1 > kMaxVertices) throw InvalidArgument("vertex limit reached");
  SimpleGraph h(g.order() + 1, g.edges());
  h.remove_edge(a, b);
  h.remove_edge(a, c);
  h.remove_edge(b, c);
  const Vertex w = g.order() + 1;
  h.add_edge(w, a);
  h.add_edge(w, b);
  h.add_edge(w, c);
  return h;
}

SimpleGraph y_to_delta(const SimpleGraph& g, const YSite& y) {
  const Vertex v = y.center;
  if (v < 1 || v > g.order()) throw InvalidArgument("center outside the graph");
  if (g.degree(v) != 3) {
    throw InvalidArgument("vertex " + std::to_string(v) + " does not have degree 3");
  }
  auto nb = g.neighbors(v);
  if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) || g.has_edge(nb[1], nb[2])) {
    throw RejectedYbar("Y at vertex " + std::to_string(v) + " is a Y-bar");
  }
  const int n = g.order();
  auto map = [&](Vertex w) { return w == n ? v : w; };
  SimpleGraph h(n - 1);
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    h.add_edge(map(e.u), map(e.v));
  }
  h.add_edge(map(nb[0]), map(nb[1]));
  h.add_edge(map(nb[0]), map(nb[2]));
  h.add_edge(map(nb[1]), map(nb[2]));
  return h;
}

const FamilyRecord& Family::at(const CanonicalKey& k) const {
  auto it = members.find(k);
  if (it == members.end()) throw InvalidArgument("key not in family: " + k.str());
  return it->second;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("KNOTGRAPH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Family enumerate_family(const SimpleGraph& seed, const FamilyOptions& opts) {
  Family f;
  const unsigned threads = opts.threads ? opts.threads : default_thread_count();
  f.seed = canonical_key(seed);
  const int m = seed.size();
  f.members.emplace(f.seed, FamilyRecord{f.seed, seed, {}, {}, seed.order(), m});
  std::vector<CanonicalKey> level{f.seed};

  while (!level.empty() && f.complete) {
    std::vector<std::vector<Discovery>> found(level.size());
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i < level.size(); i += step) {
        found[i] = expand(f.members.at(level[i]).representative);
      }
    };
    const std::size_t nthreads = std::min<std::size_t>(threads, level.size());
    if (nthreads <= 1) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(work, t, nthreads);
    }

    std::vector<CanonicalKey> next;
    for (std::size_t i = 0; i < level.size() && f.complete; ++i) {
      const CanonicalKey& from = level[i];
      for (Discovery& d : found[i]) {
        auto it = f.members.find(d.key);
        if (it == f.members.end()) {
          if (f.members.size() >= opts.cap) {
            f.complete = false;
            break;
          }
          const int n = d.graph.order();
          it = f.members
                   .emplace(d.key, FamilyRecord{d.key, std::move(d.graph), {}, {}, n, m})
                   .first;
          next.push_back(d.key);
        }
        FamilyRecord& src = f.members.at(from);
        if (d.is_child) {
          src.children.insert(d.key);
          it->second.parents.insert(from);
        } else {
          src.parents.insert(d.key);
          it->second.children.insert(from);
        }
      }
    }
    std::sort(next.begin(), next.end(), ByOrderThenKey{});
    level = std::move(next);
  }
  return f;
}

KeySet genealogy(const Family& f, const CanonicalKey& key, Relation r, bool inclusive) {
  const FamilyRecord& rec = f.at(key);
  if (r == Relation::Parents || r == Relation::Children) {
    KeySet out = r == Relation::Parents ? rec.parents : rec.children;
    if (inclusive) out.insert(key);
    return out;
  }
  if (!f.complete) throw InvalidArgument("closure queries need a complete family");
  const bool up = r == Relation::Ancestors;
  KeySet seen;
  std::deque<CanonicalKey> queue{key};
  while (!queue.empty()) {
    CanonicalKey k = queue.front();
    queue.pop_front();
    const FamilyRecord& cur = f.at(k);
    for (const auto& next : up ? cur.parents : cur.children) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  if (inclusive) seen.insert(key);
  return seen;
}

bool is_parentless(const FamilyRecord& r) {
  auto ys = y_sites(r.representative);
  return std::none_of(ys.begin(), ys.end(), [](const YSite& y) { return !y.ybar; });
}

bool is_childless(const FamilyRecord& r) { return triangle_sites(r.representative).empty(); }

std::size_t count_parentless(const Family& f) {
  return std::count_if(f.members.begin(), f.members.end(),
                       [](const auto& kv) { return is_parentless(kv.second); });
}

std::size_t count_childless(const Family& f) {
  return std::count_if(f.members.begin(), f.members.end(),
                       [](const auto& kv) { return is_childless(kv.second); });
}

std::size_t ybar_census(const Family& f) {
  return std::count_if(f.members.begin(), f.members.end(), [](const auto& kv) {
    auto ys = y_sites(kv.second.representative);
    return std::any_of(ys.begin(), ys.end(), [](const YSite& y) { return y.ybar; });
  });
}

void write_family(std::ostream& out, const Family& f) {
  for (const auto& [key, rec] : f.members) {
    out << key << ' ' << rec.n << ' ' << rec.m << " parents=" << join(rec.parents)
        << " children=" << join(rec.children) << '\n';
  }
}

}  // namespace knotgraph
