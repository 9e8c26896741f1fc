#include "knotgraph/minor.hpp"

#include <algorithm>
#include <bit>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

#include "knotgraph/errors.hpp"
#include "knotgraph/family.hpp"

namespace knotgraph {

std::string MinorOp::str() const {
  return std::string(kind == Kind::Delete ? "G-(" : "G/(") + std::to_string(edge.u) + "," +
         std::to_string(edge.v) + ")";
}

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
  SimpleGraph h = g;
  h.remove_edge(e.u, e.v);
  return h;
}

SimpleGraph contract_edge(const SimpleGraph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw InvalidArgument("edge not in graph");
  const int n = g.order();
  const Vertex a = e.u;
  const Vertex b = e.v;
  auto image = [&](Vertex x) {
    if (x == b) return a;
    return x == n ? b : x;
  };
  SimpleGraph h(n - 1);
  for (const Edge& f : g.edges()) {
    const Vertex x = image(f.u);
    const Vertex y = image(f.v);
    if (x != y && !h.has_edge(x, y)) h.add_edge(x, y);
  }
  return h;
}

SimpleGraph apply(const SimpleGraph& g, const MinorOp& op) {
  return op.kind == MinorOp::Kind::Delete ? delete_edge(g, op.edge) : contract_edge(g, op.edge);
}

// ---------------------------------------------------------------- planarity

namespace {

// Runs the Boyer-Myrvold test; collects the embedding or the Kuratowski
// edges only when asked to.
PlanarityResult boyer_myrvold(const SimpleGraph& g, bool witness) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;

  const int n = g.order();
  BGraph bg(n);
  int idx = 0;
  for (const Edge& e : g.edges()) {
    auto [d, ok] = boost::add_edge(e.u - 1, e.v - 1, bg);
    boost::put(boost::edge_index, bg, d, idx++);
  }
  PlanarityResult r;
  if (!witness) {
    r.planar = boost::boyer_myrvold_planarity_test(bg);
    return r;
  }
  std::vector<std::vector<EdgeDesc>> embedding(n);
  std::vector<EdgeDesc> kuratowski;
  r.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (r.planar) {
    r.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
      for (const EdgeDesc& d : embedding[v]) {
        const int s = static_cast<int>(boost::source(d, bg));
        const int t = static_cast<int>(boost::target(d, bg));
        r.rotation[v].push_back((s == v ? t : s) + 1);
      }
    }
  } else {
    for (const EdgeDesc& d : kuratowski) {
      r.kuratowski.emplace_back(static_cast<Vertex>(boost::source(d, bg)) + 1,
                                static_cast<Vertex>(boost::target(d, bg)) + 1);
    }
    std::sort(r.kuratowski.begin(), r.kuratowski.end());
  }
  return r;
}

}  // namespace

PlanarityResult planarity(const SimpleGraph& g) {
  PlanarityResult r = boyer_myrvold(g, true);
  if (r.planar) return r;
  // The reported edge set can carry extra edges. Dropping every edge whose
  // removal keeps the subgraph nonplanar leaves an edge-minimal nonplanar
  // subgraph, i.e. a subdivided K5 or K3,3.
  std::vector<Edge> keep = r.kuratowski;
  for (std::size_t i = 0; i < keep.size();) {
    SimpleGraph trial(g.order());
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != i) trial.add_edge(keep[j].u, keep[j].v);
    if (boyer_myrvold(trial, false).planar) {
      ++i;
    } else {
      keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  r.kuratowski = std::move(keep);
  return r;
}

bool is_planar(const SimpleGraph& g) {
  const int n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return false;
  return boyer_myrvold(g, false).planar;
}

std::optional<int> count_faces(const SimpleGraph& g, const RotationSystem& rot) {
  const int n = g.order();
  if (static_cast<int>(rot.size()) != n) return std::nullopt;
  // position[v][w] = index of w in the rotation at v.
  std::vector<std::map<Vertex, int>> position(n + 1);
  for (Vertex v = 1; v <= n; ++v) {
    const auto& r = rot[v - 1];
    std::vector<Vertex> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) return std::nullopt;
    for (int i = 0; i < static_cast<int>(r.size()); ++i) position[v][r[i]] = i;
  }
  std::set<std::pair<Vertex, Vertex>> used;
  int faces = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : rot[u - 1]) {
      if (used.contains({u, v})) continue;
      ++faces;
      Vertex x = u, y = v;
      while (used.insert({x, y}).second) {
        const auto& ry = rot[y - 1];
        const Vertex z = ry[(position[y][x] + 1) % ry.size()];
        x = y;
        y = z;
      }
    }
  }
  return faces;
}

bool verify_rotation_system(const SimpleGraph& g, const RotationSystem& rot) {
  for (const auto& comp : connected_components(g)) {
    std::vector<Vertex> outside;
    std::vector<bool> in(g.order() + 1, false);
    for (Vertex v : comp) in[v] = true;
    for (Vertex v = 1; v <= g.order(); ++v)
      if (!in[v]) outside.push_back(v);
    const SimpleGraph sub = g.without_vertices(outside);
    if (sub.size() == 0) continue;
    RotationSystem sub_rot;
    // comp is sorted, so new label of comp[i] is i + 1.
    std::map<Vertex, Vertex> relabel_to;
    for (std::size_t i = 0; i < comp.size(); ++i) relabel_to[comp[i]] = static_cast<Vertex>(i + 1);
    for (Vertex v : comp) {
      if (v < 1 || v > static_cast<int>(rot.size())) return false;
      std::vector<Vertex> r;
      for (Vertex w : rot[v - 1]) {
        auto it = relabel_to.find(w);
        if (it == relabel_to.end()) return false;
        r.push_back(it->second);
      }
      sub_rot.push_back(std::move(r));
    }
    const auto f = count_faces(sub, sub_rot);
    if (!f || sub.order() - sub.size() + *f != 2) return false;
  }
  return true;
}

bool verify_kuratowski(const SimpleGraph& g, const std::vector<Edge>& edges) {
  const int n = g.order();
  // Multiset adjacency so suppression can detect parallel edges.
  std::vector<std::multiset<Vertex>> adj(n + 1);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n || e.u == e.v || !g.has_edge(e.u, e.v)) return false;
    if (adj[e.u].contains(e.v)) return false;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 1; v <= n; ++v) {
      if (adj[v].size() == 1) return false;
      if (adj[v].size() != 2) continue;
      const Vertex a = *adj[v].begin();
      const Vertex b = *std::next(adj[v].begin());
      if (a == b || adj[a].contains(b)) return false;
      adj[a].erase(adj[a].find(v));
      adj[b].erase(adj[b].find(v));
      adj[v].clear();
      adj[a].insert(b);
      adj[b].insert(a);
      changed = true;
    }
  }
  std::vector<Vertex> branch;
  for (Vertex v = 1; v <= n; ++v)
    if (!adj[v].empty()) branch.push_back(v);
  SimpleGraph core(static_cast<int>(branch.size()));
  for (std::size_t i = 0; i < branch.size(); ++i)
    for (std::size_t j = i + 1; j < branch.size(); ++j)
      if (adj[branch[i]].contains(branch[j])) core.add_edge(i + 1, j + 1);
  const std::array<int, 2> k33{3, 3};
  if (core.order() == 5) return core == complete_graph(5);
  if (core.order() == 6) return are_isomorphic(core, complete_multipartite(k33));
  return false;
}

bool verify_planarity_result(const SimpleGraph& g, const PlanarityResult& r) {
  return r.planar ? verify_rotation_system(g, r.rotation) : verify_kuratowski(g, r.kuratowski);
}

// --------------------------------------------------------------------- apex

std::optional<ApexCertificate> find_apex_set(const SimpleGraph& g, int k) {
  const int n = g.order();
  if (k < 0) throw InvalidArgument("apex size must be non-negative");
  if (k > n) return std::nullopt;
  std::vector<Vertex> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    if (is_planar(g.without_vertices(pick))) return ApexCertificate{pick};
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i + 1) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool verify_apex_certificate(const SimpleGraph& g, const ApexCertificate& c) {
  std::set<Vertex> distinct(c.removed.begin(), c.removed.end());
  if (distinct.size() != c.removed.size()) return false;
  for (Vertex v : c.removed)
    if (v < 1 || v > g.order()) return false;
  const SimpleGraph rest = g.without_vertices(c.removed);
  const PlanarityResult r = planarity(rest);
  return r.planar && verify_rotation_system(rest, r.rotation);
}

// ------------------------------------------------------------------- minors

namespace {

struct BudgetOut {};

class MinorSearch {
 public:
  MinorSearch(const SimpleGraph& g, const SimpleGraph& h, std::size_t budget)
      : host_(g), pattern_(h), budget_(budget) {
    for (Vertex v = 1; v <= h.order(); ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
  }

  std::optional<MinorWitness> run() {
    std::vector<std::uint64_t> branch;
    for (Vertex v = 1; v <= host_.order(); ++v) branch.push_back(std::uint64_t{1} << (v - 1));
    return search(host_, branch);
  }

 private:
  std::optional<MinorWitness> search(const SimpleGraph& g, const std::vector<std::uint64_t>& branch) {
    if (++nodes_ > budget_) throw BudgetOut{};
    const int k = pattern_.order();
    if (g.order() < k || g.size() < pattern_.size()) return std::nullopt;
    if (g.order() == k) return embed(g, branch);
    CanonicalKey key = canonical_key(g);
    if (failed_.contains(key.str())) return std::nullopt;

    for (const Edge& e : g.edges()) {
      std::vector<std::uint64_t> next = branch;
      next[e.u - 1] |= next[e.v - 1];
      next[e.v - 1] = next.back();
      next.pop_back();
      if (auto w = search(contract_edge(g, e), next)) return w;
    }
    for (Vertex v = 1; v <= g.order(); ++v) {
      std::vector<std::uint64_t> next = branch;
      next.erase(next.begin() + (v - 1));
      const std::array<Vertex, 1> drop{v};
      if (auto w = search(g.without_vertices(drop), next)) return w;
    }
    failed_.insert(key.str());
    return std::nullopt;
  }

  // Pattern as a spanning subgraph of g.
  std::optional<MinorWitness> embed(const SimpleGraph& g, const std::vector<std::uint64_t>& branch) {
    const int k = pattern_.order();
    std::vector<Vertex> image(k + 1, 0);
    std::vector<bool> used(k + 1, false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
      if (i == order_.size()) return true;
      const Vertex x = order_[i];
      for (Vertex y = 1; y <= k; ++y) {
        if (used[y] || g.degree(y) < pattern_.degree(x)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          const Vertex w = order_[j];
          if (pattern_.has_edge(x, w) && !g.has_edge(y, image[w])) ok = false;
        }
        if (!ok) continue;
        image[x] = y;
        used[y] = true;
        if (place(i + 1)) return true;
        used[y] = false;
      }
      return false;
    };
    if (!place(0)) return std::nullopt;

    MinorWitness w;
    for (Vertex x = 1; x <= k; ++x) {
      std::vector<Vertex> set;
      for (std::uint64_t b = branch[image[x] - 1]; b; b &= b - 1) set.push_back(std::countr_zero(b) + 1);
      w.branch_sets.push_back(std::move(set));
    }
    for (const Edge& e : pattern_.edges()) {
      const std::uint64_t bu = branch[image[e.u] - 1];
      const std::uint64_t bv = branch[image[e.v] - 1];
      for (std::uint64_t b = bu; b; b &= b - 1) {
        const Vertex s = std::countr_zero(b) + 1;
        const std::uint64_t hit = host_.row(s) & bv;
        if (hit) {
          w.edge_map.push_back({e, Edge(s, std::countr_zero(hit) + 1)});
          break;
        }
      }
    }
    return w;
  }

  const SimpleGraph& host_;
  const SimpleGraph& pattern_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

MinorResult has_minor(const SimpleGraph& g, const SimpleGraph& h, std::size_t budget) {
  try {
    MinorSearch s(g, h, budget);
    if (auto w = s.run()) return {MinorVerdict::Found, std::move(w)};
    return {MinorVerdict::Absent, std::nullopt};
  } catch (const BudgetOut&) {
    return {MinorVerdict::Inconclusive, std::nullopt};
  }
}

bool verify_minor_witness(const SimpleGraph& g, const SimpleGraph& h, const MinorWitness& w) {
  if (static_cast<int>(w.branch_sets.size()) != h.order()) return false;
  std::vector<int> owner(g.order() + 1, 0);
  for (int i = 0; i < h.order(); ++i) {
    const auto& set = w.branch_sets[i];
    if (set.empty()) return false;
    for (Vertex v : set) {
      if (v < 1 || v > g.order() || owner[v] != 0) return false;
      owner[v] = i + 1;
    }
    // Connectivity inside the set.
    std::vector<Vertex> stack{set[0]};
    std::set<Vertex> seen{set[0]};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v))
        if (owner[u] == i + 1 && seen.insert(u).second) stack.push_back(u);
    }
    if (seen.size() != set.size()) return false;
  }
  std::set<Edge> covered;
  for (const auto& [he, ge] : w.edge_map) {
    if (!h.has_edge(he.u, he.v) || !g.has_edge(ge.u, ge.v)) return false;
    const int a = owner[ge.u];
    const int b = owner[ge.v];
    if (!((a == he.u && b == he.v) || (a == he.v && b == he.u))) return false;
    covered.insert(he);
  }
  return static_cast<int>(covered.size()) == h.size();
}

// -------------------------------------------------------------------- sweep

std::vector<std::vector<Edge>> edge_orbits(const SimpleGraph& g,
                                           const std::vector<Permutation>& symmetries) {
  for (const auto& p : symmetries) {
    if (p.degree() != g.order() || !is_automorphism(g, p)) {
      throw InvalidArgument("permutation " + p.to_cycles() + " is not an automorphism");
    }
  }
  std::set<Edge> seen;
  std::vector<std::vector<Edge>> orbits;
  for (const Edge& e : g.edges()) {
    if (seen.contains(e)) continue;
    std::vector<Edge> orbit{e};
    seen.insert(e);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& p : symmetries) {
        const Edge f(p(orbit[i].u), p(orbit[i].v));
        if (seen.insert(f).second) orbit.push_back(f);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<MinorReport> sweep_minors(const SimpleGraph& g, int k,
                                      const std::vector<Permutation>& symmetries,
                                      unsigned threads) {
  std::vector<MinorReport> reports;
  for (const auto& orbit : edge_orbits(g, symmetries)) {
    for (auto kind : {MinorOp::Kind::Delete, MinorOp::Kind::Contract}) {
      MinorReport r;
      r.op = {kind, orbit.front()};
      r.minor = apply(g, r.op);
      reports.push_back(std::move(r));
    }
  }
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < reports.size(); i += step) {
      MinorReport& r = reports[i];
      r.apex = find_apex_set(r.minor, k);
      if (r.apex) r.witness = planarity(r.minor.without_vertices(r.apex->removed));
    }
  };
  const std::size_t n = std::min<std::size_t>(threads ? threads : default_thread_count(),
                                              reports.size());
  if (n <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
  }
  return reports;
}

}  // namespace knotgraph
