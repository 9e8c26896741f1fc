#include "knotgraph/proofkit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "knotgraph/diagram.hpp"
#include "knotgraph/errors.hpp"
#include "knotgraph/family.hpp"

namespace knotgraph::proof {

namespace {

std::string vertex_list(const std::vector<Vertex>& vs) {
  const bool digits = std::all_of(vs.begin(), vs.end(), [](Vertex v) { return v >= 1 && v <= 9; });
  std::string out = digits ? "" : "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(vs[i]);
  }
  if (!digits) out += ']';
  return out;
}

std::set<Edge> edge_set(const VertexCycle& c) {
  const auto es = cycle_edges(c);
  return {es.begin(), es.end()};
}

std::set<Vertex> vertex_set(const VertexCycle& c) { return {c.begin(), c.end()}; }

bool disjoint(const VertexCycle& x, const VertexCycle& y) {
  const auto sx = vertex_set(x);
  return std::none_of(y.begin(), y.end(), [&](Vertex v) { return sx.contains(v); });
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool bipartite(const SimpleGraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()) + 1, -1);
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

const KeySet& petersen_family_keys() {
  static const KeySet keys = [] {
    FamilyOptions opts;
    opts.threads = 1;
    KeySet out;
    for (const auto& [key, rec] : enumerate_family(complete_graph(6), opts).members) out.insert(key);
    return out;
  }();
  return keys;
}

}  // namespace

VertexCycle parse_cycle(const std::string& text) {
  VertexCycle c;
  if (text.empty()) throw ParseError(0, "empty cycle");
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError(0, "unterminated cycle '" + text + "'");
    std::istringstream in(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
        throw ParseError(0, "bad vertex '" + item + "' in '" + text + "'");
      }
      c.push_back(std::stoi(item));
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError(0, "bad cycle '" + text + "'");
      c.push_back(ch - '0');
    }
  }
  return c;
}

std::string format_cycle(const VertexCycle& c) { return vertex_list(c); }

VertexCycle normalize_cycle(const VertexCycle& c) {
  if (c.size() < 2) return c;
  const auto it = std::min_element(c.begin(), c.end());
  VertexCycle r(it, c.end());
  r.insert(r.end(), c.begin(), it);
  if (r.size() > 2 && r.back() < r[1]) std::reverse(r.begin() + 1, r.end());
  return r;
}

std::vector<Edge> cycle_edges(const VertexCycle& c) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
  return out;
}

Check validate_cycle(const SimpleGraph& g, const VertexCycle& c) {
  const std::string name = format_cycle(c);
  if (c.size() < 3) return Check::fail("cycle " + name + " has fewer than 3 vertices");
  if (vertex_set(c).size() != c.size()) return Check::fail("cycle " + name + " repeats a vertex");
  for (Vertex v : c)
    if (v < 1 || v > g.order()) return Check::fail("cycle " + name + " leaves the host");
  for (const Edge& e : cycle_edges(c)) {
    if (!g.has_edge(e.u, e.v)) {
      return Check::fail("cycle " + name + " uses non-edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ")");
    }
  }
  return {};
}

LinkPair parse_link_pair(const std::string& text) {
  // A comma at bracket depth zero separates the cycles.
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (text[i] == ',' && depth == 0) {
      if (split != std::string::npos) throw ParseError(0, "pair '" + text + "' has three parts");
      split = i;
    }
  }
  if (split == std::string::npos) throw ParseError(0, "pair '" + text + "' needs two cycles");
  return {parse_cycle(text.substr(0, split)), parse_cycle(text.substr(split + 1))};
}

std::string format_pair(const LinkPair& p) { return format_cycle(p.a) + "," + format_cycle(p.b); }

std::string pair_key(const LinkPair& p) {
  std::string x = format_cycle(normalize_cycle(p.a));
  std::string y = format_cycle(normalize_cycle(p.b));
  if (y < x) std::swap(x, y);
  return x + "," + y;
}

bool same_pair(const LinkPair& x, const LinkPair& y) { return pair_key(x) == pair_key(y); }

Check check_link_pair(const SimpleGraph& g, const LinkPair& p) {
  if (auto c = validate_cycle(g, p.a); !c) return c;
  if (auto c = validate_cycle(g, p.b); !c) return c;
  if (!disjoint(p.a, p.b)) return Check::fail("cycles of " + format_pair(p) + " share a vertex");
  return {};
}

LinkPair apply_permutation(const SimpleGraph& g, const LinkPair& p, const Permutation& perm) {
  LinkPair out;
  for (Vertex v : p.a) out.a.push_back(perm(v));
  for (Vertex v : p.b) out.b.push_back(perm(v));
  if (auto c = check_link_pair(g, out); !c) {
    throw InvalidArgument("image of " + format_pair(p) + " is invalid: " + c.message);
  }
  return out;
}

std::optional<CutStep> make_cut(const SimpleGraph& g, const VertexCycle& cycle,
                                const std::vector<Vertex>& cut, std::string* why) {
  auto fail = [&](const std::string& m) -> std::optional<CutStep> {
    if (why) *why = m;
    return std::nullopt;
  };
  if (auto c = validate_cycle(g, cycle); !c) return fail(c.message);
  if (cut.size() < 2) return fail("a cut needs at least two vertices");
  const std::string cname = vertex_list(cut);
  for (std::size_t i = 0; i + 1 < cut.size(); ++i) {
    if (cut[i] < 1 || cut[i] > g.order() || !g.has_edge(cut[i], cut[i + 1])) {
      return fail("cut " + cname + " is not a path of the host");
    }
  }
  if (std::set<Vertex>(cut.begin(), cut.end()).size() != cut.size()) {
    return fail("cut " + cname + " repeats a vertex");
  }
  const auto ia = std::find(cycle.begin(), cycle.end(), cut.front());
  const auto ib = std::find(cycle.begin(), cycle.end(), cut.back());
  if (ia == cycle.end() || ib == cycle.end()) {
    return fail("cut " + cname + " must start and end on " + format_cycle(cycle));
  }
  for (std::size_t i = 1; i + 1 < cut.size(); ++i) {
    if (std::find(cycle.begin(), cycle.end(), cut[i]) != cycle.end()) {
      return fail("interior of cut " + cname + " meets " + format_cycle(cycle));
    }
  }
  const std::size_t n = cycle.size();
  const std::size_t a = static_cast<std::size_t>(ia - cycle.begin());
  const std::size_t b = static_cast<std::size_t>(ib - cycle.begin());
  if (cut.size() == 2 && ((a + 1) % n == b || (b + 1) % n == a)) {
    return fail("chord " + cname + " is an edge of " + format_cycle(cycle));
  }
  CutStep step{cycle, cut, {}};
  const std::vector<Vertex> interior(cut.begin() + 1, cut.end() - 1);
  for (std::size_t i = a;; i = (i + 1) % n) {
    step.parts[0].push_back(cycle[i]);
    if (i == b) break;
  }
  step.parts[0].insert(step.parts[0].end(), interior.rbegin(), interior.rend());
  for (std::size_t i = b;; i = (i + 1) % n) {
    step.parts[1].push_back(cycle[i]);
    if (i == a) break;
  }
  step.parts[1].insert(step.parts[1].end(), interior.begin(), interior.end());
  return step;
}

Check verify_cut(const SimpleGraph& g, const CutStep& step) {
  for (const auto& part : step.parts)
    if (auto c = validate_cycle(g, part); !c) return c;
  if (auto c = validate_cycle(g, step.cycle); !c) return c;
  const auto e0 = edge_set(step.parts[0]);
  const auto e1 = edge_set(step.parts[1]);
  std::set<Edge> sym, both;
  std::set_symmetric_difference(e0.begin(), e0.end(), e1.begin(), e1.end(),
                                std::inserter(sym, sym.end()));
  std::set_intersection(e0.begin(), e0.end(), e1.begin(), e1.end(),
                        std::inserter(both, both.end()));
  std::set<Edge> cut_edges;
  for (std::size_t i = 0; i + 1 < step.cut.size(); ++i) cut_edges.emplace(step.cut[i], step.cut[i + 1]);
  if (sym != edge_set(step.cycle)) {
    return Check::fail("parts do not add up to " + format_cycle(step.cycle));
  }
  if (both != cut_edges) return Check::fail("parts do not meet exactly along the cut");
  return {};
}

std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> out;
  if (text == "()") return out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(0, "bad edge list '" + text + "'");
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw ParseError(0, "bad edge list '" + text + "'");
    const std::string inner = text.substr(i + 1, close - i - 1);
    const std::size_t comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError(0, "bad edge '(" + inner + ")'");
    try {
      std::size_t used = 0;
      const int u = std::stoi(inner.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("u");
      const std::string rest = inner.substr(comma + 1);
      const int v = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("v");
      out.emplace_back(u, v);
    } catch (const std::logic_error&) {
      throw ParseError(0, "bad edge '(" + inner + ")'");
    }
    i = close + 1;
  }
  return out;
}

std::string format_edge_list(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) out += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  return out.empty() ? "()" : out;
}

Check verify_d4_certificate(const SimpleGraph& g, const D4Certificate& cert) {
  if (auto c = check_link_pair(g, cert.pair1); !c) return c;
  if (auto c = check_link_pair(g, cert.pair2); !c) return c;
  UnionFind uf(g.order());
  std::set<Edge> contracted;
  for (const Edge& e : cert.contract) {
    if (e.u < 1 || e.v > g.order() || !g.has_edge(e.u, e.v)) {
      return Check::fail("contracted (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not a host edge");
    }
    if (!uf.unite(e.u, e.v)) return Check::fail("contracted edges contain a cycle");
    contracted.insert(e);
  }
  // Ring order C1, C2, C3, C4 with pair1 = (C1, C3) and pair2 = (C2, C4).
  const std::array<const VertexCycle*, 4> ring{&cert.pair1.a, &cert.pair2.a, &cert.pair1.b,
                                               &cert.pair2.b};
  std::array<std::set<int>, 4> image;
  std::set<Edge> kept;
  for (int i = 0; i < 4; ++i) {
    const VertexCycle& c = *ring[i];
    const std::string name = format_cycle(c);
    std::vector<int> walk;
    for (Vertex v : c) {
      const int r = uf.find(v);
      if (walk.empty() || walk.back() != r) walk.push_back(r);
    }
    while (walk.size() > 1 && walk.back() == walk.front()) walk.pop_back();
    for (const Edge& e : cycle_edges(c)) {
      if (contracted.contains(e)) continue;
      if (uf.find(e.u) == uf.find(e.v)) {
        return Check::fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") of " +
                           name + " becomes a loop");
      }
      if (!kept.insert(e).second) {
        return Check::fail("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") is used by two cycles");
      }
    }
    image[i] = {walk.begin(), walk.end()};
    if (walk.size() < 2 || image[i].size() != walk.size()) {
      return Check::fail(name + " does not contract to a cycle");
    }
  }
  auto common = [&](int i, int j) {
    std::size_t n = 0;
    for (int x : image[i]) n += image[j].contains(x) ? 1 : 0;
    return n;
  };
  if (common(0, 2) != 0 || common(1, 3) != 0) {
    return Check::fail("opposite cycles meet after contraction");
  }
  for (int i = 0; i < 4; ++i) {
    if (common(i, (i + 1) % 4) != 1) {
      return Check::fail(format_cycle(*ring[i]) + " and " + format_cycle(*ring[(i + 1) % 4]) +
                         " must meet in exactly one vertex after contraction");
    }
  }
  return {};
}

Check verify_octet(const SimpleGraph& g, const PetersenOctet& o) {
  SimpleGraph h(g.order());
  for (const LinkPair& p : o.links) {
    if (auto c = check_link_pair(g, p); !c) return Check::fail(o.name + ": " + c.message);
    for (const VertexCycle* c : {&p.a, &p.b})
      for (const Edge& e : cycle_edges(*c))
        if (!h.has_edge(e.u, e.v)) h.add_edge(e.u, e.v);
  }
  std::vector<Vertex> isolated, used;
  for (Vertex v = 1; v <= h.order(); ++v) (h.degree(v) == 0 ? isolated : used).push_back(v);
  const SimpleGraph core = h.without_vertices(isolated);
  if (core.order() != 8 || core.size() != 15) {
    return Check::fail(o.name + ": the cycles span " + std::to_string(core.order()) +
                       " vertices and " + std::to_string(core.size()) + " edges, not 8 and 15");
  }
  if (!petersen_family_keys().contains(canonical_key(core)) || bipartite(core)) {
    return Check::fail(o.name + ": the cycles do not form the 8-vertex Petersen graph");
  }
  // without_vertices keeps the order of the remaining vertices.
  std::set<std::string> listed, actual;
  for (const LinkPair& p : o.links) listed.insert(pair_key(p));
  const auto cycles = all_cycles(core);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!disjoint(cycles[i], cycles[j])) continue;
      LinkPair p;
      for (Vertex v : cycles[i]) p.a.push_back(used[v - 1]);
      for (Vertex v : cycles[j]) p.b.push_back(used[v - 1]);
      actual.insert(pair_key(p));
    }
  }
  if (listed != actual) {
    return Check::fail(o.name + ": the listed pairs are not the " + std::to_string(actual.size()) +
                       " disjoint cycle pairs of the subgraph");
  }
  return {};
}

PetersenOctet build_octet(const SimpleGraph& g, const PetersenOctet& base, const Permutation& p,
                          std::string name) {
  PetersenOctet out{std::move(name), {}};
  for (std::size_t j = 0; j < 8; ++j) out.links[j] = apply_permutation(g, base.links[j], p);
  if (auto c = verify_octet(g, out); !c) throw InvalidArgument(c.message);
  return out;
}

std::optional<std::vector<Edge>> find_d4_contraction(const SimpleGraph& g, const LinkPair& pair1,
                                                     const LinkPair& pair2, int max_edges) {
  std::set<Vertex> vs;
  for (const VertexCycle* c : {&pair1.a, &pair1.b, &pair2.a, &pair2.b}) vs.insert(c->begin(), c->end());
  std::vector<Edge> candidates;
  for (const Edge& e : g.edges())
    if (vs.contains(e.u) && vs.contains(e.v)) candidates.push_back(e);
  // Opposite cycles must stay apart, so no class of the contraction may
  // meet both cycles of a pair.
  std::vector<unsigned> mask(static_cast<std::size_t>(g.order()) + 1, 0);
  const std::array<const VertexCycle*, 4> ring{&pair1.a, &pair2.a, &pair1.b, &pair2.b};
  for (unsigned k = 0; k < 4; ++k)
    for (Vertex v : *ring[k]) mask[static_cast<std::size_t>(v)] |= 1u << k;
  const auto separated = [&](const std::vector<Edge>& es) {
    UnionFind uf(g.order());
    for (const Edge& e : es) uf.unite(e.u, e.v);
    std::vector<unsigned> merged(mask.size(), 0);
    for (Vertex v = 1; v <= g.order(); ++v) {
      unsigned& m = merged[static_cast<std::size_t>(uf.find(v))];
      m |= mask[static_cast<std::size_t>(v)];
      if ((m & 0b0101u) == 0b0101u || (m & 0b1010u) == 0b1010u) return false;
    }
    return true;
  };
  std::vector<Edge> chosen;
  std::function<bool(std::size_t, int)> pick = [&](std::size_t from, int left) {
    if (!separated(chosen)) return false;
    if (left == 0) return static_cast<bool>(verify_d4_certificate(g, {chosen, pair1, pair2}));
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      if (pick(i + 1, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int k = 0; k <= max_edges; ++k) {
    chosen.clear();
    if (pick(0, k)) return chosen;
  }
  return std::nullopt;
}

std::optional<std::string> suggest_clash(const SimpleGraph& g, const LinkPair& p,
                                         const LinkPair& q, const std::vector<CutOption>& cuts,
                                         int max_depth, int max_edges) {
  // Deepest search already failed for a node, keyed by both pairs.
  std::map<std::string, int> failed;
  std::function<std::optional<std::string>(const LinkPair&, const LinkPair&, int, int)> solve =
      [&](const LinkPair& x, const LinkPair& y, int depth, int indent) -> std::optional<std::string> {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string key = std::min(pair_key(x), pair_key(y)) + "|" + std::max(pair_key(x), pair_key(y));
    if (auto it = failed.find(key); it != failed.end() && it->second >= depth) return std::nullopt;
    if (!failed.contains(key)) {
      if (auto es = find_d4_contraction(g, x, y, max_edges)) {
        return pad + "d4 " + format_edge_list(*es) + " pairs " + format_pair(x) + " " +
               format_pair(y) + "\n";
      }
    }
    failed[key] = 0;
    if (depth == 0) return std::nullopt;
    std::vector<CutOption> options = cuts;
    if (options.empty()) {
      for (const VertexCycle* c : {&x.a, &x.b, &y.a, &y.b}) {
        for (Vertex s : *c) {
          for (Vertex t : *c) {
            if (s < t) options.push_back({*c, {s, t}});
            for (Vertex m = 1; m <= g.order(); ++m) {
              if (s < t && std::find(c->begin(), c->end(), m) == c->end()) {
                options.push_back({*c, {s, m, t}});
              }
            }
          }
        }
      }
    }
    // Slots: 0 = x.a (partner x.b), 1 = x.b, 2 = y.a, 3 = y.b.
    const std::array<const VertexCycle*, 4> slot{&x.a, &x.b, &y.a, &y.b};
    for (const CutOption& opt : options) {
      for (int s = 0; s < 4; ++s) {
        if (normalize_cycle(*slot[s]) != normalize_cycle(opt.cycle)) continue;
        const auto step = make_cut(g, *slot[s], opt.cut);
        if (!step) continue;
        const VertexCycle& partner = *slot[s ^ 1];
        if (!disjoint(partner, opt.cut)) continue;
        std::array<std::string, 2> sub;
        bool ok = true;
        for (int k = 0; k < 2 && ok; ++k) {
          LinkPair nx = x, ny = y;
          LinkPair& target = s < 2 ? nx : ny;
          (s % 2 == 0 ? target.a : target.b) = step->parts[k];
          auto r = solve(nx, ny, depth - 1, indent + 2);
          if (r) {
            sub[k] = *r;
          } else {
            ok = false;
          }
        }
        if (!ok) continue;
        return pad + "cut " + format_cycle(*slot[s]) + " along " + vertex_list(opt.cut) + " -> " +
               format_cycle(step->parts[0]) + " + " + format_cycle(step->parts[1]) + "\n" + sub[0] +
               sub[1];
      }
    }
    failed[key] = depth;
    return std::nullopt;
  };
  return solve(p, q, max_depth, 2);
}

}  // namespace knotgraph::proof
