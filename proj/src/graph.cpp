#include "knotgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

#include "knotgraph/errors.hpp"

namespace knotgraph {

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.u << ',' << e.v << ')';
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(n) +
                          " outside 0.." + std::to_string(kMaxVertices));
  }
}

SimpleGraph::SimpleGraph(int n, std::span<const Edge> edges) : SimpleGraph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<std::pair<int, int>> edges)
    : SimpleGraph(n) {
  for (auto [a, b] : edges) add_edge(a, b);
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " not in 1.." +
                          std::to_string(n_));
  }
}

int SimpleGraph::size() const {
  int twice = 0;
  for (auto r : adj_) twice += std::popcount(r);
  return twice / 2;
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) return false;
  return (adj_[a - 1] >> (b - 1)) & 1U;
}

void SimpleGraph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw InvalidArgument("loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) {
    std::ostringstream os;
    os << "duplicate edge " << Edge(a, b);
    throw InvalidArgument(os.str());
  }
  adj_[a - 1] |= std::uint64_t{1} << (b - 1);
  adj_[b - 1] |= std::uint64_t{1} << (a - 1);
}

void SimpleGraph::remove_edge(Vertex a, Vertex b) {
  if (!has_edge(a, b)) {
    std::ostringstream os;
    os << "edge " << Edge(a, b) << " not in graph";
    throw InvalidArgument(os.str());
  }
  adj_[a - 1] &= ~(std::uint64_t{1} << (b - 1));
  adj_[b - 1] &= ~(std::uint64_t{1} << (a - 1));
}

int SimpleGraph::degree(Vertex v) const {
  check_vertex(v);
  return std::popcount(adj_[v - 1]);
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (std::uint64_t r = adj_[v - 1]; r; r &= r - 1) {
    out.push_back(std::countr_zero(r) + 1);
  }
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= n_; ++u) {
    for (std::uint64_t r = adj_[u - 1] >> u; r; r &= r - 1) {
      out.emplace_back(u, u + 1 + std::countr_zero(r));
    }
  }
  return out;
}

SimpleGraph SimpleGraph::without_vertices(std::span<const Vertex> removed) const {
  std::vector<int> newlabel(static_cast<size_t>(n_) + 1, 0);
  std::vector<bool> gone(static_cast<size_t>(n_) + 1, false);
  for (Vertex v : removed) {
    check_vertex(v);
    gone[v] = true;
  }
  int next = 0;
  for (Vertex v = 1; v <= n_; ++v) {
    if (!gone[v]) newlabel[v] = ++next;
  }
  SimpleGraph h(next);
  for (const Edge& e : edges()) {
    if (!gone[e.u] && !gone[e.v]) h.add_edge(newlabel[e.u], newlabel[e.v]);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const SimpleGraph& g) {
  os << "graph(n=" << g.order() << ", m=" << g.size() << ": ";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ' ';
    os << e;
    first = false;
  }
  return os << ')';
}

// ---------------------------------------------------------------------------
// CanonicalKey

int CanonicalKey::order() const {
  if (text_.size() < 3 || text_[0] != 'n') return 0;
  return std::stoi(text_.substr(1, text_.find(':') - 1));
}

std::ostream& operator<<(std::ostream& os, const CanonicalKey& k) {
  return os << k.str();
}

bool ByOrderThenKey::operator()(const CanonicalKey& a,
                                const CanonicalKey& b) const {
  int na = a.order();
  int nb = b.order();
  if (na != nb) return na < nb;
  return a.str() < b.str();
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (Vertex v : images_) {
    if (v < 1 || v > degree() || seen[v]) {
      throw InvalidArgument("permutation images are not a bijection of 1.." +
                            std::to_string(degree()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::string& text) {
  std::vector<Vertex> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(0, "expected '(' in permutation '" + text + "'");
    ++i;
    std::vector<Vertex> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError(0, "bad permutation '" + text + "'");
      Vertex v = std::stoi(text.substr(start, i - start));
      if (v < 1 || v > n || used[v]) {
        throw ParseError(0, "permutation '" + text + "' repeats or exceeds " +
                                std::to_string(n));
      }
      used[v] = true;
      cyc.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (size_t k = 0; k < cyc.size(); ++k) {
      img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

Vertex Permutation::operator()(Vertex v) const {
  if (v < 1 || v > degree()) return v;
  return images_[v - 1];
}

Permutation Permutation::operator*(const Permutation& q) const {
  int n = std::max(degree(), q.degree());
  std::vector<Vertex> img(static_cast<size_t>(n));
  for (Vertex v = 1; v <= n; ++v) img[v - 1] = (*this)(q(v));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> img(images_.size());
  for (Vertex v = 1; v <= degree(); ++v) img[images_[v - 1] - 1] = v;
  return Permutation(std::move(img));
}

Permutation Permutation::pow(int k) const {
  Permutation base = k < 0 ? inverse() : *this;
  Permutation result = identity(degree());
  for (int i = 0; i < std::abs(k); ++i) result = base * result;
  return result;
}

bool Permutation::is_identity() const {
  for (Vertex v = 1; v <= degree(); ++v) {
    if (images_[v - 1] != v) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (Vertex v = 1; v <= degree(); ++v) {
    if (seen[v] || images_[v - 1] == v) continue;
    out += '(';
    for (Vertex w = v; !seen[w]; w = images_[w - 1]) {
      if (w != v) out += ',';
      out += std::to_string(w);
      seen[w] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

SimpleGraph relabel(const SimpleGraph& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    throw InvalidArgument("permutation degree " + std::to_string(p.degree()) +
                          " does not match graph order " +
                          std::to_string(g.order()));
  }
  SimpleGraph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(p(e.u), p(e.v));
  return h;
}

// ---------------------------------------------------------------------------
// Canonical labeling: partition refinement plus individualization, with
// automorphism pruning. The leaf with the largest adjacency code wins.

namespace {

using Mask = std::uint64_t;

class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& g) : n_(g.order()) {
    for (Vertex v = 1; v <= n_; ++v) adj_.push_back(g.row(v));
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    std::vector<Mask> cells{n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1};
    visit(cells, 0);
    return best_order_;
  }

 private:
  static constexpr int kNoUnwind = INT_MAX;

  void refine(std::vector<Mask>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t s = 0; s < cells.size() && !changed; ++s) {
        const Mask splitter = cells[s];
        std::vector<Mask> next;
        next.reserve(cells.size() + 4);
        for (Mask cell : cells) {
          if (std::popcount(cell) == 1) {
            next.push_back(cell);
            continue;
          }
          std::map<int, Mask> groups;
          for (Mask r = cell; r; r &= r - 1) {
            int v = std::countr_zero(r);
            groups[std::popcount(adj_[v] & splitter)] |= Mask{1} << v;
          }
          if (groups.size() > 1) changed = true;
          for (const auto& [count, part] : groups) next.push_back(part);
        }
        if (changed) cells = std::move(next);
      }
    }
  }

  std::vector<Mask> leaf_code(const std::vector<int>& order) const {
    std::vector<int> pos(static_cast<size_t>(n_));
    for (int k = 0; k < n_; ++k) pos[order[k]] = k;
    std::vector<Mask> code(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (Mask r = adj_[order[i]]; r; r &= r - 1) {
        int j = pos[std::countr_zero(r)];
        if (j > i) code[i] |= Mask{1} << (63 - j);
      }
    }
    return code;
  }

  void record_automorphism(const std::vector<int>& from,
                           const std::vector<int>& to) {
    std::vector<int> a(static_cast<size_t>(n_));
    for (int k = 0; k < n_; ++k) a[from[k]] = to[k];
    autos_.push_back(std::move(a));
  }

  static int common_prefix(const std::vector<int>& x, const std::vector<int>& y) {
    size_t k = 0;
    while (k < x.size() && k < y.size() && x[k] == y[k]) ++k;
    return static_cast<int>(k);
  }

  int leaf(const std::vector<Mask>& cells) {
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n_));
    for (Mask c : cells) order.push_back(std::countr_zero(c));
    std::vector<Mask> code = leaf_code(order);
    if (first_code_.empty()) {
      first_code_ = best_code_ = code;
      first_order_ = best_order_ = order;
      first_path_ = best_path_ = path_;
      return kNoUnwind;
    }
    if (code == first_code_) {
      record_automorphism(first_order_, order);
      return common_prefix(path_, first_path_);
    }
    if (code == best_code_) {
      record_automorphism(best_order_, order);
      return common_prefix(path_, best_path_);
    }
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      best_path_ = path_;
    }
    return kNoUnwind;
  }

  static int find(std::vector<int>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  int visit(std::vector<Mask> cells, int level) {
    refine(cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      int sz = std::popcount(cells[i]);
      if (sz > 1 && (target == cells.size() || sz < std::popcount(cells[target]))) {
        target = i;
      }
    }
    if (target == cells.size()) return leaf(cells);

    std::vector<int> explored;
    for (Mask r = cells[target]; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (!explored.empty() && in_explored_orbit(v, explored)) continue;
      explored.push_back(v);

      std::vector<Mask> child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(Mask{1} << v);
          child.push_back(cells[i] & ~(Mask{1} << v));
        } else {
          child.push_back(cells[i]);
        }
      }
      path_.push_back(v);
      int unwind = visit(std::move(child), level + 1);
      path_.pop_back();
      if (unwind < level) return unwind;
    }
    return kNoUnwind;
  }

  // True if v shares an orbit with an explored child under the automorphisms
  // found so far that fix the current path pointwise.
  bool in_explored_orbit(int v, const std::vector<int>& explored) const {
    std::vector<int> uf(static_cast<size_t>(n_));
    std::iota(uf.begin(), uf.end(), 0);
    for (const auto& a : autos_) {
      bool fixes = std::all_of(path_.begin(), path_.end(),
                               [&](int p) { return a[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int rx = find(uf, x);
        int ry = find(uf, a[x]);
        if (rx != ry) uf[rx] = ry;
      }
    }
    int rv = find(uf, v);
    for (int e : explored) {
      if (find(uf, e) == rv) return true;
    }
    return false;
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<int> path_;
  std::vector<Mask> first_code_, best_code_;
  std::vector<int> first_order_, best_order_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::vector<int>> autos_;
};

std::string hex_key(const SimpleGraph& g) {
  const int n = g.order();
  std::string bits;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) bits.push_back(g.has_edge(i, j) ? '1' : '0');
  }
  while (bits.size() % 8 != 0) bits.push_back('0');
  static const char* kHex = "0123456789abcdef";
  std::string out = "n" + std::to_string(n) + ":";
  for (size_t k = 0; k < bits.size(); k += 8) {
    unsigned byte = 0;
    for (size_t b = 0; b < 8; ++b) byte = (byte << 1) | (bits[k + b] == '1');
    out.push_back(kHex[byte >> 4]);
    out.push_back(kHex[byte & 15]);
  }
  return out;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const SimpleGraph& g) {
  std::vector<int> order = Canonizer(g).run();
  std::vector<Vertex> out;
  out.reserve(order.size());
  for (int v : order) out.push_back(v + 1);
  return out;
}

SimpleGraph canonical_form(const SimpleGraph& g) {
  std::vector<Vertex> order = canonical_labeling(g);
  std::vector<Vertex> img(order.size());
  for (size_t k = 0; k < order.size(); ++k) img[order[k] - 1] = static_cast<Vertex>(k + 1);
  return relabel(g, Permutation(std::move(img)));
}

CanonicalKey canonical_key(const SimpleGraph& g) {
  return CanonicalKey(hex_key(canonical_form(g)));
}

CanonicalKey adjacency_key(const SimpleGraph& g) { return CanonicalKey(hex_key(g)); }

bool are_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool is_automorphism(const SimpleGraph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (!g.has_edge(p(e.u), p(e.v))) return false;
  }
  return true;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph h(g.order());
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      if (!g.has_edge(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  SimpleGraph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + g.order(), e.v + g.order());
  return out;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  return g;
}

SimpleGraph complete_multipartite(std::span<const int> parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  SimpleGraph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (part_of[u - 1] != part_of[v - 1]) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(static_cast<size_t>(g.order()) + 1, false);
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace knotgraph
