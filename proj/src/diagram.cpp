#include "knotgraph/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "knotgraph/errors.hpp"
#include "knotgraph/family.hpp"

namespace knotgraph {

namespace {

// A strand traversed forwards (dir = +1) or backwards (dir = -1).
struct StrandUse {
  const std::vector<Passage>* passages;
  int dir;
};

struct Occurrence {
  int count = 0;
  int overs = 0;
  int sign = 0;
  bool sign_clash = false;
};

Validation check_strands(const std::vector<const std::vector<Passage>*>& strands) {
  std::map<int, Occurrence> seen;
  for (const auto* s : strands) {
    for (const Passage& p : *s) {
      if (p.sign != 1 && p.sign != -1) {
        return {false, "crossing " + std::to_string(p.crossing) + " has sign other than +1/-1"};
      }
      Occurrence& o = seen[p.crossing];
      if (o.count > 0 && o.sign != p.sign) o.sign_clash = true;
      o.sign = p.sign;
      ++o.count;
      o.overs += p.over ? 1 : 0;
    }
  }
  for (const auto& [id, o] : seen) {
    const std::string c = "crossing " + std::to_string(id);
    if (o.count != 2) return {false, c + " appears " + std::to_string(o.count) + " time(s)"};
    if (o.overs != 1) return {false, c + " needs one over and one under passage"};
    if (o.sign_clash) return {false, c + " has inconsistent signs"};
  }
  return {};
}

// Reads the passages along the uses; keeps crossings both of whose
// passages lie on the curve and re-signs them for the curve's orientation.
KnotCode trace(const std::vector<StrandUse>& uses) {
  std::map<int, std::pair<int, int>> dirs;  // id -> (count, product of dirs)
  for (const auto& u : uses) {
    for (const Passage& p : *u.passages) {
      auto& [count, prod] = dirs.try_emplace(p.crossing, 0, 1).first->second;
      ++count;
      prod *= u.dir;
    }
  }
  KnotCode code;
  for (const auto& u : uses) {
    const auto& ps = *u.passages;
    auto emit = [&](const Passage& p) {
      const auto& [count, prod] = dirs.at(p.crossing);
      if (count == 2) code.entries.push_back({p.crossing, p.over, p.sign * prod});
    };
    if (u.dir > 0) {
      std::for_each(ps.begin(), ps.end(), emit);
    } else {
      std::for_each(ps.rbegin(), ps.rend(), emit);
    }
  }
  return code;
}

std::vector<StrandUse> cycle_uses(const SpatialDiagram& d, const Cycle& c) {
  check_cycle(d.graph, c);
  std::vector<StrandUse> uses;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex a = c[i];
    const Vertex b = c[(i + 1) % c.size()];
    uses.push_back({&d.strand(Edge(a, b)), a < b ? 1 : -1});
  }
  return uses;
}

int count_over(const std::vector<const std::vector<Passage>*>& top,
               const std::vector<const std::vector<Passage>*>& bottom) {
  std::set<int> overs;
  for (const auto* s : top)
    for (const Passage& p : *s)
      if (p.over) overs.insert(p.crossing);
  int n = 0;
  for (const auto* s : bottom)
    for (const Passage& p : *s)
      if (!p.over && overs.contains(p.crossing)) ++n;
  return n;
}

std::string strip(std::string s) {
  if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Passage> parse_passages(const std::string& text, int lineno) {
  std::vector<Passage> out;
  std::istringstream ts(text);
  std::string tok;
  while (ts >> tok) {
    try {
      out.push_back(parse_passage(tok));
    } catch (const InvalidArgument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

}  // namespace

Passage parse_passage(const std::string& token) {
  static const std::regex re(R"((\d+)([ou])([+-]))");
  std::smatch m;
  if (!std::regex_match(token, m, re)) {
    throw InvalidArgument("bad passage '" + token + "', expected e.g. 3o+");
  }
  return {std::stoi(m[1].str()), m[2].str() == "o", m[3].str() == "+" ? 1 : -1};
}

std::string to_string(const Passage& p) {
  return std::to_string(p.crossing) + (p.over ? "o" : "u") + (p.sign > 0 ? "+" : "-");
}

const std::vector<Passage>& SpatialDiagram::strand(Edge e) const {
  static const std::vector<Passage> empty;
  if (!graph.has_edge(e.u, e.v)) {
    throw InvalidArgument("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") is not an edge");
  }
  auto it = strands.find(e);
  return it == strands.end() ? empty : it->second;
}

std::vector<int> SpatialDiagram::crossing_ids() const {
  std::set<int> ids;
  for (const auto& [e, ps] : strands)
    for (const Passage& p : ps) ids.insert(p.crossing);
  return {ids.begin(), ids.end()};
}

Validation validate_diagram(const SpatialDiagram& d) {
  std::vector<const std::vector<Passage>*> all;
  for (const auto& [e, ps] : d.strands) {
    if (e.u < 1 || e.v > d.graph.order() || !d.graph.has_edge(e.u, e.v)) {
      return {false, "strand on (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") which is not an edge"};
    }
    all.push_back(&ps);
  }
  return check_strands(all);
}

SpatialDiagram read_diagram(std::istream& in) {
  static const std::regex edge_re(R"(edge\s+(\d+)\s+(\d+)\s*:(.*))");
  SpatialDiagram d;
  bool header = false;
  std::vector<std::pair<Edge, std::vector<Passage>>> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "diagram") {
      if (header) throw ParseError(lineno, "second diagram header");
      if (!(ls >> d.name)) throw ParseError(lineno, "expected 'diagram <name> [n]'");
      int n = 0;
      if (ls >> n) d.graph = SimpleGraph(n);
      header = true;
      continue;
    }
    if (!header) throw ParseError(lineno, "missing 'diagram <name>' header");
    std::smatch m;
    if (!std::regex_match(line, m, edge_re)) {
      throw ParseError(lineno, "expected 'edge u v: passages', got '" + line + "'");
    }
    const int u = std::stoi(m[1].str());
    const int v = std::stoi(m[2].str());
    if (u < 1 || u >= v) throw ParseError(lineno, "edge endpoints must satisfy 1 <= u < v");
    lines.push_back({Edge(u, v), parse_passages(m[3].str(), lineno)});
  }
  if (!header) throw ParseError(lineno, "empty diagram file");
  int n = d.graph.order();
  for (const auto& [e, ps] : lines) n = std::max(n, e.v);
  if (d.graph.order() != 0 && n > d.graph.order()) {
    throw ParseError(lineno, "edge endpoint beyond the declared vertex count");
  }
  d.graph = SimpleGraph(n);
  for (auto& [e, ps] : lines) {
    if (d.graph.has_edge(e.u, e.v)) {
      throw ParseError(lineno, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                   " listed twice");
    }
    d.graph.add_edge(e.u, e.v);
    if (!ps.empty()) d.strands[e] = std::move(ps);
  }
  if (auto v = validate_diagram(d); !v) throw ParseError(lineno, v.message);
  return d;
}

SpatialDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open diagram file '" + path + "'");
  return read_diagram(in);
}

void write_diagram(std::ostream& out, const SpatialDiagram& d) {
  out << "diagram " << d.name << ' ' << d.graph.order() << '\n';
  for (const Edge& e : d.graph.edges()) {
    out << "edge " << e.u << ' ' << e.v << ':';
    for (const Passage& p : d.strand(e)) out << ' ' << to_string(p);
    out << '\n';
  }
}

SpatialDiagram flip_crossing(const SpatialDiagram& d, int id) {
  SpatialDiagram out = d;
  int hits = 0;
  for (auto& [e, ps] : out.strands) {
    for (Passage& p : ps) {
      if (p.crossing != id) continue;
      p.over = !p.over;
      p.sign = -p.sign;
      ++hits;
    }
  }
  if (hits == 0) throw InvalidArgument("no crossing " + std::to_string(id));
  return out;
}

KnotCode parse_knot_code(const std::string& text) {
  KnotCode k;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) k.entries.push_back(parse_passage(tok));
  return k;
}

std::string to_string(const KnotCode& k) {
  std::string s;
  for (const Passage& p : k.entries) {
    if (!s.empty()) s += ' ';
    s += to_string(p);
  }
  return s;
}

Validation validate_code(const KnotCode& k) { return check_strands({&k.entries}); }

void check_cycle(const SimpleGraph& g, const Cycle& c) {
  if (c.size() < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::set<Vertex> distinct(c.begin(), c.end());
  if (distinct.size() != c.size()) throw InvalidArgument("cycle repeats a vertex");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex a = c[i];
    const Vertex b = c[(i + 1) % c.size()];
    if (a < 1 || a > g.order() || b < 1 || b > g.order() || !g.has_edge(a, b)) {
      throw InvalidArgument("(" + std::to_string(a) + "," + std::to_string(b) +
                            ") is not an edge of the graph");
    }
  }
}

KnotCode cycle_subdiagram(const SpatialDiagram& d, const Cycle& c) {
  return trace(cycle_uses(d, c));
}

int lk2(const SpatialDiagram& d, const Cycle& c1, const Cycle& c2) {
  check_cycle(d.graph, c1);
  check_cycle(d.graph, c2);
  for (Vertex v : c1) {
    if (std::find(c2.begin(), c2.end(), v) != c2.end()) {
      throw InvalidArgument("cycles share vertex " + std::to_string(v));
    }
  }
  std::vector<const std::vector<Passage>*> s1, s2;
  for (const auto& u : cycle_uses(d, c1)) s1.push_back(u.passages);
  for (const auto& u : cycle_uses(d, c2)) s2.push_back(u.passages);
  return count_over(s1, s2) % 2;
}

std::string to_string(UnknotStatus s) {
  switch (s) {
    case UnknotStatus::Unknot: return "Unknot";
    case UnknotStatus::Knotted: return "Knotted";
    case UnknotStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

KnotInvariants knot_invariants(const KnotCode& k, std::size_t skein_budget,
                               std::size_t move_budget) {
  KnotInvariants inv;
  try {
    inv.a2 = conway_a2(k, SkeinOrder::Descending, skein_budget);
    inv.arf = static_cast<int>(((*inv.a2 % 2) + 2) % 2);
  } catch (const BudgetExceeded&) {
    inv.status = UnknotStatus::Inconclusive;
    return inv;
  }
  inv.status = *inv.a2 != 0 ? UnknotStatus::Knotted : unknot_check(k, move_budget);
  return inv;
}

std::vector<Cycle> all_cycles(const SimpleGraph& g, std::size_t limit) {
  std::vector<Cycle> out;
  const int n = g.order();
  Cycle path;
  std::vector<bool> on_path(n + 1, false);
  std::function<void(Vertex)> extend = [&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (w == path.front()) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (out.size() >= limit) throw BudgetExceeded("cycle enumeration limit reached");
          out.push_back(path);
        }
        continue;
      }
      if (w < path.front() || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = true;
      extend(w);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Census::knotted() const {
  return std::count_if(entries.begin(), entries.end(), [](const CensusEntry& e) {
    return e.invariants.status == UnknotStatus::Knotted;
  });
}

std::size_t Census::inconclusive() const {
  return std::count_if(entries.begin(), entries.end(), [](const CensusEntry& e) {
    return e.invariants.status == UnknotStatus::Inconclusive;
  });
}

Census knotted_cycle_census(const SpatialDiagram& d, std::size_t cycle_limit, unsigned threads) {
  Census census;
  std::vector<Cycle> cycles;
  try {
    cycles = all_cycles(d.graph, cycle_limit);
  } catch (const BudgetExceeded&) {
    census.complete = false;
    return census;
  }
  census.entries.resize(cycles.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < cycles.size(); i += step) {
      census.entries[i] = {cycles[i], knot_invariants(cycle_subdiagram(d, cycles[i]))};
    }
  };
  const std::size_t n =
      std::min<std::size_t>(threads ? threads : default_thread_count(), cycles.size());
  if (n <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work, t, n);
  }
  return census;
}

// ----------------------------------------------------------------------- D4

Validation validate_d4(const D4Diagram& d) {
  std::vector<const std::vector<Passage>*> all;
  for (const auto& s : d.strands) all.push_back(&s);
  return check_strands(all);
}

D4Diagram read_d4(std::istream& in) {
  static const std::regex edge_re(R"(e([1-8])\s*:(.*))");
  D4Diagram d;
  bool header = false;
  std::array<bool, 8> given{};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (line.rfind("d4", 0) == 0 && !header) {
      std::istringstream ls(line.substr(2));
      if (!(ls >> d.name)) throw ParseError(lineno, "expected 'd4 <name>'");
      header = true;
      continue;
    }
    if (!header) throw ParseError(lineno, "missing 'd4 <name>' header");
    std::smatch m;
    if (!std::regex_match(line, m, edge_re)) {
      throw ParseError(lineno, "expected 'e<k>: passages' with k in 1..8");
    }
    const int k = std::stoi(m[1].str()) - 1;
    if (given[k]) throw ParseError(lineno, "edge e" + m[1].str() + " listed twice");
    given[k] = true;
    d.strands[k] = parse_passages(m[2].str(), lineno);
  }
  if (!header) throw ParseError(lineno, "empty D4 file");
  if (auto v = validate_d4(d); !v) throw ParseError(lineno, v.message);
  return d;
}

D4Diagram read_d4_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open D4 file '" + path + "'");
  return read_d4(in);
}

void write_d4(std::ostream& out, const D4Diagram& d) {
  out << "d4 " << d.name << '\n';
  for (int k = 0; k < 8; ++k) {
    out << 'e' << k + 1 << ':';
    for (const Passage& p : d.strands[k]) out << ' ' << to_string(p);
    out << '\n';
  }
}

int d4_lk2(const D4Diagram& d, int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4 || i == j) {
    throw InvalidArgument("D4 cycles are numbered 1..4 and must differ");
  }
  const std::vector<const std::vector<Passage>*> ci{&d.strands[2 * i - 2], &d.strands[2 * i - 1]};
  const std::vector<const std::vector<Passage>*> cj{&d.strands[2 * j - 2], &d.strands[2 * j - 1]};
  return count_over(ci, cj) % 2;
}

KnotCode d4_hamiltonian(const D4Diagram& d, unsigned choice) {
  std::vector<StrandUse> uses;
  for (int i = 0; i < 4; ++i) uses.push_back({&d.strands[2 * i + ((choice >> i) & 1u)], 1});
  return trace(uses);
}

int d4_sigma(const D4Diagram& d, std::size_t budget) {
  int sigma = 0;
  for (unsigned choice = 0; choice < 16; ++choice) sigma ^= arf(d4_hamiltonian(d, choice), budget);
  return sigma;
}

}  // namespace knotgraph
