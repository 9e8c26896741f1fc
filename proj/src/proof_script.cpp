// Script reader and checker. Facts are clauses over "pair is linked"
// atoms, read under the standing assumption that no knotted D4 exists:
//   clash A B      not (A and B)
//   imply P -> S   not P, or some member of S
//   refute P       not P
// Each octet contributes its parity axiom "some member is linked".
// Implications are accepted when they follow propositionally from facts
// verified earlier; the script closes when the facts and axioms together
// are unsatisfiable.

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "knotgraph/errors.hpp"
#include "knotgraph/proofkit.hpp"

namespace knotgraph::proof {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string strip(std::string s) {
  if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct Fact {
  enum class Kind { Clash, Imply } kind = Kind::Imply;
  std::vector<LinkPair> lhs;  // clash: both pairs; imply: the premise
  std::vector<LinkPair> rhs;  // imply: the alternatives (empty = refuted)
  bool assumed = false;       // rests on an unencodable case
};

std::set<std::string> keys(const std::vector<LinkPair>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(pair_key(p));
  return out;
}

bool same_fact(const Fact& x, const Fact& y) {
  return x.kind == y.kind && keys(x.lhs) == keys(y.lhs) && keys(x.rhs) == keys(y.rhs);
}

// Literal: +(id + 1) for "linked", -(id + 1) for "not linked".
using Clause = std::vector<int>;

class Solver {
 public:
  Solver(int atoms, const std::vector<Clause>& clauses) : n_(atoms), clauses_(clauses) {}

  /// A satisfying assignment, if any.
  std::optional<std::vector<int>> solve() {
    std::vector<int> assign(static_cast<std::size_t>(n_), 0);
    if (search(assign)) return assign;
    return std::nullopt;
  }

 private:
  int value(const std::vector<int>& a, int lit) const {
    const int v = a[static_cast<std::size_t>(std::abs(lit) - 1)];
    return lit > 0 ? v : -v;
  }

  bool search(std::vector<int>& a) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : clauses_) {
        int open = 0, last = 0;
        bool sat = false;
        for (int lit : c) {
          const int v = value(a, lit);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++open;
            last = lit;
          }
        }
        if (sat) continue;
        if (open == 0) return false;
        if (open == 1) {
          a[static_cast<std::size_t>(std::abs(last) - 1)] = last > 0 ? 1 : -1;
          changed = true;
        }
      }
    }
    for (const Clause& c : clauses_) {
      bool sat = false;
      int pick = 0;
      for (int lit : c) {
        const int v = value(a, lit);
        if (v > 0) sat = true;
        if (v == 0 && pick == 0) pick = lit;
      }
      if (sat) continue;
      for (int choice : {pick, -pick}) {
        std::vector<int> b = a;
        b[static_cast<std::size_t>(std::abs(choice) - 1)] = choice > 0 ? 1 : -1;
        if (search(b)) {
          a = std::move(b);
          return true;
        }
      }
      return false;
    }
    return true;
  }

  int n_;
  const std::vector<Clause>& clauses_;
};

struct TreeNode {
  enum class Kind { D4, Cut, Unencodable } kind = Kind::D4;
  int line = 0;
  std::vector<Edge> contract;
  std::optional<std::pair<LinkPair, LinkPair>> pairs;
  VertexCycle cycle;
  std::vector<Vertex> path;
  std::optional<std::array<VertexCycle, 2>> parts;
  std::vector<TreeNode> children;
  std::string text;
};

class Checker {
 public:
  explicit Checker(const SimpleGraph& g) : g_(g) {}

  ScriptReport run(std::istream& in) {
    std::vector<std::pair<int, std::string>> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string s = strip(raw);
      if (!s.empty()) lines.emplace_back(lineno, std::move(s));
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto& [ln, text] = lines[i];
      StepReport step{ln, text, StepStatus::Verified, ""};
      try {
        dispatch(lines, i, step);
      } catch (const ParseError& e) {
        if (e.line() != 0) throw;
        throw ParseError(ln, e.message());
      } catch (const StepFailure& f) {
        step.status = StepStatus::Failed;
        step.message = f.what();
      }
      report_.steps.push_back(std::move(step));
    }
    close();
    return std::move(report_);
  }

 private:
  struct StepFailure : Error {
    using Error::Error;
  };
  [[noreturn]] static void fail(const std::string& m) { throw StepFailure(m); }

  // ----------------------------------------------------------- dispatch

  void dispatch(const std::vector<std::pair<int, std::string>>& lines, std::size_t& i,
                StepReport& step) {
    const std::string& text = lines[i].second;
    auto words = split_words(text);
    const std::string& head = words[0];
    if (head == "axiom") return axiom(words);
    if (head == "perm") return perm(text);
    if (head == "check") return check(text);
    if (head == "octet") return octet(words);
    if (head == "unencodable") {
      step.status = StepStatus::Unencodable;
      step.message = text.size() > 12 ? text.substr(12) : "";
      return;
    }
    if (head == "same") {
      if (words.size() != 3) throw ParseError(0, "expected 'same A B'");
      if (!same_pair(resolve(words[1]), resolve(words[2]))) {
        fail(words[1] + " and " + words[2] + " are different pairs");
      }
      return;
    }
    if (head == "clash") return clash(lines, i, step);
    if (head == "d4") return single_d4(words);
    if (head == "imply" || head == "refute") return imply(words, step);
    if (head == "transport") return transport(text, step);
    throw ParseError(0, "unknown step '" + head + "'");
  }

  // ----------------------------------------------------------- pieces

  LinkPair resolve(const std::string& token) {
    if (!token.empty() && std::isalpha(static_cast<unsigned char>(token[0]))) {
      const auto it = names_.find(token);
      if (it == names_.end()) fail("unknown pair name '" + token + "'");
      return it->second;
    }
    LinkPair p = parse_link_pair(token);
    if (auto c = check_link_pair(g_, p); !c) fail(c.message);
    return p;
  }

  std::string display(const LinkPair& p) const {
    const auto it = display_.find(pair_key(p));
    return it != display_.end() ? it->second : format_pair(p);
  }

  Permutation permutation(const std::string& expr) {
    const std::string e = strip(expr);
    Permutation result = Permutation::identity(g_.order());
    if (e.empty()) throw ParseError(0, "empty permutation");
    for (const std::string& raw : split_on(e, '*')) {
      const std::string term = strip(raw);
      if (!term.empty() && term[0] == '(') {
        result = result * Permutation::from_cycles(g_.order(), term);
        continue;
      }
      const auto caret = term.find('^');
      const std::string name = term.substr(0, caret);
      int power = 1;
      if (caret != std::string::npos) {
        try {
          std::size_t used = 0;
          power = std::stoi(term.substr(caret + 1), &used);
          if (used != term.size() - caret - 1) throw std::invalid_argument("power");
        } catch (const std::logic_error&) {
          throw ParseError(0, "bad exponent in '" + term + "'");
        }
      }
      Permutation base = Permutation::identity(g_.order());
      if (name != "id") {
        const auto it = perms_.find(name);
        if (it == perms_.end()) throw ParseError(0, "unknown permutation '" + name + "'");
        base = it->second;
      }
      result = result * base.pow(power);
    }
    return result;
  }

  int atom(const LinkPair& p) {
    const auto [it, fresh] = atoms_.try_emplace(pair_key(p), static_cast<int>(atoms_.size()));
    if (fresh) atom_pairs_.push_back(p);
    return it->second;
  }

  Clause clause(const Fact& f) {
    Clause c;
    if (f.kind == Fact::Kind::Clash) {
      for (const auto& p : f.lhs) c.push_back(-(atom(p) + 1));
    } else {
      c.push_back(-(atom(f.lhs[0]) + 1));
      for (const auto& p : f.rhs) c.push_back(atom(p) + 1);
    }
    return c;
  }

  std::vector<Clause> knowledge(bool with_assumed) {
    std::vector<Clause> cs;
    for (const Fact& f : facts_)
      if (with_assumed || !f.assumed) cs.push_back(clause(f));
    for (const auto& o : octets_) {
      Clause c;
      for (const auto& p : o.links) c.push_back(atom(p) + 1);
      cs.push_back(std::move(c));
    }
    return cs;
  }

  void add_fact(Fact f, const std::string& label) {
    facts_.push_back(f);
    if (!label.empty()) {
      if (labels_.contains(label)) throw ParseError(0, "label '" + label + "' used twice");
      labels_.emplace(label, std::move(f));
    }
  }

  // Splits "... as LABEL" off the end.
  static std::string take_label(std::vector<std::string>& words) {
    if (words.size() >= 2 && words[words.size() - 2] == "as") {
      std::string label = words.back();
      words.resize(words.size() - 2);
      return label;
    }
    return {};
  }

  // ----------------------------------------------------------- steps

  void axiom(const std::vector<std::string>& w) {
    if (w.size() != 2 || (w[1] != "sachs" && w[1] != "d4" && w[1] != "cut")) {
      throw ParseError(0, "expected 'axiom sachs', 'axiom d4' or 'axiom cut'");
    }
    axioms_.insert(w[1]);
  }

  void perm(const std::string& text) {
    const auto eq = text.find('=');
    const auto w = split_words(text.substr(0, eq));
    if (eq == std::string::npos || w.size() != 2) throw ParseError(0, "expected 'perm NAME = EXPR'");
    if (perms_.contains(w[1])) throw ParseError(0, "permutation '" + w[1] + "' defined twice");
    perms_.emplace(w[1], permutation(text.substr(eq + 1)));
  }

  void check(const std::string& text) {
    const std::string rest = strip(text.substr(5));
    if (rest.rfind("automorphism", 0) == 0) {
      const std::string expr = rest.substr(12);
      if (!is_automorphism(g_, permutation(expr))) fail(strip(expr) + " is not an automorphism");
      return;
    }
    const auto eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError(0, "expected 'check A = B'");
    const Permutation a = permutation(rest.substr(0, eq));
    const Permutation b = permutation(rest.substr(eq + 1));
    if (a != b) fail(a.to_cycles() + " differs from " + b.to_cycles());
  }

  void octet(const std::vector<std::string>& w) {
    if (w.size() < 3) throw ParseError(0, "expected 'octet NAME prefix=P ...'");
    PetersenOctet o;
    o.name = w[1];
    std::string prefix, from, perm_expr;
    std::vector<std::string> listed;
    for (std::size_t k = 2; k < w.size(); ++k) {
      const auto eq = w[k].find('=');
      const std::string key = eq == std::string::npos ? "" : w[k].substr(0, eq);
      if (key == "prefix") {
        prefix = w[k].substr(eq + 1);
      } else if (key == "from") {
        from = w[k].substr(eq + 1);
      } else if (key == "perm") {
        perm_expr = w[k].substr(eq + 1);
      } else {
        listed.push_back(w[k]);
      }
    }
    if (prefix.empty()) throw ParseError(0, "octet needs prefix=");
    if (!listed.empty() && listed.size() != 8) throw ParseError(0, "an octet lists 8 pairs");
    if (!axioms_.contains("sachs")) fail("parity axiom not declared (axiom sachs)");
    if (octet_names_.contains(o.name)) throw ParseError(0, "octet '" + o.name + "' declared twice");
    if (!from.empty()) {
      const auto it = octet_names_.find(from);
      if (it == octet_names_.end()) fail("unknown octet '" + from + "'");
      const Permutation p = permutation(perm_expr.empty() ? "id" : perm_expr);
      if (!is_automorphism(g_, p)) fail(p.to_cycles() + " is not an automorphism of the host");
      try {
        o = build_octet(g_, octets_[it->second], p, o.name);
      } catch (const InvalidArgument& e) {
        fail(e.what());
      }
      for (std::size_t j = 0; j < listed.size(); ++j) {
        const LinkPair given = parse_link_pair(listed[j]);
        if (!same_pair(given, o.links[j])) {
          fail(prefix + std::to_string(j + 1) + " is " + format_pair(o.links[j]) + ", not " +
               listed[j]);
        }
      }
    } else {
      if (!perm_expr.empty() && permutation(perm_expr) != Permutation::identity(g_.order())) {
        throw ParseError(0, "perm= needs from=");
      }
      if (listed.empty()) throw ParseError(0, "a base octet lists its 8 pairs");
      for (std::size_t j = 0; j < 8; ++j) o.links[j] = parse_link_pair(listed[j]);
      if (auto c = verify_octet(g_, o); !c) fail(c.message);
    }
    for (std::size_t j = 0; j < 8; ++j) {
      const std::string name = prefix + std::to_string(j + 1);
      if (names_.contains(name)) throw ParseError(0, "pair name '" + name + "' defined twice");
      names_.emplace(name, o.links[j]);
      display_.try_emplace(pair_key(o.links[j]), name);
    }
    octet_names_.emplace(o.name, octets_.size());
    octets_.push_back(std::move(o));
  }

  TreeNode parse_node(const std::vector<std::pair<int, std::string>>& lines, std::size_t& i) {
    if (i >= lines.size()) throw ParseError(lines.back().first, "clash tree ends early");
    const auto& [ln, text] = lines[i++];
    auto w = split_words(text);
    if (w.size() > 1 && w[0] == "d4" && w[1] == "contract") w.erase(w.begin() + 1);
    TreeNode node;
    node.line = ln;
    node.text = text;
    try {
      if (w[0] == "d4") {
        node.kind = TreeNode::Kind::D4;
        if (w.size() != 2 && !(w.size() == 5 && w[2] == "pairs")) {
          throw ParseError(0, "expected 'd4 EDGES [pairs A B]'");
        }
        node.contract = parse_edge_list(w[1]);
        if (w.size() == 5) node.pairs = {parse_link_pair(w[3]), parse_link_pair(w[4])};
      } else if (w[0] == "cut") {
        node.kind = TreeNode::Kind::Cut;
        if (!(w.size() == 4 || (w.size() == 8 && w[4] == "->" && w[6] == "+")) || w[2] != "along") {
          throw ParseError(0, "expected 'cut CYCLE along PATH [-> A + B]'");
        }
        node.cycle = parse_cycle(w[1]);
        node.path = parse_cycle(w[3]);
        if (w.size() == 8) node.parts = std::array{parse_cycle(w[5]), parse_cycle(w[7])};
        node.children.push_back(parse_node(lines, i));
        node.children.push_back(parse_node(lines, i));
      } else if (w[0] == "unencodable") {
        node.kind = TreeNode::Kind::Unencodable;
      } else {
        throw ParseError(0, "expected 'd4', 'cut' or 'unencodable' inside a clash");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(ln, e.message());
    }
    return node;
  }

  // Returns Verified, Unencodable, or throws StepFailure.
  StepStatus verify_node(const TreeNode& n, const LinkPair& x, const LinkPair& y) {
    const std::string where = "line " + std::to_string(n.line) + ": ";
    switch (n.kind) {
      case TreeNode::Kind::Unencodable:
        return StepStatus::Unencodable;
      case TreeNode::Kind::D4: {
        if (n.pairs && !((same_pair(n.pairs->first, x) && same_pair(n.pairs->second, y)) ||
                         (same_pair(n.pairs->first, y) && same_pair(n.pairs->second, x)))) {
          fail(where + "this case is " + format_pair(x) + " with " + format_pair(y));
        }
        if (auto c = verify_d4_certificate(g_, {n.contract, x, y}); !c) {
          fail(where + "no D4 for " + format_pair(x) + " and " + format_pair(y) + ": " + c.message);
        }
        return StepStatus::Verified;
      }
      case TreeNode::Kind::Cut: {
        if (!axioms_.contains("cut")) fail(where + "cut lemma not declared (axiom cut)");
        const std::array<const VertexCycle*, 4> slot{&x.a, &x.b, &y.a, &y.b};
        int s = 0;
        while (s < 4 && normalize_cycle(*slot[s]) != normalize_cycle(n.cycle)) ++s;
        if (s == 4) {
          fail(where + format_cycle(n.cycle) + " is not a cycle of " + format_pair(x) + " or " +
               format_pair(y));
        }
        std::string why;
        const auto step = make_cut(g_, *slot[s], n.path, &why);
        if (!step) fail(where + why);
        if (auto c = verify_cut(g_, *step); !c) fail(where + c.message);
        const VertexCycle& partner = *slot[s ^ 1];
        for (Vertex v : n.path) {
          if (std::find(partner.begin(), partner.end(), v) != partner.end()) {
            fail(where + "cut " + format_cycle(n.path) + " meets " + format_cycle(partner));
          }
        }
        std::array<VertexCycle, 2> parts = step->parts;
        if (n.parts) {
          const auto a = normalize_cycle((*n.parts)[0]);
          const auto b = normalize_cycle((*n.parts)[1]);
          const auto p0 = normalize_cycle(parts[0]);
          const auto p1 = normalize_cycle(parts[1]);
          if (a == p1 && b == p0) {
            std::swap(parts[0], parts[1]);
          } else if (!(a == p0 && b == p1)) {
            fail(where + "parts are " + format_cycle(parts[0]) + " and " + format_cycle(parts[1]));
          }
        }
        StepStatus status = StepStatus::Verified;
        for (int k = 0; k < 2; ++k) {
          LinkPair nx = x, ny = y;
          LinkPair& t = s < 2 ? nx : ny;
          (s % 2 == 0 ? t.a : t.b) = parts[k];
          if (verify_node(n.children[k], nx, ny) == StepStatus::Unencodable) {
            status = StepStatus::Unencodable;
          }
        }
        return status;
      }
    }
    return StepStatus::Verified;
  }

  void clash(const std::vector<std::pair<int, std::string>>& lines, std::size_t& i,
             StepReport& step) {
    auto w = split_words(lines[i].second);
    const std::string label = take_label(w);
    if (w.size() != 3) throw ParseError(0, "expected 'clash A B [as LABEL]'");
    ++i;
    const TreeNode root = parse_node(lines, i);
    if (i >= lines.size() || lines[i].second != "end") {
      throw ParseError(i < lines.size() ? lines[i].first : lines.back().first,
                       "expected 'end' after the clash tree");
    }
    if (!axioms_.contains("d4")) fail("D4 lemma not declared (axiom d4)");
    const LinkPair a = resolve(w[1]);
    const LinkPair b = resolve(w[2]);
    const StepStatus s = verify_node(root, a, b);
    Fact f{Fact::Kind::Clash, {a, b}, {}};
    if (s == StepStatus::Unencodable) {
      step.status = s;
      step.message = "a case of the clash is marked unencodable; the clash is assumed";
      f.assumed = true;
    }
    add_fact(std::move(f), label);
  }

  void single_d4(std::vector<std::string> w) {
    const std::string label = take_label(w);
    if (w.size() > 1 && w[1] == "contract") w.erase(w.begin() + 1);
    if (w.size() != 5 || w[2] != "pairs") throw ParseError(0, "expected 'd4 EDGES pairs A B'");
    if (!axioms_.contains("d4")) fail("D4 lemma not declared (axiom d4)");
    const auto edges = parse_edge_list(w[1]);
    const LinkPair a = resolve(w[3]);
    const LinkPair b = resolve(w[4]);
    if (auto c = verify_d4_certificate(g_, {edges, a, b}); !c) fail(c.message);
    add_fact({Fact::Kind::Clash, {a, b}, {}}, label);
  }

  // Parses "P -> A|B" or "refute P" (words already without the label).
  Fact parse_claim(const std::vector<std::string>& w, std::size_t from) {
    Fact f;
    if (from < w.size() && w[from] == "refute") {
      if (w.size() - from != 2) throw ParseError(0, "expected 'refute P'");
      f.lhs = {resolve(w[from + 1])};
      return f;
    }
    if (from < w.size() && w[from] == "clash") {
      if (w.size() - from != 3) throw ParseError(0, "expected 'clash A B'");
      f.kind = Fact::Kind::Clash;
      f.lhs = {resolve(w[from + 1]), resolve(w[from + 2])};
      return f;
    }
    if (w.size() - from != 3 || w[from + 1] != "->") throw ParseError(0, "expected 'P -> A|B|...'");
    f.lhs = {resolve(w[from])};
    for (const std::string& t : split_on(w[from + 2], '|')) f.rhs.push_back(resolve(t));
    return f;
  }

  void imply(std::vector<std::string> w, StepReport& step) {
    const std::string label = take_label(w);
    std::string by;
    if (w.size() >= 2 && w[w.size() - 2] == "by") {
      by = w.back();
      w.resize(w.size() - 2);
    }
    Fact claim = w[0] == "refute" ? parse_claim(w, 0) : parse_claim(w, 1);
    const PetersenOctet* octet = nullptr;
    if (!by.empty()) {
      const auto it = octet_names_.find(by);
      if (it == octet_names_.end()) fail("unknown octet '" + by + "'");
      octet = &octets_[it->second];
    }
    const auto counter_model = [&](bool with_assumed) {
      std::vector<Clause> cs = knowledge(with_assumed);
      cs.push_back({atom(claim.lhs[0]) + 1});
      for (const auto& p : claim.rhs) cs.push_back({-(atom(p) + 1)});
      return Solver(static_cast<int>(atoms_.size()), cs).solve();
    };
    if (const auto model = counter_model(true)) {
      std::set<std::string> scope;
      if (octet)
        for (const auto& p : octet->links) scope.insert(pair_key(p));
      std::string open;
      for (std::size_t k = 0; k < model->size(); ++k) {
        if ((*model)[k] <= 0) continue;
        const LinkPair& p = atom_pairs_[k];
        if (same_pair(p, claim.lhs[0]) || (octet && !scope.contains(pair_key(p)))) continue;
        open += (open.empty() ? "" : ", ") + display(p);
      }
      fail("open case: " + display(claim.lhs[0]) + " linked together with " +
           (open.empty() ? std::string("nothing else") : open));
    }
    if (counter_model(false)) {
      claim.assumed = true;
      step.message = "follows only with assumed clashes";
    }
    add_fact(std::move(claim), label);
  }

  void transport(const std::string& text, StepReport& step) {
    auto w = split_words(text);
    const std::string label = take_label(w);
    const auto arrow = std::find(w.begin(), w.end(), "=>");
    if (arrow - w.begin() < 3) throw ParseError(0, "expected 'transport PERM LABEL [=> CLAIM]'");
    const std::string source = *(arrow - 1);
    std::string expr;
    for (auto it = w.begin() + 1; it != arrow - 1; ++it) expr += *it;
    const Permutation p = permutation(expr);
    const auto it = labels_.find(source);
    if (it == labels_.end()) fail("no verified fact labelled '" + source + "'");
    if (!is_automorphism(g_, p)) fail(p.to_cycles() + " is not an automorphism of the host");
    Fact image = it->second;
    try {
      for (auto& q : image.lhs) q = apply_permutation(g_, q, p);
      for (auto& q : image.rhs) q = apply_permutation(g_, q, p);
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
    if (arrow != w.end()) {
      const std::vector<std::string> rest(arrow + 1, w.end());
      const Fact claim = parse_claim(rest, 0);
      if (!same_fact(claim, image)) fail("the image of " + source + " is " + describe(image));
    }
    if (image.assumed) step.message = "image of a fact that rests on assumed clashes";
    add_fact(std::move(image), label);
  }

  std::string describe(const Fact& f) const {
    if (f.kind == Fact::Kind::Clash) return "clash " + display(f.lhs[0]) + " " + display(f.lhs[1]);
    if (f.rhs.empty()) return "refute " + display(f.lhs[0]);
    std::string out = display(f.lhs[0]) + " ->";
    for (std::size_t k = 0; k < f.rhs.size(); ++k) out += (k ? "|" : " ") + display(f.rhs[k]);
    return out;
  }

  void close() {
    if (octets_.empty()) {
      report_.closed = false;
      report_.closure_message = "no octet declared";
      return;
    }
    const auto strict = knowledge(false);
    report_.closed_without_assumptions =
        !Solver(static_cast<int>(atoms_.size()), strict).solve().has_value();
    const auto all = knowledge(true);
    const auto model = Solver(static_cast<int>(atoms_.size()), all).solve();
    report_.closed = !model.has_value();
    for (const Fact& f : facts_) report_.assumptions += f.assumed && f.kind == Fact::Kind::Clash;
    if (model) {
      std::string linked;
      for (std::size_t k = 0; k < model->size(); ++k)
        if ((*model)[k] > 0) linked += (linked.empty() ? "" : ", ") + display(atom_pairs_[k]);
      report_.closure_message = "consistent without a knotted D4 when linked: " + linked;
    } else {
      report_.closure_message = "every assignment forces a knotted D4";
      if (!report_.closed_without_assumptions) {
        report_.closure_message +=
            ", counting " + std::to_string(report_.assumptions) + " assumed clash(es)";
      }
    }
  }

  const SimpleGraph& g_;
  ScriptReport report_;
  std::set<std::string> axioms_;
  std::map<std::string, Permutation> perms_;
  std::map<std::string, LinkPair> names_;
  std::map<std::string, std::string> display_;
  std::map<std::string, std::size_t> octet_names_;
  std::vector<PetersenOctet> octets_;
  std::map<std::string, int> atoms_;
  std::vector<LinkPair> atom_pairs_;
  std::vector<Fact> facts_;
  std::map<std::string, Fact> labels_;
};

}  // namespace

std::string to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Verified:
      return "Verified";
    case StepStatus::Failed:
      return "Failed";
    case StepStatus::Unencodable:
      return "Unencodable";
  }
  return "?";
}

std::size_t ScriptReport::count(StepStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [&](const StepReport& r) { return r.status == s; }));
}

ScriptReport check_script(const SimpleGraph& g, std::istream& script) {
  return Checker(g).run(script);
}

ScriptReport check_script_file(const SimpleGraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open script '" + path + "'");
  return check_script(g, in);
}

bool closure_check(const SimpleGraph& g, std::istream& script) {
  return check_script(g, script).closed;
}

}  // namespace knotgraph::proof
