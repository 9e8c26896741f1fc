// knotgraph command-line entry point.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotgraph/diagram.hpp"
#include "knotgraph/errors.hpp"
#include "knotgraph/family.hpp"
#include "knotgraph/graph_io.hpp"
#include "knotgraph/minor.hpp"
#include "knotgraph/proofkit.hpp"

namespace {

using namespace knotgraph;
using json = nlohmann::ordered_json;

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct Common {
  std::string json_path;
  unsigned threads = 0;
};

void write_json(const Common& c, const json& j) {
  if (c.json_path.empty()) return;
  std::ofstream out(c.json_path);
  if (!out) throw Error("cannot write '" + c.json_path + "'");
  out << j.dump(2) << '\n';
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw Error("cannot write '" + path + "'");
  return file;
}

std::string join(const std::vector<Vertex>& vs, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(vs[i]);
  }
  return s;
}

// ------------------------------------------------------------------ family

struct FamilyArgs {
  std::string graph;
  std::string name;
  std::size_t cap = 200000;
  std::string out;
};

int cmd_family(const FamilyArgs& a, const Common& c) {
  const NamedGraph seed = read_graph(a.graph, a.name);
  FamilyOptions opts;
  opts.cap = a.cap;
  opts.threads = c.threads;
  const Family f = enumerate_family(seed.graph, opts);
  if (!a.out.empty()) {
    std::ofstream file;
    write_family(open_output(a.out, file), f);
  }
  const std::size_t parentless = count_parentless(f);
  const std::size_t childless = count_childless(f);
  const std::size_t ybar = ybar_census(f);
  std::cout << "family " << seed.name << " members=" << f.size() << " parentless=" << parentless
            << " childless=" << childless << " ybar=" << ybar
            << " complete=" << (f.complete ? "true" : "false") << '\n';
  json j = {{"command", "family"},    {"seed", seed.name},         {"members", f.size()},
            {"parentless", parentless}, {"childless", childless}, {"ybar", ybar},
            {"complete", f.complete},   {"cap", a.cap}};
  write_json(c, j);
  return 0;
}

// ------------------------------------------------------------------ apex

struct ApexArgs {
  std::string graph;
  std::string name;
  int k = 2;
};

int cmd_apex(const ApexArgs& a, const Common& c) {
  const NamedGraph g = read_graph(a.graph, a.name);
  const auto cert = find_apex_set(g.graph, a.k);
  const bool ok = cert && verify_apex_certificate(g.graph, *cert);
  json j = {{"command", "apex"}, {"graph", g.name}, {"k", a.k}};
  if (cert) {
    std::cout << "apex " << g.name << " k=" << a.k << " removed=" << join(cert->removed)
              << " verified=" << (ok ? "true" : "false") << '\n';
    j["removed"] = cert->removed;
    j["verified"] = ok;
  } else {
    std::cout << "apex " << g.name << " k=" << a.k << " none\n";
    j["removed"] = nullptr;
  }
  write_json(c, j);
  return ok ? 0 : kExitFailed;
}

// ------------------------------------------------------------------ minors

struct MinorsArgs {
  std::string graph;
  std::string name;
  int k = 2;
  std::vector<std::string> symmetries;
  std::string out;
  bool require_all = false;
};

int cmd_minors(const MinorsArgs& a, const Common& c) {
  const NamedGraph g = read_graph(a.graph, a.name);
  std::vector<Permutation> syms;
  for (const std::string& s : a.symmetries) {
    Permutation p = Permutation::from_cycles(g.graph.order(), s);
    if (!is_automorphism(g.graph, p)) {
      throw InvalidArgument(p.to_cycles() + " is not an automorphism of " + g.name);
    }
    syms.push_back(p);
  }
  const auto reports = sweep_minors(g.graph, a.k, syms, c.threads);

  std::ofstream file;
  std::ostream& out = open_output(a.out, file);
  std::size_t certified = 0;
  std::size_t bad = 0;
  json lines = json::array();
  for (const MinorReport& r : reports) {
    json e = {{"minor", r.op.str()}};
    if (r.apex) {
      const bool ok = verify_apex_certificate(r.minor, *r.apex);
      out << r.op.str() << " apex=" << join(r.apex->removed) << (ok ? "" : " UNVERIFIED") << '\n';
      e["apex"] = r.apex->removed;
      e["verified"] = ok;
      ok ? ++certified : ++bad;
    } else {
      out << r.op.str() << " not-" << a.k << "apex\n";
      e["apex"] = nullptr;
    }
    lines.push_back(e);
  }
  const std::size_t missing = reports.size() - certified - bad;
  std::cout << "minors " << g.name << " k=" << a.k << " total=" << reports.size()
            << " certified=" << certified << " not-" << a.k << "apex=" << missing << '\n';
  write_json(c, {{"command", "minors"}, {"graph", g.name}, {"k", a.k}, {"minors", lines}});
  if (bad > 0) return kExitFailed;
  if (a.require_all && missing > 0) return kExitFailed;
  return 0;
}

// ------------------------------------------------------------------ diagram

struct DiagramArgs {
  std::string file;
  int crossing = 0;
  std::string cycle1;
  std::string cycle2;
  std::string out;
  std::size_t cycle_limit = 1'000'000;
};

// A lone number k names the k-th connected component, which must be a cycle.
Cycle resolve_cycle(const SimpleGraph& g, const std::string& text) {
  const bool number = !text.empty() && text.size() <= 2 &&
                      text.find_first_not_of("0123456789") == std::string::npos;
  if (!number) {
    Cycle c = proof::parse_cycle(text);
    check_cycle(g, c);
    return c;
  }
  const auto comps = connected_components(g);
  const std::size_t k = std::stoul(text);
  if (k < 1 || k > comps.size()) {
    throw InvalidArgument("no component " + text + " (diagram has " +
                          std::to_string(comps.size()) + ")");
  }
  const auto& comp = comps[k - 1];
  for (Vertex v : comp) {
    if (g.degree(v) != 2) throw InvalidArgument("component " + text + " is not a cycle");
  }
  Cycle c{comp.front()};
  Vertex prev = 0;
  while (true) {
    const auto nb = g.neighbors(c.back());
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == c.front()) break;
    prev = c.back();
    c.push_back(next);
  }
  check_cycle(g, c);
  return c;
}

int cmd_census(const DiagramArgs& a, const Common& c) {
  const SpatialDiagram d = read_diagram_file(a.file);
  const Census census = knotted_cycle_census(d, a.cycle_limit, c.threads);
  json entries = json::array();
  for (const CensusEntry& e : census.entries) {
    const auto& inv = e.invariants;
    std::cout << "cycle " << proof::format_cycle(e.cycle)
              << " a2=" << (inv.a2 ? std::to_string(*inv.a2) : std::string("?"))
              << " arf=" << inv.arf << ' ' << to_string(inv.status) << '\n';
    entries.push_back({{"cycle", e.cycle},
                       {"a2", inv.a2 ? json(*inv.a2) : json(nullptr)},
                       {"arf", inv.arf},
                       {"status", to_string(inv.status)}});
  }
  std::cout << "census " << d.name << " cycles=" << census.entries.size()
            << " knotted=" << census.knotted() << " inconclusive=" << census.inconclusive()
            << " complete=" << (census.complete ? "true" : "false") << '\n';
  write_json(c, {{"command", "diagram census"},
                 {"diagram", d.name},
                 {"complete", census.complete},
                 {"cycles", entries}});
  return census.complete ? 0 : kExitFailed;
}

int cmd_flip(const DiagramArgs& a, const Common& c) {
  const SpatialDiagram d = flip_crossing(read_diagram_file(a.file), a.crossing);
  std::ofstream file;
  write_diagram(open_output(a.out, file), d);
  write_json(c, {{"command", "diagram flip"}, {"diagram", d.name}, {"crossing", a.crossing}});
  return 0;
}

int cmd_lk2(const DiagramArgs& a, const Common& c) {
  const SpatialDiagram d = read_diagram_file(a.file);
  const Cycle c1 = resolve_cycle(d.graph, a.cycle1);
  const Cycle c2 = resolve_cycle(d.graph, a.cycle2);
  const int v = lk2(d, c1, c2);
  std::cout << v << '\n';
  write_json(c, {{"command", "diagram lk2"}, {"cycle1", c1}, {"cycle2", c2}, {"lk2", v}});
  return 0;
}

// ------------------------------------------------------------------ proof

struct ProofArgs {
  std::string host;
  std::string name;
  std::string script;
  bool verbose = false;
  bool require_closed = false;
  std::string pair1;
  std::string pair2;
  int depth = 4;
  int edges = 5;
};

int cmd_proof_check(const ProofArgs& a, const Common& c) {
  const NamedGraph host = read_graph(a.host, a.name);
  const proof::ScriptReport r = proof::check_script_file(host.graph, a.script);
  json steps = json::array();
  for (const proof::StepReport& s : r.steps) {
    const bool show = a.verbose || s.status != proof::StepStatus::Verified;
    if (show) {
      std::cout << "line " << s.line << ": " << proof::to_string(s.status) << "  " << s.text;
      if (!s.message.empty()) std::cout << "  (" << s.message << ')';
      std::cout << '\n';
    }
    steps.push_back({{"line", s.line},
                     {"text", s.text},
                     {"status", proof::to_string(s.status)},
                     {"message", s.message}});
  }
  const std::size_t failed = r.count(proof::StepStatus::Failed);
  const std::size_t unencodable = r.count(proof::StepStatus::Unencodable);
  if (failed == 0 && unencodable == 0) std::cout << "all steps Verified\n";
  std::cout << "proof steps=" << r.steps.size()
            << " verified=" << r.count(proof::StepStatus::Verified) << " failed=" << failed
            << " unencodable=" << unencodable << " assumptions=" << r.assumptions
            << " closed=" << (r.closed ? "true" : "false")
            << " closed-without-assumptions=" << (r.closed_without_assumptions ? "true" : "false")
            << '\n';
  std::cout << "closure: " << r.closure_message << '\n';
  write_json(c, {{"command", "proof check"},
                 {"host", host.name},
                 {"failed", failed},
                 {"unencodable", unencodable},
                 {"assumptions", r.assumptions},
                 {"closed", r.closed},
                 {"closed_without_assumptions", r.closed_without_assumptions},
                 {"closure", r.closure_message},
                 {"steps", steps}});
  if (failed > 0) return kExitFailed;
  if (a.require_closed && !r.closed) return kExitFailed;
  return 0;
}

int cmd_proof_suggest(const ProofArgs& a, const Common& c) {
  const NamedGraph host = read_graph(a.host, a.name);
  const proof::LinkPair p = proof::parse_link_pair(a.pair1);
  const proof::LinkPair q = proof::parse_link_pair(a.pair2);
  for (const proof::LinkPair* x : {&p, &q}) {
    if (auto chk = proof::check_link_pair(host.graph, *x); !chk) throw InvalidArgument(chk.message);
  }
  const auto tree = proof::suggest_clash(host.graph, p, q, {}, a.depth, a.edges);
  if (tree) {
    std::cout << "clash " << proof::format_pair(p) << ' ' << proof::format_pair(q) << '\n'
              << *tree << "end\n";
  } else {
    std::cout << "none\n";
  }
  write_json(c, {{"command", "proof suggest"},
                 {"pair1", proof::format_pair(p)},
                 {"pair2", proof::format_pair(q)},
                 {"tree", tree ? json(*tree) : json(nullptr)}});
  return tree ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph families, apex certificates, spatial diagrams and linking proofs"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--json", common.json_path, "Also write a JSON mirror of the result");
  app.add_option("--threads", common.threads,
                 "Worker count (default: KNOTGRAPH_THREADS or hardware count)");

  int code = 0;
  auto run = [&code](auto fn) {
    return [&code, fn] { code = fn(); };
  };

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Enumerate the ∇Y/Y∇ family of a seed graph");
  family->add_option("graph", fam.graph, "Graph file")->required()->check(CLI::ExistingFile);
  family->add_option("--name", fam.name, "Graph block to use (default: first)");
  family->add_option("--cap", fam.cap, "Member limit")->check(CLI::PositiveNumber);
  family->add_option("-o,--out", fam.out, "Write the member list here");
  family->callback(run([&] { return cmd_family(fam, common); }));

  ApexArgs ap;
  auto* apex = app.add_subcommand("apex", "Find and verify a k-apex set");
  apex->add_option("graph", ap.graph, "Graph file")->required()->check(CLI::ExistingFile);
  apex->add_option("--name", ap.name, "Graph block to use (default: first)");
  apex->add_option("-k", ap.k, "Apex size")->check(CLI::NonNegativeNumber);
  apex->callback(run([&] { return cmd_apex(ap, common); }));

  MinorsArgs mi;
  auto* minors = app.add_subcommand("minors", "Apex certificates for every G-e and G/e");
  minors->add_option("graph", mi.graph, "Graph file")->required()->check(CLI::ExistingFile);
  minors->add_option("--name", mi.name, "Graph block to use (default: first)");
  minors->add_option("-k", mi.k, "Apex size")->check(CLI::NonNegativeNumber);
  minors->add_option("--symmetry", mi.symmetries,
                     "Automorphism in cycle notation used to fold edges into orbits");
  minors->add_option("-o,--out", mi.out, "Write the certificate lines here");
  minors->add_flag("--require-all", mi.require_all, "Fail unless every minor is certified");
  minors->callback(run([&] { return cmd_minors(mi, common); }));

  DiagramArgs dg;
  auto* diagram = app.add_subcommand("diagram", "Spatial diagram analysis");
  diagram->require_subcommand(1);
  auto* census = diagram->add_subcommand("census", "Knot invariants of every cycle");
  census->add_option("file", dg.file, "Diagram file")->required()->check(CLI::ExistingFile);
  census->add_option("--cycle-limit", dg.cycle_limit, "Cycle enumeration limit")
      ->check(CLI::PositiveNumber);
  census->callback(run([&] { return cmd_census(dg, common); }));
  auto* flip = diagram->add_subcommand("flip", "Swap over and under at one crossing");
  flip->add_option("file", dg.file, "Diagram file")->required()->check(CLI::ExistingFile);
  flip->add_option("id", dg.crossing, "Crossing id")->required();
  flip->add_option("-o,--out", dg.out, "Write the diagram here (default: stdout)");
  flip->callback(run([&] { return cmd_flip(dg, common); }));
  auto* lk = diagram->add_subcommand("lk2", "Mod-2 linking number of two disjoint cycles");
  lk->add_option("file", dg.file, "Diagram file")->required()->check(CLI::ExistingFile);
  lk->add_option("cycle1", dg.cycle1, "Cycle (\"123\", \"[10,11,3]\") or component number")
      ->required();
  lk->add_option("cycle2", dg.cycle2, "Second cycle")->required();
  lk->callback(run([&] { return cmd_lk2(dg, common); }));

  ProofArgs pr;
  auto* proof = app.add_subcommand("proof", "Linking-argument scripts");
  proof->require_subcommand(1);
  auto* check = proof->add_subcommand("check", "Check a script against a host graph");
  check->add_option("host", pr.host, "Host graph file")->required()->check(CLI::ExistingFile);
  check->add_option("script", pr.script, "Script file")->required()->check(CLI::ExistingFile);
  check->add_option("--name", pr.name, "Graph block to use (default: first)");
  check->add_flag("-v,--verbose", pr.verbose, "List every step");
  check->add_flag("--require-closed", pr.require_closed, "Fail unless the argument closes");
  check->callback(run([&] { return cmd_proof_check(pr, common); }));
  auto* suggest = proof->add_subcommand("suggest", "Search for a clash tree between two pairs");
  suggest->add_option("host", pr.host, "Host graph file")->required()->check(CLI::ExistingFile);
  suggest->add_option("pair1", pr.pair1, "First pair, e.g. 148,36257")->required();
  suggest->add_option("pair2", pr.pair2, "Second pair")->required();
  suggest->add_option("--name", pr.name, "Graph block to use (default: first)");
  suggest->add_option("--depth", pr.depth, "Cut depth")->check(CLI::NonNegativeNumber);
  suggest->add_option("--edges", pr.edges, "Contraction size limit")->check(CLI::PositiveNumber);
  suggest->callback(run([&] { return cmd_proof_suggest(pr, common); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return code;
}
