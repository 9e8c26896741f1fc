#pragma once

// Checker for linking arguments about Petersen subgraphs: cycle pairs,
// homology cuts, D4 contraction certificates, symmetry transport and
// implications between "pair is linked" statements.

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotgraph/graph.hpp"

namespace knotgraph::proof {

using VertexCycle = std::vector<Vertex>;

/// Outcome of a check with a human-readable reason on failure.
struct Check {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
};

/// Digit notation: "36257" is the cycle (3,6,2,5,7); vertices above 9 use
/// "[10,11,3]". Throws ParseError (line 0) on bad input.
VertexCycle parse_cycle(const std::string& text);
std::string format_cycle(const VertexCycle& c);

/// Rotation to the smallest vertex, then the direction with the smaller
/// second vertex.
VertexCycle normalize_cycle(const VertexCycle& c);

/// k >= 3 distinct vertices, consecutive ones adjacent in g.
Check validate_cycle(const SimpleGraph& g, const VertexCycle& c);
std::vector<Edge> cycle_edges(const VertexCycle& c);

/// Two vertex-disjoint cycles, e.g. "148,36257".
struct LinkPair {
  VertexCycle a;
  VertexCycle b;
};

LinkPair parse_link_pair(const std::string& text);
std::string format_pair(const LinkPair& p);
/// Normalized text used as identity: both cycles normalized, then sorted.
std::string pair_key(const LinkPair& p);
bool same_pair(const LinkPair& x, const LinkPair& y);

Check check_link_pair(const SimpleGraph& g, const LinkPair& p);

/// Vertex-wise image. Throws InvalidArgument when the image is not a valid
/// pair of g.
LinkPair apply_permutation(const SimpleGraph& g, const LinkPair& p, const Permutation& perm);

/// Splitting `cycle` along a chord or a path whose ends lie on the cycle
/// and whose interior avoids it. The first part follows the cycle from the
/// path's first vertex to its last one, the second part the rest.
struct CutStep {
  VertexCycle cycle;
  std::vector<Vertex> cut;
  std::array<VertexCycle, 2> parts;
};

/// Builds the parts; fails when the cut is not a chord or path of the
/// required shape.
std::optional<CutStep> make_cut(const SimpleGraph& g, const VertexCycle& cycle,
                                const std::vector<Vertex>& cut, std::string* why = nullptr);

/// Both parts are cycles of g, the symmetric difference of their edge sets
/// is the cycle's edge set, and their intersection is the cut's edge set.
Check verify_cut(const SimpleGraph& g, const CutStep& step);

/// Contracting `contract` inside the union of the four cycles turns them
/// into a D4, possibly with subdivided edges: pair1's cycles become one
/// pair of opposite cycles and pair2's the other.
struct D4Certificate {
  std::vector<Edge> contract;
  LinkPair pair1;
  LinkPair pair2;
};

Check verify_d4_certificate(const SimpleGraph& g, const D4Certificate& cert);

/// "(1,4)(2,5)" to edges and back.
std::vector<Edge> parse_edge_list(const std::string& text);
std::string format_edge_list(const std::vector<Edge>& edges);

/// Eight disjoint cycle pairs of a Petersen-family subgraph with eight
/// vertices.
struct PetersenOctet {
  std::string name;
  std::array<LinkPair, 8> links;
};

/// Every pair is valid in g; the union of the 16 cycles is a graph with 8
/// vertices in the Petersen family and not bipartite; and the 8 pairs are
/// exactly its pairs of disjoint cycles.
Check verify_octet(const SimpleGraph& g, const PetersenOctet& o);

/// Image of every link under p. Throws InvalidArgument when the image
/// fails verify_octet.
PetersenOctet build_octet(const SimpleGraph& g, const PetersenOctet& base, const Permutation& p,
                          std::string name);

/// Smallest contraction set (at most `max_edges` host edges between
/// vertices of the four cycles) making a valid certificate. Advisory only.
std::optional<std::vector<Edge>> find_d4_contraction(const SimpleGraph& g, const LinkPair& pair1,
                                                     const LinkPair& pair2, int max_edges = 5);

struct CutOption {
  VertexCycle cycle;
  std::vector<Vertex> cut;
};

/// Searches for a clash tree between two pairs: a D4 certificate, or a cut
/// from `cuts` (every chord and 2-edge path when empty) whose two cases
/// each have a tree. Returns the tree in script syntax, indented by
/// `indent`. Advisory only; check_script verifies the result.
std::optional<std::string> suggest_clash(const SimpleGraph& g, const LinkPair& p,
                                         const LinkPair& q, const std::vector<CutOption>& cuts,
                                         int max_depth = 4, int max_edges = 5);

// ------------------------------------------------------------------ scripts

enum class StepStatus { Verified, Failed, Unencodable };
std::string to_string(StepStatus s);

struct StepReport {
  int line = 0;
  std::string text;
  StepStatus status = StepStatus::Verified;
  std::string message;
};

struct ScriptReport {
  std::vector<StepReport> steps;
  /// No assignment of linked pairs satisfies every fact and every octet's
  /// parity axiom without a knotted D4. Clashes with an unencodable case
  /// count as facts here, as assumptions.
  bool closed = false;
  /// The same with assumed clashes and everything derived from them left out.
  bool closed_without_assumptions = false;
  /// Number of assumed clashes.
  std::size_t assumptions = 0;
  std::string closure_message;

  std::size_t count(StepStatus s) const;
  bool all_verified() const { return count(StepStatus::Failed) == 0; }
};

/// Checks a script against host g. Throws ParseError for malformed input;
/// steps that parse but do not verify are reported as Failed.
ScriptReport check_script(const SimpleGraph& g, std::istream& script);
ScriptReport check_script_file(const SimpleGraph& g, const std::string& path);

/// Closure of a script, as in ScriptReport::closed.
bool closure_check(const SimpleGraph& g, std::istream& script);

}  // namespace knotgraph::proof
