#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotgraph/graph.hpp"

namespace knotgraph {

/// One pass of a strand through a crossing. A crossing's sign is +1 when the
/// under-strand runs left to right beneath the over-strand, seen along the
/// over-strand's orientation, and -1 otherwise.
struct Passage {
  int crossing = 0;
  bool over = false;
  int sign = 1;
  auto operator<=>(const Passage&) const = default;
};

/// Parses "<id><o|u><+|->", e.g. "12u-". Throws InvalidArgument.
Passage parse_passage(const std::string& token);
std::string to_string(const Passage& p);

/// Diagram of an embedded graph: for each edge, the crossings met when
/// walking it from its lower to its higher endpoint.
struct SpatialDiagram {
  std::string name;
  SimpleGraph graph;
  std::map<Edge, std::vector<Passage>> strands;

  const std::vector<Passage>& strand(Edge e) const;
  /// Sorted ids of all crossings.
  std::vector<int> crossing_ids() const;
};

struct Validation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

/// Every crossing appears exactly twice, once over and once under, with
/// one sign; every strand belongs to an edge of the graph.
Validation validate_diagram(const SpatialDiagram& d);

/// Reads `diagram <name> [n]` followed by `edge u v: p1 p2 ...` lines
/// (u < v). Edges may be listed without passages. Throws ParseError, also
/// when validation fails.
SpatialDiagram read_diagram(std::istream& in);
SpatialDiagram read_diagram_file(const std::string& path);
void write_diagram(std::ostream& out, const SpatialDiagram& d);

/// Swaps over and under at `id` and negates its sign. Throws
/// InvalidArgument for an unknown id.
SpatialDiagram flip_crossing(const SpatialDiagram& d, int id);

/// Oriented Gauss-style code of one closed curve.
struct KnotCode {
  std::vector<Passage> entries;
  auto operator<=>(const KnotCode&) const = default;
};

/// Space separated passages, e.g. "1o+ 2u+ 3o+ 1u+ 2o+ 3u+".
KnotCode parse_knot_code(const std::string& text);
std::string to_string(const KnotCode& k);
Validation validate_code(const KnotCode& k);

/// A cycle given as a vertex sequence v1 v2 ... vk (closing edge vk v1).
using Cycle = std::vector<Vertex>;

/// Throws InvalidArgument unless c is a cycle of g (k >= 3, distinct
/// vertices, consecutive vertices adjacent).
void check_cycle(const SimpleGraph& g, const Cycle& c);

/// Crossings between edges of the cycle, read along the cycle. Signs are
/// taken relative to the cycle's orientation.
KnotCode cycle_subdiagram(const SpatialDiagram& d, const Cycle& c);

/// Parity of the crossings where c1 passes over c2. Throws InvalidArgument
/// for invalid or intersecting cycles.
int lk2(const SpatialDiagram& d, const Cycle& c1, const Cycle& c2);

/// Coefficients of the Conway polynomial in z, lowest degree first.
using ConwayPolynomial = std::vector<long long>;

/// Multi-component oriented link code.
using LinkCode = std::vector<std::vector<Passage>>;

/// Which crossing the skein recursion resolves next. Descending switches
/// the first crossing first met from below, walking components in order;
/// Ascending switches the first crossing first met from above, walking
/// components in reverse order.
enum class SkeinOrder { Descending, Ascending };

inline constexpr std::size_t kDefaultSkeinBudget = 4'000'000;

/// Conway polynomial by skein resolution with memoization. Throws
/// BudgetExceeded once more than `budget` nodes are expanded.
ConwayPolynomial conway_polynomial(const LinkCode& link, SkeinOrder order = SkeinOrder::Descending,
                                   std::size_t budget = kDefaultSkeinBudget);
long long conway_a2(const KnotCode& k, SkeinOrder order = SkeinOrder::Descending,
                    std::size_t budget = kDefaultSkeinBudget);
int arf(const KnotCode& k, std::size_t budget = kDefaultSkeinBudget);

enum class UnknotStatus { Unknot, Knotted, Inconclusive };
std::string to_string(UnknotStatus s);

struct KnotInvariants {
  /// Absent when the skein budget ran out.
  std::optional<long long> a2;
  int arf = 0;
  UnknotStatus status = UnknotStatus::Inconclusive;
};

inline constexpr std::size_t kDefaultMoveBudget = 2000;

/// Reidemeister simplification that never lies: Knotted when a2 != 0,
/// Unknot when R1/R2 reductions plus a search over at most `budget` R3
/// rearrangements reach the empty code, Inconclusive otherwise.
UnknotStatus unknot_check(const KnotCode& k, std::size_t budget = kDefaultMoveBudget);

/// Single Reidemeister steps on a code, exposed for testing. Each returns
/// nothing when no move of that kind applies at the given index.
std::optional<KnotCode> reduce_r1(const KnotCode& k);
std::optional<KnotCode> reduce_r2(const KnotCode& k);
/// All codes reachable by one R3 move.
std::vector<KnotCode> r3_moves(const KnotCode& k);

KnotInvariants knot_invariants(const KnotCode& k, std::size_t skein_budget = kDefaultSkeinBudget,
                               std::size_t move_budget = kDefaultMoveBudget);

/// Every cycle of g in canonical form: smallest vertex first, then the
/// direction whose second vertex is smaller. Throws BudgetExceeded beyond
/// `limit` cycles.
std::vector<Cycle> all_cycles(const SimpleGraph& g, std::size_t limit = 1'000'000);

struct CensusEntry {
  Cycle cycle;
  KnotInvariants invariants;
};

struct Census {
  std::vector<CensusEntry> entries;
  /// False when the cycle enumeration budget ran out.
  bool complete = true;
  std::size_t knotted() const;
  std::size_t inconclusive() const;
};

Census knotted_cycle_census(const SpatialDiagram& d, std::size_t cycle_limit = 1'000'000,
                            unsigned threads = 0);

/// The multigraph D4: vertices w1..w4, edges e1..e8, cycle Ci made of
/// e(2i-1) and e(2i), both running from w(i) to w(i+1 mod 4).
struct D4Diagram {
  std::string name;
  std::array<std::vector<Passage>, 8> strands;
};

Validation validate_d4(const D4Diagram& d);
/// `d4 <name>` then `e<k>: passages` lines, k = 1..8.
D4Diagram read_d4(std::istream& in);
D4Diagram read_d4_file(const std::string& path);
void write_d4(std::ostream& out, const D4Diagram& d);

/// lk2(Ci, Cj) for i != j in 1..4.
int d4_lk2(const D4Diagram& d, int i, int j);
/// Code of the Hamiltonian cycle that uses e(2i-1) or e(2i) according to
/// bit i-1 of `choice`.
KnotCode d4_hamiltonian(const D4Diagram& d, unsigned choice);
/// Sum of the Arf invariants of the 16 Hamiltonian cycles, mod 2.
int d4_sigma(const D4Diagram& d, std::size_t budget = kDefaultSkeinBudget);

}  // namespace knotgraph
