// Acceptance run: one PASS/FAIL line per criterion, exit code = failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "knotgraph/catalog.hpp"
#include "knotgraph/diagram.hpp"
#include "knotgraph/family.hpp"
#include "knotgraph/minor.hpp"
#include "knotgraph/proofkit.hpp"
#include "support/geometry.hpp"

using namespace knotgraph;

namespace {

std::string data_dir = KNOTGRAPH_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [mismatch: " << what << ']';
    }
  }
};

struct Families {
  Family k7;
  Family k3311;
  Family e9e;
  Family g928;
};

const Families& families() {
  static const Families f{enumerate_family(complete_graph(7)),
                          enumerate_family(catalog::k3311()),
                          enumerate_family(catalog::e9e_cousin41()),
                          enumerate_family(catalog::g9_28())};
  return f;
}

std::size_t inclusive_descendants(const Family& f) {
  return genealogy(f, f.seed, Relation::Descendants, true).size();
}

// Every pair of vertices, independent of find_apex_set's search order.
bool any_planar_pair(const SimpleGraph& g) {
  for (Vertex a = 1; a <= g.order(); ++a) {
    for (Vertex b = a + 1; b <= g.order(); ++b) {
      const std::vector<Vertex> removed{a, b};
      if (is_planar(g.without_vertices(removed))) return true;
    }
  }
  return false;
}

void criterion1(Outcome& o) {
  const Families& f = families();
  o.detail << "K7=" << f.k7.size() << " K3311=" << f.k3311.size() << " E9+e=" << f.e9e.size()
           << " G9,28=" << f.g928.size();
  o.expect(f.k7.size() == 20, "K7 20");
  o.expect(f.k3311.size() == 58, "K3311 58");
  o.expect(f.e9e.size() == 110, "E9+e 110");
  o.expect(f.g928.size() == 1609, "G9,28 1609");
  for (const Family* x : {&f.k7, &f.k3311, &f.e9e, &f.g928}) o.expect(x->complete, "complete");
}

void criterion2(Outcome& o) {
  const Families& f = families();
  const std::size_t k7_desc = inclusive_descendants(f.k7);
  o.detail << "K7+desc=" << k7_desc << " K3311 parentless=" << count_parentless(f.k3311)
           << " childless=" << count_childless(f.k3311);
  o.expect(k7_desc == 14, "K7 and 13 descendants");
  o.expect(count_parentless(f.k3311) == 4, "K3311 parentless 4");
  o.expect(count_childless(f.k3311) == 4, "K3311 childless 4");

  std::map<int, int> by_order;
  std::vector<CanonicalKey> ten;
  for (const auto& [k, r] : f.e9e.members) {
    if (!is_parentless(r)) continue;
    ++by_order[r.n];
    if (r.n == 10) ten.push_back(k);
  }
  const std::size_t e9e_parentless = count_parentless(f.e9e);
  o.detail << " E9+e parentless=" << e9e_parentless << " (n8=" << by_order[8]
           << " n9=" << by_order[9] << " n10=" << by_order[10] << ')';
  o.expect(e9e_parentless == 6 && by_order[8] == 2 && by_order[9] == 1 && by_order[10] == 3,
           "E9+e parentless 1+2+3");
  KeySet printed{canonical_key(catalog::e9e_cousin41()), canonical_key(catalog::e9e_cousin47()),
                 canonical_key(catalog::e9e_cousin50())};
  o.expect(KeySet(ten.begin(), ten.end()) == printed, "10-vertex parentless match edge lists");

  const std::size_t g_desc = inclusive_descendants(f.g928);
  o.detail << " G9,28 parentless=" << count_parentless(f.g928) << " G9,28+desc=" << g_desc;
  o.expect(count_parentless(f.g928) == 25, "G9,28 parentless 25");
  o.expect(g_desc == 1062, "G9,28 and descendants 1062");
}

void criterion3(Outcome& o) {
  const Family& f = families().g928;
  std::vector<CanonicalKey> hits;
  for (const auto& [k, r] : f.members) {
    if (r.n == 16 && is_childless(r) &&
        genealogy(f, k, Relation::Ancestors, true).size() == 156) {
      hits.push_back(k);
    }
  }
  const SimpleGraph c = catalog::g9_28_cousin1151();
  o.expect(hits.size() == 1 && hits[0] == canonical_key(c),
           "unique 16-vertex childless member with 156 ancestors is Cousin 1151");
  const KeySet anc = genealogy(f, canonical_key(c), Relation::Ancestors, true);
  const KeySet desc = genealogy(f, f.seed, Relation::Descendants, true);
  std::size_t both = 0;
  for (const CanonicalKey& k : anc) both += desc.contains(k);
  o.detail << "matches=" << hits.size() << " ancestors=" << anc.size()
           << " in {G9,28}+desc=" << both << " (without G9,28 itself: "
           << both - anc.contains(f.seed) << ')';
  o.expect(both == 101, "101 in {G9,28} and its descendants");

  const auto reports = sweep_minors(c, 2);
  std::size_t certified = 0;
  std::size_t none = 0;
  bool none_are_contractions = true;
  bool exhaustive_agrees = true;
  for (const MinorReport& r : reports) {
    if (r.apex) {
      certified += verify_apex_certificate(r.minor, *r.apex);
    } else {
      ++none;
      none_are_contractions &= r.op.kind == MinorOp::Kind::Contract;
      exhaustive_agrees &= !any_planar_pair(r.minor);
    }
  }
  std::size_t table_ok = 0;
  for (const auto& e : catalog::cousin1151_apex_table()) {
    const SimpleGraph m = apply(c, e.op);
    if (e.apex) {
      table_ok += verify_apex_certificate(m, {{(*e.apex)[0], (*e.apex)[1]}});
    } else {
      table_ok += !any_planar_pair(m);
    }
  }
  o.detail << " minors=" << reports.size() << " certified=" << certified << " none=" << none
           << " table-entries-ok=" << table_ok;
  o.expect(reports.size() == 56 && certified == 54 && none == 2, "56 = 54 + 2");
  o.expect(none_are_contractions, "both failures are contractions");
  o.expect(exhaustive_agrees, "exhaustive pair search");
  o.expect(table_ok == 56, "published table entries");
}

void criterion4(Outcome& o) {
  const SimpleGraph g = catalog::g14_25();
  const Permutation inv = catalog::g14_25_involution();
  std::size_t listed_ok = 0;
  const auto table = catalog::g14_25_apex_table();
  for (const auto& e : table) {
    if (!e.apex) continue;
    const std::vector<Vertex> removed{(*e.apex)[0], (*e.apex)[1]};
    listed_ok += is_planar(apply(g, e.op).without_vertices(removed));
  }
  const bool automorphism = is_automorphism(g, inv) && !inv.is_identity() && (inv * inv).is_identity();
  std::size_t all_ok = 0;
  const auto all = sweep_minors(g, 2);
  for (const MinorReport& r : all) all_ok += r.apex && verify_apex_certificate(r.minor, *r.apex);
  const auto folded = sweep_minors(g, 2, {inv});
  o.detail << "listed=" << table.size() << " planar-after-removal=" << listed_ok
           << " involution=" << (automorphism ? "yes" : "no") << " minors=" << all.size()
           << " 2-apex=" << all_ok << " up-to-symmetry=" << folded.size();
  o.expect(table.size() == 26 && listed_ok == 26, "26 listed entries");
  o.expect(automorphism, "involution");
  o.expect(all.size() == 50 && all_ok == 50, "50 minors 2-apex");
  o.expect(folded.size() == 26, "26 up to symmetry");
}

void criterion5(Outcome& o) {
  const Families& f = families();
  o.detail << "ybar K7=" << ybar_census(f.k7) << " K3311=" << ybar_census(f.k3311)
           << " E9+e=" << ybar_census(f.e9e) << " G9,28=" << ybar_census(f.g928);
  for (const Family* x : {&f.k7, &f.k3311, &f.e9e, &f.g928}) o.expect(ybar_census(*x) == 0, "ybar 0");
  FamilyOptions opts;
  opts.cap = 10000;
  const Family big = enumerate_family(catalog::g14_25(), opts);
  o.detail << " G14,25 cap=" << opts.cap << " members=" << big.size()
           << " complete=" << (big.complete ? "true" : "false")
           << " ybar-within-cap=" << ybar_census(big);
  o.expect(!big.complete, "G14,25 capped run incomplete");
}

void criterion6(Outcome& o) {
  const proof::ScriptReport r =
      proof::check_script_file(catalog::g9_28(), data_dir + "/g9_28_ik.script");
  const std::size_t failed = r.count(proof::StepStatus::Failed);
  const std::size_t unencodable = r.count(proof::StepStatus::Unencodable);
  o.detail << "steps=" << r.steps.size() << " verified=" << r.count(proof::StepStatus::Verified)
           << " failed=" << failed << " unencodable=" << unencodable
           << " assumptions=" << r.assumptions << " closure=" << (r.closed ? "true" : "false")
           << " closure-without-assumptions=" << (r.closed_without_assumptions ? "true" : "false");
  for (const auto& s : r.steps) {
    if (s.status == proof::StepStatus::Failed) o.detail << "\n    line " << s.line << ": " << s.message;
  }
  o.expect(failed == 0, "all steps verified");
  o.expect(unencodable <= 5, "unencodable <= 5");
  o.expect(r.closed, "closure");
}

// Sequence of random R1 and R2 moves.
KnotCode random_variant(KnotCode k, std::mt19937_64& rng, int moves) {
  for (int i = 0; i < moves; ++i) {
    if (k.entries.empty() || rng() % 2 == 0) {
      const std::size_t at = k.entries.empty() ? 0 : rng() % k.entries.size();
      k = test_support::add_kink(k, at, rng() % 2 == 0, rng() % 2 == 0 ? 1 : -1);
    } else {
      const int c = k.entries[rng() % k.entries.size()].crossing;
      k = test_support::add_finger(k, c, rng() % 2 == 0, rng() % 2 == 0);
    }
  }
  return k;
}

void criterion7(Outcome& o) {
  const KnotCode unknot{};
  const KnotCode trefoil = parse_knot_code("1o+ 2u+ 3o+ 1u+ 2o+ 3u+");
  const KnotCode fig8 = parse_knot_code("1o+ 2u+ 3o- 4u- 2o+ 1u+ 4o- 3u-");
  const std::vector<std::pair<KnotCode, long long>> fixtures{{unknot, 0}, {trefoil, 1}, {fig8, -1}};
  for (const auto& [k, want] : fixtures) {
    o.expect(conway_a2(k) == want, "a2 fixture");
    o.expect(test_support::switching_a2(k) == want, "switching oracle");
    o.expect(test_support::polyak_viro_a2(k) == want, "Gauss diagram oracle");
  }
  o.detail << "a2(unknot,trefoil,figure-eight)=" << conway_a2(unknot) << ',' << conway_a2(trefoil)
           << ',' << conway_a2(fig8);

  std::mt19937_64 rng(20261015);
  std::size_t variants = 0;
  std::size_t a2_bad = 0;
  for (const auto& [k, want] : fixtures) {
    for (int t = 0; t < 60; ++t) {
      const KnotCode v = random_variant(k, rng, 1 + t % 4);
      ++variants;
      a2_bad += !validate_code(v) || conway_a2(v) != want;
    }
  }
  for (int t = 0; t < 60; ++t) {
    const auto scene = test_support::r3_scene(rng);
    ++variants;
    a2_bad += conway_a2(scene.before) != conway_a2(scene.after);
  }

  // Re-projections of one embedding differ by Reidemeister moves.
  const SimpleGraph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  std::size_t lk_variants = 0;
  std::size_t lk_bad = 0;
  for (int fixture = 0; fixture < 4; ++fixture) {
    const auto emb = test_support::random_embedding(two_triangles, rng, 3);
    int first = -1;
    for (int t = 0; t < 60; ++t) {
      const SpatialDiagram d = test_support::to_diagram(emb, test_support::random_rotation(rng));
      const int v = lk2(d, {1, 2, 3}, {4, 5, 6});
      if (first < 0) first = v;
      ++lk_variants;
      lk_bad += v != first;
    }
  }
  o.detail << " a2-variants=" << variants << " mismatches=" << a2_bad
           << " lk2-variants=" << lk_variants << " mismatches=" << lk_bad;
  o.expect(a2_bad == 0, "a2 invariance");
  o.expect(lk_bad == 0, "lk2 invariance");

  std::size_t d4s = 0;
  std::size_t counter = 0;
  std::size_t both = 0;
  for (int t = 0; t < 240; ++t) {
    const auto strands = test_support::random_d4_strands(rng, 2 + t % 2);
    const D4Diagram d = test_support::to_d4(strands, test_support::random_rotation(rng));
    const int expected = d4_lk2(d, 1, 3) & d4_lk2(d, 2, 4);
    ++d4s;
    both += expected;
    counter += d4_sigma(d) != expected;
  }
  o.detail << " D4-diagrams=" << d4s << " doubly-linked=" << both << " counterexamples=" << counter;
  o.expect(counter == 0, "sigma equivalence");
}

void criterion8(Outcome& o) {
  const SimpleGraph stars = catalog::two_star_complement();
  const SimpleGraph tri_star = catalog::triangle_star_complement();
  const SimpleGraph k7 = complete_graph(7);
  const SimpleGraph h8 = delta_to_y(k7, {{1, 2, 3}});
  const MinorResult a = has_minor(stars, k7);
  const MinorResult b = has_minor(tri_star, h8);
  const bool a_ok = a.verdict == MinorVerdict::Found && a.witness &&
                    verify_minor_witness(stars, k7, *a.witness);
  const bool b_ok = b.verdict == MinorVerdict::Found && b.witness &&
                    verify_minor_witness(tri_star, h8, *b.witness);
  o.detail << "K7 in two-star complement: " << (a_ok ? "witness verified" : "no")
           << ", H8 in triangle-star complement: " << (b_ok ? "witness verified" : "no");
  o.expect(a_ok, "K7 minor");
  o.expect(b_ok, "H8 minor");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) data_dir = argv[1];
  const std::vector<std::function<void(Outcome&)>> criteria{
      criterion1, criterion2, criterion3, criterion4,
      criterion5, criterion6, criterion7, criterion8};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [error: " << e.what() << ']';
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << o.detail.str() << "  (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s)\n" << std::flush;
  }
  return failures;
}
