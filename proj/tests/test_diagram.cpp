#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "knotgraph/errors.hpp"
#include "knotgraph/diagram.hpp"
#include "support/geometry.hpp"

using namespace knotgraph;
using test_support::Polyline;

namespace {

const std::string kData = KNOTGRAPH_DATA_DIR;

const KnotCode kTrefoil = parse_knot_code("1o+ 2u+ 3o+ 1u+ 2o+ 3u+");
const KnotCode kFigureEight = parse_knot_code("1o+ 2u+ 3o- 4u- 2o+ 1u+ 4o- 3u-");

KnotCode connected_sum(const KnotCode& a, const KnotCode& b) {
  int shift = 0;
  for (const Passage& p : a.entries) shift = std::max(shift, p.crossing);
  KnotCode out = a;
  for (Passage p : b.entries) {
    p.crossing += shift;
    out.entries.push_back(p);
  }
  return out;
}

// Closed polyline of a cycle in a random embedding.
Polyline cycle_polyline(const test_support::SpatialGraph& s, const Cycle& c) {
  Polyline out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex a = c[i];
    const Vertex b = c[(i + 1) % c.size()];
    Polyline piece;
    for (const auto& [e, line] : s.edges)
      if (e == Edge(a, b)) piece = line;
    if (a > b) std::reverse(piece.begin(), piece.end());
    out.insert(out.end(), piece.begin() + (out.empty() ? 0 : 1), piece.end());
  }
  return out;
}

Polyline d4_cycle(const std::array<Polyline, 8>& strands, int i) {
  Polyline out = strands[2 * i - 2];
  Polyline back = strands[2 * i - 1];
  std::reverse(back.begin(), back.end());
  out.insert(out.end(), back.begin() + 1, back.end());
  return out;
}

std::vector<KnotCode> random_knots(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<KnotCode> out;
  for (int t = 0; t < count; ++t) {
    out.push_back(test_support::knot_code(test_support::random_polygon(rng, 6 + t % 5),
                                          test_support::random_rotation(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("passage tokens") {
  CHECK(parse_passage("12u-") == Passage{12, false, -1});
  CHECK(parse_passage("3o+") == Passage{3, true, 1});
  CHECK(to_string(Passage{7, true, -1}) == "7o-");
  for (const char* bad : {"", "o+", "3x+", "3o", "3o*", "-3o+", "3o+x"}) {
    CHECK_THROWS_AS(parse_passage(bad), InvalidArgument);
  }
  CHECK(to_string(kTrefoil) == "1o+ 2u+ 3o+ 1u+ 2o+ 3u+");
}

TEST_CASE("diagram validation") {
  const SpatialDiagram planar = read_diagram_file(kData + "/k4_planar.dgm");
  CHECK(validate_diagram(planar));
  CHECK(planar.crossing_ids().empty());

  const SpatialDiagram trefoil = read_diagram_file(kData + "/trefoil_cycle.dgm");
  CHECK(validate_diagram(trefoil));
  CHECK(trefoil.crossing_ids() == std::vector<int>{1, 2, 3});

  SpatialDiagram once = planar;
  once.strands[Edge(1, 2)] = {{1, true, 1}};
  CHECK_FALSE(validate_diagram(once));

  SpatialDiagram two_overs = planar;
  two_overs.strands[Edge(1, 2)] = {{1, true, 1}};
  two_overs.strands[Edge(3, 4)] = {{1, true, 1}};
  CHECK_FALSE(validate_diagram(two_overs));

  SpatialDiagram sign_clash = planar;
  sign_clash.strands[Edge(1, 2)] = {{1, true, 1}};
  sign_clash.strands[Edge(3, 4)] = {{1, false, -1}};
  CHECK_FALSE(validate_diagram(sign_clash));

  SpatialDiagram off_graph = read_diagram_file(kData + "/hopf.dgm");
  off_graph.strands[Edge(1, 4)] = {};
  CHECK_FALSE(validate_diagram(off_graph));
}

TEST_CASE("diagram files round trip and report line numbers") {
  const SpatialDiagram d = read_diagram_file(kData + "/trefoil_cycle.dgm");
  std::ostringstream out;
  write_diagram(out, d);
  std::istringstream in(out.str());
  const SpatialDiagram back = read_diagram(in);
  CHECK(back.graph == d.graph);
  CHECK(back.strands == d.strands);
  CHECK(back.name == "trefoil");

  auto line_of = [](const std::string& text) {
    std::istringstream s(text);
    try {
      read_diagram(s);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("diagram x\nedge 1 2: 1o+\nedge 2 3: 1o+\n") == 3);
  CHECK(line_of("diagram x\n\nedge 2 1: 1o+\n") == 3);
  CHECK(line_of("edge 1 2:\n") == 1);
  CHECK(line_of("diagram x\nedge 1 2: 1q+\n") == 2);
  CHECK(line_of("diagram x 3\nedge 1 4:\n") == 2);
  CHECK_THROWS_AS(read_diagram_file(kData + "/missing.dgm"), Error);
}

TEST_CASE("lk2 on fixtures") {
  const SpatialDiagram hopf = read_diagram_file(kData + "/hopf.dgm");
  CHECK(lk2(hopf, {1, 2, 3}, {4, 5, 6}) == 1);
  CHECK(lk2(hopf, {4, 5, 6}, {3, 2, 1}) == 1);
  const SpatialDiagram split = flip_crossing(hopf, 2);
  CHECK(lk2(split, {1, 2, 3}, {4, 5, 6}) == 0);
  CHECK_THROWS_AS(lk2(hopf, {1, 2, 3}, {3, 4, 5}), InvalidArgument);
  CHECK_THROWS_AS(lk2(hopf, {1, 2, 4}, {3, 5, 6}), InvalidArgument);
}

TEST_CASE("lk2 is symmetric and matches the signed linking number") {
  std::mt19937_64 rng(101);
  const SimpleGraph k6 = complete_graph(6);
  const Cycle a{1, 2, 3};
  const Cycle b{4, 5, 6};
  int odd = 0;
  for (int t = 0; t < 100; ++t) {
    const auto s = test_support::random_embedding(k6, rng, 1);
    const auto rot = test_support::random_rotation(rng);
    const SpatialDiagram d = test_support::to_diagram(s, rot);
    REQUIRE(validate_diagram(d));
    const int x = lk2(d, a, b);
    CHECK(x == lk2(d, b, a));
    const int lk = test_support::linking_number(cycle_polyline(s, a), cycle_polyline(s, b), rot);
    CHECK(x == std::abs(lk) % 2);
    // A different projection of the same embedding.
    const SpatialDiagram other = test_support::to_diagram(s, test_support::random_rotation(rng));
    CHECK(lk2(other, a, b) == x);
    odd += x;
  }
  CHECK(odd > 5);  // the sample is not degenerate
}

TEST_CASE("cycle subdiagrams") {
  const SpatialDiagram planar = read_diagram_file(kData + "/k4_planar.dgm");
  CHECK(cycle_subdiagram(planar, {1, 2, 3, 4}).entries.empty());
  const SpatialDiagram hopf = read_diagram_file(kData + "/hopf.dgm");
  CHECK(cycle_subdiagram(hopf, {1, 2, 3}).entries.empty());
  const SpatialDiagram trefoil = read_diagram_file(kData + "/trefoil_cycle.dgm");
  CHECK(cycle_subdiagram(trefoil, {1, 2, 3}) == kTrefoil);
  CHECK_THROWS_AS(cycle_subdiagram(trefoil, {1, 2}), InvalidArgument);
  CHECK_THROWS_AS(cycle_subdiagram(planar, {1, 2, 2}), InvalidArgument);

  // Against a projection of the cycle by itself.
  std::mt19937_64 rng(202);
  const SimpleGraph k5 = complete_graph(5);
  for (int t = 0; t < 40; ++t) {
    const auto s = test_support::random_embedding(k5, rng, 1);
    const auto rot = test_support::random_rotation(rng);
    const SpatialDiagram d = test_support::to_diagram(s, rot);
    for (const Cycle& c : all_cycles(k5)) {
      const KnotCode direct = test_support::knot_code(cycle_polyline(s, c), rot);
      CHECK(test_support::relabeled(cycle_subdiagram(d, c)) == test_support::relabeled(direct));
    }
  }
}

TEST_CASE("a2 of small knots") {
  CHECK(conway_a2(KnotCode{}) == 0);
  CHECK(conway_a2(kTrefoil) == 1);
  CHECK(conway_a2(kFigureEight) == -1);
  for (const KnotCode& k : {kTrefoil, kFigureEight}) {
    CHECK(test_support::switching_a2(k) == conway_a2(k));
    CHECK(test_support::polyak_viro_a2(k) == conway_a2(k));
    CHECK(conway_a2(k, SkeinOrder::Ascending) == conway_a2(k));
  }
  CHECK(conway_polynomial({kTrefoil.entries}) == ConwayPolynomial{1, 0, 1});
  // Hopf link: z up to orientation.
  const LinkCode hopf{{{1, true, 1}, {2, false, 1}}, {{1, false, 1}, {2, true, 1}}};
  CHECK(conway_polynomial(hopf) == ConwayPolynomial{0, 1});
  CHECK(conway_polynomial(hopf, SkeinOrder::Ascending) == ConwayPolynomial{0, 1});
  CHECK_THROWS_AS(conway_a2(parse_knot_code("1o+ 2u+")), InvalidArgument);
}

TEST_CASE("a2 agrees with two independent evaluations on random knots") {
  int nonzero = 0;
  for (const KnotCode& k : random_knots(303, 400)) {
    REQUIRE(validate_code(k));
    const long long a2 = conway_a2(k);
    CHECK(conway_a2(k, SkeinOrder::Ascending) == a2);
    CHECK(test_support::polyak_viro_a2(k) == a2);
    CHECK(test_support::switching_a2(k) == a2);
    CHECK(arf(k) == ((a2 % 2) + 2) % 2);
    nonzero += a2 != 0;
  }
  CHECK(nonzero > 5);
}

TEST_CASE("skein budget") {
  CHECK_THROWS_AS(conway_a2(kFigureEight, SkeinOrder::Descending, 1), BudgetExceeded);
  const KnotInvariants inv = knot_invariants(kFigureEight, 1);
  CHECK_FALSE(inv.a2.has_value());
  CHECK(inv.status == UnknotStatus::Inconclusive);
}

TEST_CASE("arf and connected sums") {
  CHECK(arf(kTrefoil) == 1);
  CHECK(arf(kFigureEight) == 1);
  CHECK(arf(connected_sum(kTrefoil, kTrefoil)) == 0);
  CHECK(conway_a2(connected_sum(kTrefoil, kTrefoil)) == 2);
  const auto knots = random_knots(404, 60);
  for (std::size_t i = 0; i + 1 < knots.size(); i += 2) {
    const KnotCode sum = connected_sum(knots[i], knots[i + 1]);
    CHECK(conway_a2(sum) == conway_a2(knots[i]) + conway_a2(knots[i + 1]));
  }
}

TEST_CASE("flipping crossings") {
  const SpatialDiagram trefoil = read_diagram_file(kData + "/trefoil_cycle.dgm");
  for (int id : trefoil.crossing_ids()) {
    const SpatialDiagram f = flip_crossing(trefoil, id);
    CHECK(validate_diagram(f));
    CHECK(conway_a2(cycle_subdiagram(f, {1, 2, 3})) == 0);
    const SpatialDiagram back = flip_crossing(f, id);
    CHECK(back.strands == trefoil.strands);
  }
  CHECK_THROWS_AS(flip_crossing(trefoil, 99), InvalidArgument);
}

TEST_CASE("a2 is invariant under R1 and R2 variants and re-projection") {
  std::mt19937_64 rng(505);
  for (int t = 0; t < 80; ++t) {
    const Polyline poly = test_support::random_polygon(rng, 7 + t % 3);
    const KnotCode k = test_support::knot_code(poly, test_support::random_rotation(rng));
    const long long a2 = conway_a2(k);
    CHECK(conway_a2(test_support::knot_code(poly, test_support::random_rotation(rng))) == a2);
    if (k.entries.empty()) continue;
    std::uniform_int_distribution<std::size_t> pos(0, k.entries.size() - 1);
    for (bool over_first : {true, false}) {
      for (int sign : {1, -1}) {
        const KnotCode kinked = test_support::add_kink(k, pos(rng), over_first, sign);
        REQUIRE(validate_code(kinked));
        CHECK(conway_a2(kinked) == a2);
        CHECK(reduce_r1(kinked).has_value());
      }
    }
    const int c = k.entries[pos(rng)].crossing;
    for (bool pusher_over : {true, false}) {
      for (bool h : {true, false}) {
        const KnotCode finger = test_support::add_finger(k, c, pusher_over, h);
        REQUIRE(validate_code(finger));
        CHECK(conway_a2(finger) == a2);
        CHECK(test_support::polyak_viro_a2(finger) == a2);
        CHECK(reduce_r2(finger).has_value());
      }
    }
  }
}

TEST_CASE("R1 and R2 reductions") {
  CHECK(reduce_r1(parse_knot_code("1o+ 1u+")) == KnotCode{});
  CHECK(reduce_r1(parse_knot_code("1o+ 2u- 2o- 3u+ 1u+ 3o+")) ==
        parse_knot_code("1o+ 3u+ 1u+ 3o+"));
  CHECK_FALSE(reduce_r1(kTrefoil).has_value());
  CHECK(reduce_r2(parse_knot_code("1o+ 2o- 1u+ 2u-")) == KnotCode{});
  // Same over flag but equal signs: not a bigon.
  CHECK_FALSE(reduce_r2(parse_knot_code("1o+ 2o+ 1u+ 2u+")).has_value());
  CHECK_FALSE(reduce_r2(kTrefoil).has_value());
  CHECK_FALSE(reduce_r2(kFigureEight).has_value());
}

TEST_CASE("R3 moves match geometric slides") {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 150; ++t) {
    const auto scene = test_support::r3_scene(rng);
    REQUIRE(validate_code(scene.before));
    REQUIRE(scene.before.entries.size() == scene.after.entries.size());
    const KnotCode target = test_support::relabeled(scene.after);
    const auto moves = r3_moves(scene.before);
    const auto hit = std::find_if(moves.begin(), moves.end(), [&](const KnotCode& m) {
      return test_support::relabeled(m) == target;
    });
    REQUIRE(hit != moves.end());
    CHECK(conway_a2(scene.after) == conway_a2(scene.before));

    // Negating the sign of one triangle crossing makes the triangle
    // unrealizable, so the same rearrangement must disappear.
    std::vector<std::size_t> changed;
    for (std::size_t i = 0; i < hit->entries.size(); ++i)
      if (hit->entries[i] != scene.before.entries[i]) changed.push_back(i);
    REQUIRE(changed.size() == 6);
    const int victim = scene.before.entries[changed[0]].crossing;
    auto negate = [&](KnotCode k) {
      for (Passage& p : k.entries)
        if (p.crossing == victim) p.sign = -p.sign;
      return k;
    };
    const auto bad_moves = r3_moves(negate(scene.before));
    CHECK(std::find(bad_moves.begin(), bad_moves.end(), negate(*hit)) == bad_moves.end());
  }
}

TEST_CASE("unknot check never lies") {
  CHECK(unknot_check(KnotCode{}) == UnknotStatus::Unknot);
  CHECK(unknot_check(kTrefoil) == UnknotStatus::Knotted);
  CHECK(unknot_check(kFigureEight) == UnknotStatus::Knotted);
  // Knotted with a2 = 0: can only be Inconclusive.
  const KnotCode mixed = connected_sum(kTrefoil, kFigureEight);
  CHECK(conway_a2(mixed) == 0);
  CHECK(unknot_check(mixed) == UnknotStatus::Inconclusive);

  std::mt19937_64 rng(707);
  int via_r3 = 0;
  for (const KnotCode& k : random_knots(808, 300)) {
    const UnknotStatus s = unknot_check(k);
    if (conway_a2(k) != 0) {
      CHECK(s == UnknotStatus::Knotted);
      continue;
    }
    CHECK(s != UnknotStatus::Knotted);
    // Hide the unknot behind extra R1 and R2 moves.
    KnotCode noisy = test_support::add_kink(k, 0, true, -1);
    noisy = test_support::add_finger(noisy, noisy.entries[0].crossing, false, true);
    CHECK(unknot_check(noisy) != UnknotStatus::Knotted);
    if (s == UnknotStatus::Unknot && unknot_check(k, 0) == UnknotStatus::Inconclusive) ++via_r3;
  }
  CHECK(via_r3 > 0);  // some of these needed the R3 search
  CHECK(unknot_check(connected_sum(kTrefoil, test_support::add_kink(kTrefoil, 2, false, 1))) ==
        UnknotStatus::Knotted);
}

TEST_CASE("cycle enumeration") {
  CHECK(all_cycles(complete_graph(4)).size() == 7);
  CHECK(all_cycles(complete_graph(5)).size() == 37);
  CHECK(all_cycles(complete_graph(6)).size() == 197);
  const std::array<int, 2> parts{3, 3};
  CHECK(all_cycles(complete_multipartite(parts)).size() == 15);
  CHECK(all_cycles(cycle_graph(9)).size() == 1);
  CHECK_THROWS_AS(all_cycles(complete_graph(6), 50), BudgetExceeded);
  for (const Cycle& c : all_cycles(complete_graph(5))) {
    CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    CHECK(c[1] < c.back());
  }
}

TEST_CASE("knotted cycle census") {
  const Census planar = knotted_cycle_census(read_diagram_file(kData + "/k4_planar.dgm"));
  CHECK(planar.entries.size() == 7);
  CHECK(planar.complete);
  for (const auto& e : planar.entries) CHECK(e.invariants.status == UnknotStatus::Unknot);

  const Census trefoil = knotted_cycle_census(read_diagram_file(kData + "/trefoil_cycle.dgm"));
  REQUIRE(trefoil.entries.size() == 1);
  CHECK(trefoil.knotted() == 1);
  CHECK(trefoil.entries[0].invariants.a2 == 1);

  std::mt19937_64 rng(909);
  const SimpleGraph k6 = complete_graph(6);
  std::size_t knotted = 0;
  for (int t = 0; t < 10; ++t) {
    const auto s = test_support::random_embedding(k6, rng, 1);
    const auto rot = test_support::random_rotation(rng);
    const Census census = knotted_cycle_census(test_support::to_diagram(s, rot), 1'000'000, 1 + t % 4);
    REQUIRE(census.entries.size() == 197);
    for (const auto& e : census.entries) {
      const KnotCode direct = test_support::knot_code(cycle_polyline(s, e.cycle), rot);
      REQUIRE(e.invariants.a2.has_value());
      CHECK(*e.invariants.a2 == test_support::polyak_viro_a2(direct));
      CHECK(e.invariants.arf == ((*e.invariants.a2 % 2) + 2) % 2);
      if (*e.invariants.a2 != 0) CHECK(e.invariants.status == UnknotStatus::Knotted);
      if (*e.invariants.a2 == 0) CHECK(e.invariants.status != UnknotStatus::Knotted);
    }
    knotted += census.knotted();
  }
  const Census partial = knotted_cycle_census(read_diagram_file(kData + "/k4_planar.dgm"), 3);
  CHECK_FALSE(partial.complete);
}

TEST_CASE("D4 diagrams") {
  D4Diagram empty{"empty", {}};
  CHECK(validate_d4(empty));
  CHECK(d4_sigma(empty) == 0);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) CHECK(d4_lk2(empty, i, j) == 0);
  CHECK_THROWS_AS(d4_lk2(empty, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(d4_lk2(empty, 0, 2), InvalidArgument);

  std::mt19937_64 rng(1001);
  const auto strands = test_support::random_d4_strands(rng, 2);
  const D4Diagram d = test_support::to_d4(strands, test_support::identity_rotation());
  std::ostringstream out;
  write_d4(out, d);
  std::istringstream in(out.str());
  const D4Diagram back = read_d4(in);
  CHECK(back.strands == d.strands);
  std::istringstream broken("d4 x\ne9: 1o+\n");
  CHECK_THROWS_AS(read_d4(broken), ParseError);
}

TEST_CASE("D4 Hamiltonian cycles and linking match geometry") {
  std::mt19937_64 rng(1102);
  for (int t = 0; t < 30; ++t) {
    const auto strands = test_support::random_d4_strands(rng, 2);
    const auto rot = test_support::random_rotation(rng);
    const D4Diagram d = test_support::to_d4(strands, rot);
    REQUIRE(validate_d4(d));
    for (unsigned choice = 0; choice < 16; ++choice) {
      Polyline cycle;
      for (int i = 0; i < 4; ++i) {
        const Polyline& s = strands[2 * i + ((choice >> i) & 1u)];
        cycle.insert(cycle.end(), s.begin() + (cycle.empty() ? 0 : 1), s.end());
      }
      CHECK(test_support::relabeled(d4_hamiltonian(d, choice)) ==
            test_support::relabeled(test_support::knot_code(cycle, rot)));
    }
    for (auto [i, j] : {std::pair{1, 3}, std::pair{2, 4}}) {
      const int lk = test_support::linking_number(d4_cycle(strands, i), d4_cycle(strands, j), rot);
      CHECK(d4_lk2(d, i, j) == std::abs(lk) % 2);
      CHECK(d4_lk2(d, j, i) == d4_lk2(d, i, j));
    }
  }
}

TEST_CASE("sigma is nonzero exactly when C1,C3 and C2,C4 are both odd-linked") {
  std::mt19937_64 rng(1203);
  int both = 0;
  for (int t = 0; t < 240; ++t) {
    const auto strands = test_support::random_d4_strands(rng, 2 + t % 2);
    const D4Diagram d = test_support::to_d4(strands, test_support::random_rotation(rng));
    const int expected = d4_lk2(d, 1, 3) & d4_lk2(d, 2, 4);
    CHECK(d4_sigma(d) == expected);
    both += expected;
  }
  CHECK(both > 5);
}
