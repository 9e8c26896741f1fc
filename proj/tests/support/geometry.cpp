#include "support/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace test_support {

using knotgraph::KnotCode;
using knotgraph::Passage;

Mat3 identity_rotation() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 random_rotation(std::mt19937_64& rng) {
  // Random unit quaternion.
  std::normal_distribution<double> g;
  double q[4];
  double norm = 0;
  for (double& x : q) {
    x = g(rng);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  for (double& x : q) x /= norm;
  const auto [w, x, y, z] = std::tuple{q[0], q[1], q[2], q[3]};
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

namespace {

P3 apply(const Mat3& m, const P3& p) {
  P3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += m[i][j] * p[j];
  return r;
}

struct Hit {
  double at;  // segment index + parameter
  Passage passage;
};

}  // namespace

std::vector<std::vector<Passage>> project(const std::vector<Polyline>& strands, const Mat3& rot) {
  std::vector<Polyline> s;
  for (const auto& line : strands) {
    Polyline r;
    for (const auto& p : line) r.push_back(apply(rot, p));
    s.push_back(std::move(r));
  }
  std::vector<std::vector<Hit>> hits(s.size());
  int next_id = 1;
  constexpr double eps = 1e-9;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a; b < s.size(); ++b) {
      const std::size_t na = s[a].size() - 1;
      const std::size_t nb = s[b].size() - 1;
      const bool closed = s[a].front() == s[a].back();
      for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = (a == b ? i + 2 : 0); j < nb; ++j) {
          if (a == b && closed && i == 0 && j == na - 1) continue;
          const P3& p0 = s[a][i];
          const P3& p1 = s[a][i + 1];
          const P3& q0 = s[b][j];
          const P3& q1 = s[b][j + 1];
          const double dx = p1[0] - p0[0], dy = p1[1] - p0[1];
          const double ex = q1[0] - q0[0], ey = q1[1] - q0[1];
          const double den = dx * ey - dy * ex;
          if (std::abs(den) < 1e-14) continue;
          const double fx = q0[0] - p0[0], fy = q0[1] - p0[1];
          const double t = (fx * ey - fy * ex) / den;
          const double u = (fx * dy - fy * dx) / den;
          if (t <= eps || t >= 1 - eps || u <= eps || u >= 1 - eps) continue;
          const double za = p0[2] + t * (p1[2] - p0[2]);
          const double zb = q0[2] + u * (q1[2] - q0[2]);
          const bool a_over = za > zb;
          // +1 when the under strand runs from left to right of the over strand.
          const double c = a_over ? den : -den;
          const int sign = c < 0 ? 1 : -1;
          const int id = next_id++;
          hits[a].push_back({static_cast<double>(i) + t, {id, a_over, sign}});
          hits[b].push_back({static_cast<double>(j) + u, {id, !a_over, sign}});
        }
      }
    }
  }
  std::vector<std::vector<Passage>> out;
  for (auto& h : hits) {
    std::sort(h.begin(), h.end(), [](const Hit& x, const Hit& y) { return x.at < y.at; });
    std::vector<Passage> ps;
    for (const Hit& x : h) ps.push_back(x.passage);
    out.push_back(std::move(ps));
  }
  return out;
}

P3 random_point(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

Polyline random_polygon(std::mt19937_64& rng, int corners) {
  Polyline p;
  for (int i = 0; i < corners; ++i) p.push_back(random_point(rng));
  p.push_back(p.front());
  return p;
}

KnotCode knot_code(const Polyline& closed, const Mat3& rot) {
  return KnotCode{project({closed}, rot)[0]};
}

SpatialGraph random_embedding(const knotgraph::SimpleGraph& g, std::mt19937_64& rng, int bends) {
  SpatialGraph s{g, {}, {}};
  for (int v = 1; v <= g.order(); ++v) s.position.push_back(random_point(rng));
  for (const auto& e : g.edges()) {
    Polyline line{s.position[e.u - 1]};
    for (int k = 0; k < bends; ++k) line.push_back(random_point(rng));
    line.push_back(s.position[e.v - 1]);
    s.edges.emplace_back(e, std::move(line));
  }
  return s;
}

knotgraph::SpatialDiagram to_diagram(const SpatialGraph& s, const Mat3& rot) {
  std::vector<Polyline> lines;
  for (const auto& [e, line] : s.edges) lines.push_back(line);
  const auto passages = project(lines, rot);
  knotgraph::SpatialDiagram d{"random", s.graph, {}};
  for (std::size_t i = 0; i < s.edges.size(); ++i) d.strands[s.edges[i].first] = passages[i];
  return d;
}

std::array<Polyline, 8> random_d4_strands(std::mt19937_64& rng, int bends) {
  std::array<P3, 4> w;
  for (auto& p : w) p = random_point(rng);
  std::array<Polyline, 8> out;
  for (int k = 0; k < 8; ++k) {
    const int i = k / 2;
    Polyline line{w[i]};
    for (int b = 0; b < bends; ++b) line.push_back(random_point(rng));
    line.push_back(w[(i + 1) % 4]);
    out[k] = std::move(line);
  }
  return out;
}

knotgraph::D4Diagram to_d4(const std::array<Polyline, 8>& strands, const Mat3& rot) {
  const auto passages = project({strands.begin(), strands.end()}, rot);
  knotgraph::D4Diagram d{"random", {}};
  for (int k = 0; k < 8; ++k) d.strands[k] = passages[k];
  return d;
}

int linking_number(const Polyline& a, const Polyline& b, const Mat3& rot) {
  const auto p = project({a, b}, rot);
  std::map<int, int> in_b;
  for (const Passage& x : p[1]) in_b[x.crossing] = 1;
  int sum = 0;
  for (const Passage& x : p[0])
    if (in_b.contains(x.crossing)) sum += x.sign;
  return sum / 2;
}

KnotCode add_kink(const KnotCode& k, std::size_t at, bool over_first, int sign) {
  int fresh = 1;
  for (const Passage& p : k.entries) fresh = std::max(fresh, p.crossing + 1);
  KnotCode out = k;
  const auto pos = out.entries.begin() +
                   static_cast<std::ptrdiff_t>(std::min(at + 1, out.entries.size()));
  out.entries.insert(pos, {{fresh, over_first, sign}, {fresh, !over_first, sign}});
  return out;
}

KnotCode add_finger(const KnotCode& k, int c, bool pusher_over, bool h) {
  int fresh = 1;
  std::size_t ip = 0, iq = 0;
  int sc = 0;
  for (std::size_t i = 0; i < k.entries.size(); ++i) {
    const Passage& p = k.entries[i];
    fresh = std::max(fresh, p.crossing + 1);
    if (p.crossing != c) continue;
    sc = p.sign;
    (p.over == pusher_over ? ip : iq) = i;
  }
  const int d = fresh, e = fresh + 1;
  const int tau = pusher_over ? -sc : sc;
  const int sd = tau * (h ? 1 : -1);
  KnotCode out = k;
  auto insert_after = [&](std::size_t i, bool over) {
    const auto pos = out.entries.begin() + static_cast<std::ptrdiff_t>(i + 1);
    out.entries.insert(pos, {{d, over, sd}, {e, over, -sd}});
  };
  if (ip > iq) {
    insert_after(ip, h);
    insert_after(iq, !h);
  } else {
    insert_after(iq, !h);
    insert_after(ip, h);
  }
  return out;
}

long long polyak_viro_a2(const KnotCode& k) {
  std::map<int, std::size_t> over_at, under_at;
  std::map<int, int> sign;
  for (std::size_t i = 0; i < k.entries.size(); ++i) {
    const Passage& p = k.entries[i];
    (p.over ? over_at : under_at)[p.crossing] = i;
    sign[p.crossing] = p.sign;
  }
  long long total = 0;
  for (const auto& [a, ua] : under_at) {
    for (const auto& [b, ub] : under_at) {
      if (a == b) continue;
      const std::size_t ob = over_at[b];
      const std::size_t oa = over_at[a];
      if (ua < ob && ob < oa && oa < ub) total += sign[a] * sign[b];
    }
  }
  return total;
}

long long switching_a2(const KnotCode& k) {
  KnotCode cur = k;
  long long total = 0;
  while (true) {
    std::map<int, bool> seen;
    std::size_t bad = cur.entries.size();
    for (std::size_t i = 0; i < cur.entries.size(); ++i) {
      const Passage& p = cur.entries[i];
      if (seen.contains(p.crossing)) continue;
      seen[p.crossing] = true;
      if (!p.over) {
        bad = i;
        break;
      }
    }
    if (bad == cur.entries.size()) return total;
    const int id = cur.entries[bad].crossing;
    std::size_t second = bad + 1;
    while (cur.entries[second].crossing != id) ++second;
    // Smoothing splits the code into the part strictly between the two
    // occurrences and the rest.
    std::map<int, int> side;
    for (std::size_t i = 0; i < cur.entries.size(); ++i) {
      if (i == bad || i == second) continue;
      side[cur.entries[i].crossing] += (i > bad && i < second) ? 1 : 2;
    }
    int signed_count = 0;
    for (const Passage& p : cur.entries)
      if (p.crossing != id && side[p.crossing] == 3 && p.over) signed_count += p.sign;
    total += static_cast<long long>(cur.entries[bad].sign) * (signed_count / 2);
    for (Passage& p : cur.entries) {
      if (p.crossing != id) continue;
      p.over = !p.over;
      p.sign = -p.sign;
    }
  }
}

R3Scene r3_scene(std::mt19937_64& rng) {
  constexpr double pi = 3.14159265358979323846;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Directions pairwise at least 30 degrees apart.
  std::array<double, 3> theta{};
  while (true) {
    for (double& t : theta) t = unit(rng) * pi;
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double d = std::abs(theta[i] - theta[j]);
        if (std::min(d, pi - d) < pi / 6) ok = false;
      }
    if (ok) break;
  }
  std::array<double, 3> height{1, 2, 3};
  std::shuffle(height.begin(), height.end(), rng);
  auto dir = [&](int i) { return std::array<double, 2>{std::cos(theta[i]), std::sin(theta[i])}; };
  const auto u3 = dir(2);
  const std::array<double, 2> n3{-u3[1], u3[0]};
  constexpr double offset = 0.3;
  // Segment i runs from start[i] to end[i]; strand 2 is the one that moves.
  std::array<P3, 3> start{}, end{};
  for (int i = 0; i < 3; ++i) {
    const auto u = dir(i);
    const double cx = i == 2 ? offset * n3[0] : 0.0;
    const double cy = i == 2 ? offset * n3[1] : 0.0;
    const double s = unit(rng) < 0.5 ? 3.0 : -3.0;
    start[i] = {cx - s * u[0], cy - s * u[1], height[i]};
    end[i] = {cx + s * u[0], cy + s * u[1], height[i]};
  }
  std::array<int, 3> order{0, 1, 2};
  std::shuffle(order.begin(), order.end(), rng);

  auto build = [&](bool moved) {
    Polyline knot;
    for (int k = 0; k < 3; ++k) {
      const int i = order[k];
      knot.push_back(start[i]);
      if (i == 2) {
        const double side = moved ? -offset : offset;
        knot.push_back({side * n3[0], side * n3[1], height[2]});
      }
      knot.push_back(end[i]);
      // Connector out to radius R, around the circle, back in.
      const P3& from = end[i];
      const P3& to = start[order[(k + 1) % 3]];
      const double radius = 8.0 + 3.0 * k;
      const double z = 0.5 + k;
      const double a0 = std::atan2(from[1], from[0]);
      double a1 = std::atan2(to[1], to[0]);
      if (a1 <= a0) a1 += 2 * pi;
      knot.push_back({radius * std::cos(a0), radius * std::sin(a0), z});
      const int steps = 24;
      for (int t = 1; t < steps; ++t) {
        const double a = a0 + (a1 - a0) * t / steps;
        knot.push_back({radius * std::cos(a), radius * std::sin(a), z});
      }
      knot.push_back({radius * std::cos(a1), radius * std::sin(a1), z});
    }
    knot.push_back(knot.front());
    return knot_code(knot, identity_rotation());
  };
  return {build(false), build(true)};
}

KnotCode relabeled(const KnotCode& k) {
  std::map<int, int> ids;
  KnotCode out;
  for (Passage p : k.entries) {
    p.crossing = ids.try_emplace(p.crossing, static_cast<int>(ids.size()) + 1).first->second;
    out.entries.push_back(p);
  }
  return out;
}

}  // namespace test_support
