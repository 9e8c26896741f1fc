// Skein evaluation of the Conway polynomial and Reidemeister simplification
// on Gauss codes. Moves are the Gauss-diagram forms of R1, R2 and R3, which
// preserve the knot type of a classical diagram.

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "knotgraph/diagram.hpp"
#include "knotgraph/errors.hpp"

namespace knotgraph {

namespace {

void trim(ConwayPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Crossing ids renumbered by first appearance, then serialized.
std::string link_key(const LinkCode& link) {
  std::unordered_map<int, int> ids;
  std::string key;
  for (const auto& comp : link) {
    for (const Passage& p : comp) {
      auto [it, fresh] = ids.try_emplace(p.crossing, static_cast<int>(ids.size()));
      key += std::to_string(it->second);
      key += p.over ? 'o' : 'u';
      key += p.sign > 0 ? '+' : '-';
    }
    key += '|';
  }
  return key;
}

void erase_ids(LinkCode& link, int a, int b) {
  for (auto& comp : link) {
    std::erase_if(comp, [&](const Passage& p) { return p.crossing == a || p.crossing == b; });
  }
}

// One R1 or R2 reduction, if any applies.
bool reduce_once(LinkCode& link) {
  auto next = [&](std::size_t c, std::size_t i) { return (i + 1) % link[c].size(); };
  for (std::size_t c = 0; c < link.size(); ++c) {
    const auto& comp = link[c];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Passage& x = comp[i];
      const Passage& y = comp[next(c, i)];
      if (x.crossing == y.crossing && comp.size() >= 2) {
        erase_ids(link, x.crossing, x.crossing);
        return true;
      }
      if (comp.size() < 2 || x.crossing == y.crossing || x.over != y.over || x.sign != -y.sign)
        continue;
      auto other = [&](int id, std::size_t cc, std::size_t ii) {
        for (std::size_t k = 0; k < link.size(); ++k)
          for (std::size_t j = 0; j < link[k].size(); ++j)
            if (link[k][j].crossing == id && (k != cc || j != ii)) return std::pair{k, j};
        return std::pair{cc, ii};
      };
      const auto [cx, ix] = other(x.crossing, c, i);
      const auto [cy, iy] = other(y.crossing, c, next(c, i));
      if (cx == cy && link[cx].size() >= 2 && (next(cx, ix) == iy || next(cx, iy) == ix)) {
        erase_ids(link, x.crossing, y.crossing);
        return true;
      }
    }
  }
  return false;
}

bool reduce_link(LinkCode& link) {
  bool changed = false;
  while (reduce_once(link)) changed = true;
  return changed;
}

// Components fall into two groups with no crossing between them.
bool is_split(const LinkCode& link) {
  if (link.size() < 2) return false;
  std::unordered_map<int, std::size_t> first;
  std::vector<std::size_t> parent(link.size());
  for (std::size_t c = 0; c < parent.size(); ++c) parent[c] = c;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < link.size(); ++c) {
    for (const Passage& p : link[c]) {
      auto [it, fresh] = first.try_emplace(p.crossing, c);
      if (!fresh) parent[find(it->second)] = find(c);
    }
  }
  for (std::size_t c = 1; c < link.size(); ++c)
    if (find(c) != find(0)) return true;
  return false;
}

class Skein {
 public:
  Skein(SkeinOrder order, std::size_t budget) : order_(order), budget_(budget) {}

  // Coefficients up to z^degree only.
  ConwayPolynomial eval(const LinkCode& link, std::size_t degree) {
    // The polynomial of a k-component link is divisible by z^(k-1).
    if (link.size() > degree + 1) return {};
    const std::string key = std::to_string(degree) + '#' + link_key(link);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > budget_) throw BudgetExceeded("skein budget exhausted");
    ConwayPolynomial result = compute(link, degree);
    memo_.emplace(key, result);
    return result;
  }

 private:
  ConwayPolynomial compute(const LinkCode& link, std::size_t degree) {
    if (LinkCode reduced = link; reduce_link(reduced)) return eval(reduced, degree);
    if (is_split(link)) return {};
    const auto target = pick(link);
    if (!target) return link.size() == 1 ? ConwayPolynomial{1} : ConwayPolynomial{};
    const int id = *target;
    int sign = 0;
    LinkCode switched = link;
    for (auto& comp : switched) {
      for (Passage& p : comp) {
        if (p.crossing != id) continue;
        sign = p.sign;
        p.over = !p.over;
        p.sign = -p.sign;
      }
    }
    ConwayPolynomial result = eval(switched, degree);
    if (degree == 0) return result;
    const ConwayPolynomial smooth = eval(smoothing(link, id), degree - 1);
    if (result.size() < smooth.size() + 1) result.resize(smooth.size() + 1, 0);
    for (std::size_t i = 0; i < smooth.size(); ++i) result[i + 1] += sign * smooth[i];
    trim(result);
    return result;
  }

  // First crossing met on its "wrong" level: from below when descending,
  // from above when ascending.
  std::optional<int> pick(const LinkCode& link) const {
    std::unordered_set<int> seen;
    const bool descending = order_ == SkeinOrder::Descending;
    const std::size_t k = link.size();
    for (std::size_t step = 0; step < k; ++step) {
      const auto& comp = link[descending ? step : k - 1 - step];
      for (const Passage& p : comp) {
        if (!seen.insert(p.crossing).second) continue;
        if (p.over != descending) return p.crossing;
      }
    }
    return std::nullopt;
  }

  static LinkCode smoothing(const LinkCode& link, int id) {
    std::vector<std::pair<std::size_t, std::size_t>> at;
    for (std::size_t c = 0; c < link.size(); ++c)
      for (std::size_t i = 0; i < link[c].size(); ++i)
        if (link[c][i].crossing == id) at.emplace_back(c, i);
    // The arc leaving one occurrence continues into the arc leaving the other.
    auto after = [&](std::size_t c, std::size_t i) {
      std::vector<Passage> r;
      const auto& comp = link[c];
      for (std::size_t k = 1; k < comp.size(); ++k) r.push_back(comp[(i + k) % comp.size()]);
      return r;
    };
    LinkCode out;
    const auto [c1, i1] = at[0];
    const auto [c2, i2] = at[1];
    for (std::size_t c = 0; c < link.size(); ++c) {
      if (c == c1 && c1 == c2) {
        const auto& comp = link[c];
        std::vector<Passage> a(comp.begin() + i1 + 1, comp.begin() + i2);
        std::vector<Passage> b(comp.begin() + i2 + 1, comp.end());
        b.insert(b.end(), comp.begin(), comp.begin() + i1);
        out.push_back(std::move(a));
        out.push_back(std::move(b));
      } else if (c == c1) {
        auto merged = after(c1, i1);
        auto tail = after(c2, i2);
        merged.insert(merged.end(), tail.begin(), tail.end());
        out.push_back(std::move(merged));
      } else if (c != c2) {
        out.push_back(link[c]);
      }
    }
    return out;
  }

  SkeinOrder order_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_map<std::string, ConwayPolynomial> memo_;
};

// ------------------------------------------------------------- Reidemeister

std::size_t other_occurrence(const KnotCode& k, std::size_t i) {
  for (std::size_t j = 0; j < k.entries.size(); ++j)
    if (j != i && k.entries[j].crossing == k.entries[i].crossing) return j;
  return i;
}

KnotCode without(const KnotCode& k, const std::set<int>& ids) {
  KnotCode out;
  for (const Passage& p : k.entries)
    if (!ids.contains(p.crossing)) out.entries.push_back(p);
  return out;
}

// Minimal rendering over all rotations, ids renumbered per rotation.
std::string canonical_code_key(const KnotCode& k) {
  const std::size_t n = k.entries.size();
  std::string best;
  for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
    LinkCode rotated(1);
    for (std::size_t i = 0; i < n; ++i) rotated[0].push_back(k.entries[(r + i) % n]);
    std::string key = link_key(rotated);
    if (r == 0 || key < best) best = std::move(key);
  }
  return best;
}

KnotCode simplify(KnotCode k) {
  while (true) {
    if (auto r = reduce_r1(k)) {
      k = std::move(*r);
      continue;
    }
    if (auto r = reduce_r2(k)) {
      k = std::move(*r);
      continue;
    }
    return k;
  }
}

ConwayPolynomial conway_up_to(const LinkCode& link, SkeinOrder order, std::size_t budget,
                              std::size_t degree) {
  KnotCode flat;
  for (const auto& comp : link) flat.entries.insert(flat.entries.end(), comp.begin(), comp.end());
  if (auto v = validate_code(flat); !v) throw InvalidArgument("invalid link code: " + v.message);
  return Skein(order, budget).eval(link, degree);
}

}  // namespace

ConwayPolynomial conway_polynomial(const LinkCode& link, SkeinOrder order, std::size_t budget) {
  return conway_up_to(link, order, budget, std::numeric_limits<std::size_t>::max() - 1);
}

long long conway_a2(const KnotCode& k, SkeinOrder order, std::size_t budget) {
  const ConwayPolynomial p = conway_up_to({k.entries}, order, budget, 2);
  return p.size() > 2 ? p[2] : 0;
}

int arf(const KnotCode& k, std::size_t budget) {
  const long long a2 = conway_a2(k, SkeinOrder::Descending, budget);
  return static_cast<int>(((a2 % 2) + 2) % 2);
}

std::optional<KnotCode> reduce_r1(const KnotCode& k) {
  const std::size_t n = k.entries.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (n >= 2 && k.entries[i].crossing == k.entries[(i + 1) % n].crossing) {
      return without(k, {k.entries[i].crossing});
    }
  }
  return std::nullopt;
}

std::optional<KnotCode> reduce_r2(const KnotCode& k) {
  const std::size_t n = k.entries.size();
  if (n < 4) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    const Passage& x = k.entries[i];
    const Passage& y = k.entries[(i + 1) % n];
    if (x.crossing == y.crossing || x.over != y.over || x.sign != -y.sign) continue;
    const std::size_t px = other_occurrence(k, i);
    const std::size_t py = other_occurrence(k, (i + 1) % n);
    if ((px + 1) % n == py || (py + 1) % n == px) return without(k, {x.crossing, y.crossing});
  }
  return std::nullopt;
}

std::vector<KnotCode> r3_moves(const KnotCode& k) {
  const std::size_t n = k.entries.size();
  std::vector<KnotCode> out;
  if (n < 6) return out;
  struct Arc {
    std::size_t pos;  // entries pos and pos+1
    int first;
    int second;
  };
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    const int a = k.entries[i].crossing;
    const int b = k.entries[(i + 1) % n].crossing;
    if (a != b) arcs.push_back({i, a, b});
  }
  auto at = [&](std::size_t pos, std::size_t off) -> const Passage& {
    return k.entries[(pos + off) % n];
  };
  auto overs = [&](const Arc& a) { return (at(a.pos, 0).over ? 1 : 0) + (at(a.pos, 1).over ? 1 : 0); };
  auto shares = [](const Arc& a, int c) { return a.first == c || a.second == c; };
  auto common = [&](const Arc& a, const Arc& b) -> int {
    if (shares(b, a.first)) return a.first;
    if (shares(b, a.second)) return a.second;
    return 0;
  };
  std::set<std::string> produced;
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      for (std::size_t z = y + 1; z < arcs.size(); ++z) {
        std::set<std::size_t> pos;
        for (const Arc* a : {&arcs[x], &arcs[y], &arcs[z]}) {
          pos.insert(a->pos);
          pos.insert((a->pos + 1) % n);
        }
        if (pos.size() != 6) continue;
        const int cxy = common(arcs[x], arcs[y]);
        const int cxz = common(arcs[x], arcs[z]);
        const int cyz = common(arcs[y], arcs[z]);
        if (!cxy || !cxz || !cyz || cxy == cxz || cxy == cyz || cxz == cyz) continue;
        // Roles: top has both overs, bottom none, middle one.
        const Arc* top = nullptr;
        const Arc* mid = nullptr;
        const Arc* bot = nullptr;
        for (const Arc* a : {&arcs[x], &arcs[y], &arcs[z]}) {
          const int o = overs(*a);
          (o == 2 ? top : o == 1 ? mid : bot) = a;
        }
        if (!top || !mid || !bot) continue;
        const int tm = common(*top, *mid);
        const int tb = common(*top, *bot);
        const int mb = common(*mid, *bot);
        auto sign_of = [&](int c) {
          for (const Passage& p : k.entries)
            if (p.crossing == c) return p.sign;
          return 0;
        };
        const int s_tm = sign_of(tm);
        const int s_tb = sign_of(tb);
        const int s_mb = sign_of(mb);
        const int t_t = top->first == tm ? 1 : -1;
        const int t_m = mid->first == tm ? 1 : -1;
        const int t_b = bot->first == tb ? 1 : -1;
        // A planar triangle with these orders exists iff the signs match
        // one of its two orientations o.
        const int o = -(s_tm * s_tb * s_mb);
        if (s_tm != -o * t_t * t_m || s_tb != -o * t_t * t_b || s_mb != -o * t_m * t_b) continue;
        KnotCode moved = k;
        for (const Arc* a : {top, mid, bot}) {
          std::swap(moved.entries[a->pos], moved.entries[(a->pos + 1) % n]);
        }
        if (produced.insert(to_string(moved)).second) out.push_back(std::move(moved));
      }
    }
  }
  return out;
}

UnknotStatus unknot_check(const KnotCode& k, std::size_t budget) {
  if (auto v = validate_code(k); !v) throw InvalidArgument("invalid knot code: " + v.message);
  try {
    if (conway_a2(k) != 0) return UnknotStatus::Knotted;
  } catch (const BudgetExceeded&) {
    return UnknotStatus::Inconclusive;
  }
  KnotCode start = simplify(k);
  if (start.entries.empty()) return UnknotStatus::Unknot;
  if (budget == 0) return UnknotStatus::Inconclusive;
  std::unordered_set<std::string> visited{canonical_code_key(start)};
  std::deque<KnotCode> queue{start};
  while (!queue.empty()) {
    const KnotCode cur = std::move(queue.front());
    queue.pop_front();
    for (const KnotCode& next : r3_moves(cur)) {
      KnotCode reduced = simplify(next);
      if (reduced.entries.empty()) return UnknotStatus::Unknot;
      if (visited.size() >= budget) return UnknotStatus::Inconclusive;
      if (visited.insert(canonical_code_key(reduced)).second) queue.push_back(std::move(reduced));
    }
  }
  return UnknotStatus::Inconclusive;
}

}  // namespace knotgraph
