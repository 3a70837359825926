#include "rainbow/nwd.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rainbow {

std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den <= 0) throw parse_error("rational denominator must be positive: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw parse_error("malformed rational: " + s);
  }
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo < hi) return Interval(lo, hi);
  return std::nullopt;
}

std::vector<Interval> dyadic_intervals(std::size_t count) {
  std::vector<Interval> out;
  BigInt den = 1;  // 2^level
  for (unsigned level = 0; out.size() < count; ++level, den *= 2) {
    for (BigInt u = 0; u < den && out.size() < count; ++u)
      for (BigInt v = u + 1; v <= den && out.size() < count; ++v) {
        if (level > 0 && u % 2 == 0 && v % 2 == 0) continue;  // seen earlier
        out.emplace_back(Rational(u, den), Rational(v, den));
      }
    if (level > 64) throw internal_error("dyadic_intervals: runaway enumeration");
  }
  return out;
}

std::vector<Rational> dyadic_points(std::size_t count) {
  std::vector<Rational> out;
  BigInt den = 2;
  while (out.size() < count) {
    for (BigInt u = 1; u < den && out.size() < count; u += 2)
      out.emplace_back(u, den);
    den *= 2;
    if (den > (BigInt(1) << 128)) throw internal_error("dyadic_points: runaway enumeration");
  }
  return out;
}

bool IntervalSystem::in_s_n(std::size_t level, std::size_t point_index) const {
  const auto& rem = levels[level].removed;
  return !std::binary_search(rem.begin(), rem.end(), point_index);
}

namespace {

ColorId pack_pair_color(std::size_t y, std::size_t x) {
  return (static_cast<ColorId>(y + 1) << 16) | static_cast<ColorId>(x + 1);
}

ColorId pack_triple_color(std::size_t p, std::size_t q, std::size_t x) {
  if (p > q) std::swap(p, q);
  return (static_cast<ColorId>(p + 1) << 32) | (static_cast<ColorId>(q + 1) << 16) |
         static_cast<ColorId>(x + 1);
}

}  // namespace

NwdColoring nowhere_dense_coloring(const std::vector<Rational>& points, std::size_t depth) {
  const std::size_t sz = points.size();
  if (sz < 3) throw precondition_error("nowhere_dense_coloring: need at least 3 points");
  if (sz >= (1u << 16)) throw precondition_error("nowhere_dense_coloring: too many points");
  {
    std::set<Rational> distinct(points.begin(), points.end());
    if (distinct.size() != sz)
      throw precondition_error("nowhere_dense_coloring: points must be distinct");
  }

  IntervalSystem sys;
  sys.points = points;
  sys.c = dyadic_intervals(depth);

  for (std::size_t n = 0; n < depth; ++n) {
    IntervalSystemLevel level;
    level.a_chain.push_back(sys.c[n]);
    std::set<std::size_t> removed;

    for (std::size_t i = 0; i < n; ++i) {
      const Interval& a_i = level.a_chain.back();
      std::optional<std::pair<std::size_t, std::size_t>> pick;
      std::optional<Interval> cut;
      for (const auto& [pq, block] : sys.levels[i].blocks) {
        if (auto meet = intersect(a_i, block)) {
          pick = pq;  // blocks are in lexicographic (p,q) order already
          cut = meet;
          break;
        }
      }
      level.chosen.push_back(pick);
      if (pick) {
        level.a_chain.push_back(*cut);
        removed.insert(pick->first);
        removed.insert(pick->second);
      } else {
        level.a_chain.push_back(a_i);
      }
    }
    level.removed.assign(removed.begin(), removed.end());

    // Allocate pairwise disjoint sub-blocks of a_n^n, one per pair of S_n.
    // A block centered on an S-point past its pair realizes the
    // identification chi(p,x) = chi(q,x); equal splitting would park every
    // point of a dyadic S on a block boundary and realize nothing, so each
    // pair is given an unused interior point as a host when one exists, and
    // an equal-split slot of a point-free margin otherwise.
    std::vector<std::size_t> sn;
    for (std::size_t p = 0; p < sz; ++p)
      if (!removed.count(p)) sn.push_back(p);
    if (sn.size() >= 2) {
      const Interval& area = level.a_chain.back();
      std::vector<std::size_t> interior;  // S-points strictly inside a_n^n
      for (std::size_t x = 0; x < sz; ++x)
        if (area.contains(points[x])) interior.push_back(x);

      auto nearest_gap = [&](std::size_t x) {
        Rational d = std::min(Rational(points[x] - area.lo), Rational(area.hi - points[x]));
        for (std::size_t y : interior) {
          if (y == x) continue;
          Rational gap = points[x] < points[y] ? Rational(points[y] - points[x])
                                               : Rational(points[x] - points[y]);
          d = std::min(d, gap);
        }
        return d;
      };

      std::set<std::size_t> used_hosts;
      std::vector<std::pair<std::size_t, std::size_t>> fallback;
      for (std::size_t pi = 0; pi < sn.size(); ++pi)
        for (std::size_t qi = pi + 1; qi < sn.size(); ++qi) {
          std::optional<std::size_t> host;
          for (std::size_t x : interior)
            if (x > sn[qi] && !used_hosts.count(x)) { host = x; break; }
          if (host) {
            used_hosts.insert(*host);
            const Rational delta = nearest_gap(*host) / 4;
            level.blocks.emplace_back(
                std::make_pair(sn[pi], sn[qi]),
                Interval(points[*host] - delta, points[*host] + delta));
          } else {
            fallback.emplace_back(sn[pi], sn[qi]);
          }
        }

      if (!fallback.empty()) {
        // middle half of the left margin, clear of every host block
        Rational first = area.hi;
        for (std::size_t x : interior) first = std::min(first, points[x]);
        const Rational len = first - area.lo;
        const Rational lo = area.lo + len / 4, hi = first - len / 4;
        const Rational step = (hi - lo) / fallback.size();
        for (std::size_t j = 0; j < fallback.size(); ++j)
          level.blocks.emplace_back(fallback[j],
                                    Interval(lo + step * j, lo + step * (j + 1)));
        std::sort(level.blocks.begin(), level.blocks.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
      }
    }
    sys.levels.push_back(std::move(level));
  }

  // chi over the indices of S: default {y,x}, overridden to {p,q,x} when x
  // falls inside a realized b_n^{p,q} with p,q before x.
  const std::uint64_t npairs = pair_count(sz);
  std::vector<ColorId> cols(npairs);
  for (std::uint64_t r = 0; r < npairs; ++r) {
    auto [y, x] = pair_unrank(sz, r);
    cols[r] = pack_pair_color(y, x);
  }
  for (const auto& level : sys.levels) {
    for (const auto& [pq, block] : level.blocks) {
      auto [p, q] = pq;
      for (std::size_t x = std::max(p, q) + 1; x < sz; ++x) {
        if (!block.contains(points[x])) continue;
        const ColorId col = pack_triple_color(p, q, x);
        for (std::size_t endpoint : {p, q}) {
          const std::uint64_t rank = pair_rank(sz, static_cast<Point>(endpoint),
                                               static_cast<Point>(x));
          const ColorId expect = pack_pair_color(endpoint, x);
          if (cols[rank] != expect && cols[rank] != col)
            throw internal_error("nowhere_dense_coloring: conflicting color assignment");
          cols[rank] = col;
        }
      }
    }
  }

  NwdColoring out{PairColoring(sz, 2, std::move(cols)), std::move(sys)};
  return out;
}

SystemCheck check_interval_system(const IntervalSystem& sys) {
  for (std::size_t n = 0; n < sys.levels.size(); ++n) {
    const auto& level = sys.levels[n];
    if (level.a_chain.empty() || !(level.a_chain.front().lo == sys.c[n].lo &&
                                   level.a_chain.front().hi == sys.c[n].hi))
      return {false, "level " + std::to_string(n) + ": chain does not start at c_n"};
    for (std::size_t i = 0; i + 1 < level.a_chain.size(); ++i)
      if (!level.a_chain[i + 1].subset_of(level.a_chain[i]))
        return {false, "level " + std::to_string(n) + ": chain is not nested"};

    for (std::size_t i = 0; i < level.blocks.size(); ++i) {
      if (!level.blocks[i].second.subset_of(level.a_chain.back()))
        return {false, "level " + std::to_string(n) + ": block escapes a_n^n"};
      if (!level.blocks[i].second.subset_of(sys.c[n]))
        return {false, "level " + std::to_string(n) + ": block escapes c_n"};
      for (std::size_t j = i + 1; j < level.blocks.size(); ++j)
        if (level.blocks[i].second.intersects(level.blocks[j].second))
          return {false, "level " + std::to_string(n) + ": blocks overlap"};
    }
  }

  // Cross-level clause: overlapping blocks with intersecting index pairs
  // only happen inside one level.
  for (std::size_t n = 0; n < sys.levels.size(); ++n)
    for (std::size_t m = n + 1; m < sys.levels.size(); ++m)
      for (const auto& [pq, bn] : sys.levels[n].blocks)
        for (const auto& [rs, bm] : sys.levels[m].blocks) {
          bool share = pq.first == rs.first || pq.first == rs.second ||
                       pq.second == rs.first || pq.second == rs.second;
          if (share && bn.intersects(bm))
            return {false, "levels " + std::to_string(n) + "," + std::to_string(m) +
                               ": clause (3) violated"};
        }
  return {true, {}};
}

SystemCheck check_escape_property(const NwdColoring& nc, const std::vector<Point>& poly_set) {
  const auto& sys = nc.system;
  std::set<Point> a(poly_set.begin(), poly_set.end());
  for (std::size_t n = 0; n < sys.levels.size(); ++n) {
    for (const auto& [pq, block] : sys.levels[n].blocks) {
      auto [p, q] = pq;
      if (!a.count(static_cast<Point>(p)) || !a.count(static_cast<Point>(q))) continue;
      if (!sys.in_s_n(n, p) || !sys.in_s_n(n, q)) continue;
      for (Point x : a) {
        if (x <= std::max(p, q)) continue;
        if (block.contains(sys.points[x]))
          return {false, "polychromatic set enters b_" + std::to_string(n) + "^{" +
                             std::to_string(p) + "," + std::to_string(q) + "} at point " +
                             std::to_string(x)};
      }
    }
  }
  return {true, {}};
}

TransferResult nwd_transfer(const std::vector<Rational>& g, std::size_t window) {
  return nwd_transfer(g, dyadic_intervals(window));
}

namespace {

// A dyadic subinterval of the open gap (lo, hi).
Interval dyadic_inside(const Rational& lo, const Rational& hi) {
  BigInt den = 1;
  for (int level = 0; level <= 2048; ++level, den *= 2) {
    // least u with lo <= u/den, greatest v with v/den <= hi
    BigInt u = (numerator(lo) * den + denominator(lo) - 1) / denominator(lo);
    BigInt v = (numerator(hi) * den) / denominator(hi);
    if (u < v) return Interval(Rational(u, den), Rational(v, den));
  }
  throw internal_error("dyadic_inside: gap too thin");
}

}  // namespace

TransferResult nwd_transfer(const std::vector<Rational>& g,
                            const std::vector<Interval>& enumeration) {
  const std::size_t window = std::min(g.size(), enumeration.size());
  if (g.size() != enumeration.size())
    throw precondition_error("nwd_transfer: g and the interval enumeration must align");

  TransferResult out;
  // t_n: a subinterval of c_n free of g(0..n); pick the first nonempty gap.
  for (std::size_t n = 0; n < window; ++n) {
    const Interval& c = enumeration[n];
    std::vector<Rational> cuts;
    for (std::size_t i = 0; i <= n; ++i)
      if (c.contains(g[i])) cuts.push_back(g[i]);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Rational lo = c.lo;
    std::optional<Interval> pick;
    for (const Rational& cut : cuts) {
      if (lo < cut) { pick = dyadic_inside(lo, cut); break; }
      lo = cut;
    }
    if (!pick) pick = dyadic_inside(lo, c.hi);
    out.cprime.push_back(*pick);
  }

  // F(n): inside every realized t containing g(n), fresh; integers past the
  // unit interval when nothing contains g(n).
  std::set<Rational> used;
  for (std::size_t n = 0; n < window; ++n) {
    std::optional<Interval> meet;
    for (const Interval& t : out.cprime) {
      if (!t.contains(g[n])) continue;
      meet = meet ? intersect(*meet, t) : std::optional<Interval>(t);
      if (!meet)
        throw internal_error("nwd_transfer: realized intervals around g(n) do not intersect");
    }
    Rational value;
    if (!meet) {
      value = Rational(n + 2);
    } else {
      // The midpoint halved toward the left endpoint until unused; the meet
      // is open and used is finite, so this terminates.
      value = (meet->lo + meet->hi) / 2;
      while (used.count(value)) value = (value + meet->lo) / 2;
      if (!meet->contains(value))
        throw internal_error("nwd_transfer: could not place F(n)");
    }
    used.insert(value);
    out.f.push_back(value);
  }
  return out;
}

}  // namespace rainbow
