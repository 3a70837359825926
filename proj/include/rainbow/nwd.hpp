#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

/// One depth step of the interval system: the chain a_0 = c_n, a_{i+1} =
/// a_i /\ b_i^{p,q} for the least qualifying {p,q}, the points removed from
/// S_n by those choices, and the disjoint b-blocks allocated inside the
/// chain's last interval.
struct IntervalSystemLevel {
  std::vector<Interval> a_chain;  // a_0^n .. a_n^n
  /// Chain choices: chosen[i] = the {p,q} whose b-block was entered at step
  /// i (indices into points), when one intersected a_i.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> chosen;
  std::vector<std::size_t> removed;  // points outside S_n, ascending
  /// b_n^{p,q} for {p,q} in [S_n]^2, keyed by (p,q) with p < q, in
  /// lexicographic order.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Interval>> blocks;
};

struct IntervalSystem {
  std::vector<Rational> points;  // S, in its enumeration order
  std::vector<Interval> c;       // c_0 .. c_{depth-1}
  std::vector<IntervalSystemLevel> levels;

  bool in_s_n(std::size_t level, std::size_t point_index) const;
};

struct NwdColoring {
  PairColoring coloring;  // over indices of S, 2-bounded
  IntervalSystem system;
};

/// The nowhere-dense-forcing coloring: chi(p,x) = chi(q,x) = {p,q,x} when
/// p,q precede x and x lies in the realized block b_n^{p,q}; every other
/// pair keeps its own color. Points must be pairwise distinct rationals.
NwdColoring nowhere_dense_coloring(const std::vector<Rational>& points, std::size_t depth);

struct SystemCheck {
  bool ok = true;
  std::string detail;  // first violation when !ok
  explicit operator bool() const { return ok; }
};

/// Disjointness of each level's blocks, nesting b <= a_n^n <= c_n, and the
/// cross-level separation clause: blocks of different levels that share a
/// point of their index pairs never overlap.
SystemCheck check_interval_system(const IntervalSystem& sys);

/// Escape property of polychromatic sets: for A polychromatic, p,q in
/// A /\ S_n and a realized block b_n^{p,q}, no point of A past p,q lies in
/// the block.
SystemCheck check_escape_property(const NwdColoring& nc, const std::vector<Point>& poly_set);

struct TransferResult {
  std::vector<Interval> cprime;  // t_n, t_n inside c_n, avoiding g(0..n)
  std::vector<Rational> f;       // injective; f(n) in every realized t containing g(n)
};

/// The nowhere-dense transfer construction for a window of g-values, using
/// the canonical dyadic enumeration for the ambient intervals.
TransferResult nwd_transfer(const std::vector<Rational>& g, std::size_t window);
TransferResult nwd_transfer(const std::vector<Rational>& g,
                            const std::vector<Interval>& enumeration);

}  // namespace rainbow
