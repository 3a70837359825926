#include "rainbow/coloring.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace rainbow {

PairColoring::PairColoring(std::size_t universe_size, unsigned declared_bound,
                           std::vector<ColorId> colors_by_rank)
    : n_(universe_size), declared_bound_(declared_bound),
      colors_(std::move(colors_by_rank)) {
  if (declared_bound_ < 1) throw precondition_error("declared bound must be >= 1");
  if (colors_.size() != pair_count(n_))
    throw precondition_error("color table must cover every pair exactly once");
  for (std::uint64_t r = 0; r < colors_.size(); ++r)
    fibers_[colors_[r]].push_back(r);
}

ColorId PairColoring::color(Point a, Point b) const {
  if (a > b) std::swap(a, b);
  if (a == b || b >= n_) throw precondition_error("pair out of range");
  return colors_[pair_rank(n_, a, b)];
}

void PairColoring::validate_bound() const {
  for (const auto& [col, fiber] : fibers_)
    if (fiber.size() > declared_bound_)
      throw precondition_error("coloring is not " + std::to_string(declared_bound_) +
                               "-bounded: color " + std::to_string(col) + " has fiber size " +
                               std::to_string(fiber.size()));
}

std::string PairColoring::content_id() const {
  // FNV-1a over (n, k, colors)
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(n_);
  mix(declared_bound_);
  for (ColorId c : colors_) mix(c);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PairColoring all_distinct_coloring(std::size_t n) {
  std::vector<ColorId> cols(pair_count(n));
  for (std::uint64_t r = 0; r < cols.size(); ++r) cols[r] = r;
  return PairColoring(n, 1, std::move(cols));
}

PairColoring constant_coloring(std::size_t n) {
  std::vector<ColorId> cols(pair_count(n), 0);
  unsigned bound = cols.empty() ? 1 : static_cast<unsigned>(cols.size());
  return PairColoring(n, bound, std::move(cols));
}

unsigned bound_of(const PairColoring& c) {
  std::size_t best = 0;
  for (const auto& [col, fiber] : c.fibers()) best = std::max(best, fiber.size());
  return static_cast<unsigned>(best);
}

DualColoring galvin_dual(const PairColoring& c) {
  c.validate_bound();
  DualColoring d;
  d.base = &c;
  d.index_by_rank.assign(pair_count(c.universe_size()), 0);
  for (const auto& [col, fiber] : c.fibers()) {
    // fibers() lists ranks in increasing order, which is the lexicographic
    // order on (min,max); the dual index is the position in that order.
    for (std::size_t i = 0; i < fiber.size(); ++i)
      d.index_by_rank[fiber[i]] = static_cast<unsigned>(i);
  }
  return d;
}

PairColoring DualColoring::as_coloring() const {
  std::vector<ColorId> cols(index_by_rank.begin(), index_by_rank.end());
  std::vector<std::uint64_t> fiber_size(base->declared_bound(), 0);
  for (unsigned i : index_by_rank) ++fiber_size[i];
  std::uint64_t bound = 1;
  for (std::uint64_t s : fiber_size) bound = std::max(bound, s);
  return PairColoring(base->universe_size(), static_cast<unsigned>(bound), std::move(cols));
}

SubsetStatus classify_subset(const ColoringView& c, std::span<const Point> ys) {
  for (Point y : ys)
    if (y >= c.universe_size()) throw precondition_error("subset point out of range");

  SubsetStatus st{};
  st.verdict = SubsetVerdict::Polychromatic;
  if (ys.size() <= 2) {
    st.degenerate_monochromatic = true;
    if (ys.size() == 2) {
      Point a = std::min(ys[0], ys[1]), b = std::max(ys[0], ys[1]);
      if (a == b) throw precondition_error("subset has a repeated point");
      st.mono_color = c.color(a, b);
    }
    return st;
  }

  std::unordered_map<ColorId, PairOfPoints> seen;
  bool all_equal = true;
  std::optional<ColorId> first_color;
  std::optional<PairOfPoints> first_pair;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      Point a = std::min(ys[i], ys[j]), b = std::max(ys[i], ys[j]);
      if (a == b) throw precondition_error("subset has a repeated point");
      ColorId col = c.color(a, b);
      PairOfPoints p{a, b};
      if (!first_color) {
        first_color = col;
        first_pair = p;
      } else if (col != *first_color) {
        all_equal = false;
        if (!st.diff_witness) st.diff_witness = {*first_pair, p};
      }
      auto [it, inserted] = seen.emplace(col, p);
      if (!inserted && !st.equal_witness) st.equal_witness = {it->second, p};
    }
  }

  if (!st.equal_witness) {
    st.verdict = SubsetVerdict::Polychromatic;
  } else if (all_equal) {
    st.verdict = SubsetVerdict::Monochromatic;
    st.mono_color = first_color;
    st.equal_witness.reset();
  } else {
    st.verdict = SubsetVerdict::Neither;
  }
  return st;
}

NormalityResult is_normal(const ColoringView& c, std::span<const Point> a) {
  // Equal-colored pairs must share their larger element; remember, per color,
  // the top point and one representative pair.
  std::unordered_map<ColorId, PairOfPoints> rep;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Point lo = std::min(a[i], a[j]), hi = std::max(a[i], a[j]);
      ColorId col = c.color(lo, hi);
      auto [it, inserted] = rep.emplace(col, PairOfPoints{lo, hi});
      if (!inserted && it->second.second != hi)
        return {false, std::pair{it->second, PairOfPoints{lo, hi}}};
    }
  }
  return {true, std::nullopt};
}

std::vector<PairColoring> k_bounded_decompose(const PairColoring& c) {
  const unsigned k = bound_of(c);
  std::vector<PairColoring> out;
  if (k < 2) return out;

  const std::uint64_t npairs = pair_count(c.universe_size());
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = i + 1; j < k; ++j) {
      // Identify slot i with slot j inside every fiber; everything else gets
      // a fresh color. Fibers shorter than j+1 make no identification there.
      std::vector<ColorId> cols(npairs);
      for (std::uint64_t r = 0; r < npairs; ++r) cols[r] = r;
      for (const auto& [col, fiber] : c.fibers())
        if (fiber.size() > j) cols[fiber[j]] = cols[fiber[i]];
      out.emplace_back(c.universe_size(), 2, std::move(cols));
    }
  }
  return out;
}

}  // namespace rainbow
