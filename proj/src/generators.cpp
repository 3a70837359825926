#include "rainbow/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

namespace rainbow {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Unbiased draw from [0, m).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  std::uint64_t x;
  do { x = rng(); } while (x >= limit);
  return x % m;
}

}  // namespace

PairColoring fraenkel_coloring(std::size_t m) {
  if (m < 1) throw precondition_error("fraenkel_coloring: m must be >= 1");
  const std::size_t n = 2 * m;
  const std::uint64_t npairs = pair_count(n);
  std::vector<ColorId> cols(npairs);
  for (std::uint64_t r = 0; r < npairs; ++r) {
    auto [x, y] = pair_unrank(n, r);
    // Flipping a_i <-> b_i on both coordinates maps a pair to its fiber
    // mate; pairs within one {a_i,b_i} block map to themselves.
    Point px = x ^ 1u, py = y ^ 1u;
    if (px > py) std::swap(px, py);
    cols[r] = std::min<ColorId>(r, pair_rank(n, px, py));
  }
  return PairColoring(n, 2, std::move(cols));
}

PairColoring edge_graph_coloring(std::size_t v) {
  if (v < 3) throw precondition_error("edge_graph_coloring: v must be >= 3");
  if (v >= (1u << 16)) throw precondition_error("edge_graph_coloring: v too large");
  const std::size_t n = pair_count(v);
  const std::uint64_t npairs = pair_count(n);
  std::vector<ColorId> cols(npairs);
  for (std::uint64_t r = 0; r < npairs; ++r) {
    auto [e, f] = pair_unrank(n, r);
    auto [a, b] = pair_unrank(v, e);
    auto [c, d] = pair_unrank(v, f);
    unsigned verts[4] = {a, b, c, d};
    std::sort(std::begin(verts), std::end(verts));
    ColorId id = 0;
    unsigned prev = UINT32_MAX;
    for (unsigned w : verts) {
      if (w == prev) continue;  // shared endpoint
      id = (id << 16) | (w + 1);
      prev = w;
    }
    cols[r] = id;
  }
  return PairColoring(n, 4, std::move(cols));
}

PairColoring random_coloring(std::size_t n, unsigned k, std::uint64_t seed,
                             FiberSizeMode mode) {
  if (k < 1) throw precondition_error("random_coloring: k must be >= 1");
  const std::uint64_t npairs = pair_count(n);
  std::vector<std::uint64_t> order(npairs);
  for (std::uint64_t i = 0; i < npairs; ++i) order[i] = i;

  std::mt19937_64 rng(seed);
  for (std::uint64_t i = npairs; i > 1; --i)
    std::swap(order[i - 1], order[bounded(rng, i)]);

  std::vector<ColorId> cols(npairs);
  ColorId fiber = 0;
  std::uint64_t at = 0;
  while (at < npairs) {
    std::uint64_t size = (mode == FiberSizeMode::Full) ? k : 1 + bounded(rng, k);
    size = std::min<std::uint64_t>(size, npairs - at);
    for (std::uint64_t i = 0; i < size; ++i) cols[order[at + i]] = fiber;
    ++fiber;
    at += size;
  }
  return PairColoring(n, k, std::move(cols));
}

FeistelPermutation::FeistelPermutation(std::uint64_t size, std::uint64_t seed) : size_(size) {
  unsigned bits = size_ <= 2 ? 2 : std::bit_width(size_ - 1);
  half_bits_ = (bits + 1) / 2;
  half_mask_ = (std::uint64_t{1} << half_bits_) - 1;
  for (int r = 0; r < kRounds; ++r) keys_[r] = splitmix64(seed ^ (0xabcd1234u + r));
}

std::uint64_t FeistelPermutation::once(std::uint64_t x) const {
  std::uint64_t left = x >> half_bits_, right = x & half_mask_;
  for (int r = 0; r < kRounds; ++r) {
    std::uint64_t next = left ^ (splitmix64(right + keys_[r]) & half_mask_);
    left = right;
    right = next;
  }
  return (left << half_bits_) | right;
}

std::uint64_t FeistelPermutation::once_back(std::uint64_t y) const {
  std::uint64_t left = y >> half_bits_, right = y & half_mask_;
  for (int r = kRounds - 1; r >= 0; --r) {
    std::uint64_t prev = right ^ (splitmix64(left + keys_[r]) & half_mask_);
    right = left;
    left = prev;
  }
  return (left << half_bits_) | right;
}

std::uint64_t FeistelPermutation::forward(std::uint64_t x) const {
  if (size_ <= 1) return x;
  do { x = once(x); } while (x >= size_);
  return x;
}

std::uint64_t FeistelPermutation::inverse(std::uint64_t y) const {
  if (size_ <= 1) return y;
  do { y = once_back(y); } while (y >= size_);
  return y;
}

PairedShuffleColoring::PairedShuffleColoring(std::size_t n, std::uint64_t seed)
    : n_(n), seed_(seed), npairs_(pair_count(n)), perm_(npairs_, seed) {}

ColorId PairedShuffleColoring::color(Point a, Point b) const {
  if (a > b) std::swap(a, b);
  if (a == b || b >= n_) throw precondition_error("pair out of range");
  const std::uint64_t rank = pair_rank(n_, a, b);
  const std::uint64_t pos = perm_.inverse(rank);
  const std::uint64_t mate_pos = pos ^ 1;
  if (mate_pos >= npairs_) return rank;  // odd tail: singleton fiber
  return std::min(rank, perm_.forward(mate_pos));
}

std::string PairedShuffleColoring::content_tag() const {
  return "paired-shuffle:n=" + std::to_string(n_) + ":seed=" + std::to_string(seed_);
}

PairColoring PairedShuffleColoring::materialize() const {
  std::vector<ColorId> cols(npairs_);
  for (std::uint64_t r = 0; r < npairs_; ++r) {
    auto [a, b] = pair_unrank(n_, r);
    cols[r] = color(a, b);
  }
  return PairColoring(n_, 2, std::move(cols));
}

namespace {

bool proper_subset(const NatSet& sub, const NatSet& sup) {
  return sub.size() < sup.size() &&
         std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

}  // namespace

OrbitSplit orbit_split(const ShrinkingMap& f) {
  std::map<NatSet, std::size_t> index;
  std::vector<NatSet> nodes;
  auto intern = [&](const NatSet& s) {
    auto [it, fresh] = index.emplace(s, nodes.size());
    if (fresh) nodes.push_back(s);
    return it->second;
  };

  std::map<std::size_t, std::size_t> next;
  std::set<std::size_t> has_pred;
  for (const auto& [x, fx] : f.entries) {
    if (!proper_subset(fx, x))
      throw precondition_error("orbit_split: f(x) must be a proper subset of x");
    std::size_t xi = intern(x), yi = intern(fx);
    if (!next.emplace(xi, yi).second)
      throw precondition_error("orbit_split: domain has a repeated set");
    has_pred.insert(yi);
  }
  {
    std::set<std::size_t> images;
    for (const auto& [xi, yi] : next)
      if (!images.insert(yi).second) throw precondition_error("orbit_split: f is not injective");
  }

  // Chain heads in lexicographic order of the head set, for determinism.
  std::vector<std::size_t> heads;
  for (const auto& [xi, yi] : next)
    if (!has_pred.count(xi)) heads.push_back(xi);
  std::sort(heads.begin(), heads.end(),
            [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });

  OrbitSplit split;
  for (std::size_t head : heads) {
    std::vector<std::size_t> chain{head};
    for (auto it = next.find(head); it != next.end(); it = next.find(it->second))
      chain.push_back(it->second);
    for (std::size_t pos = 0; pos + 2 < chain.size(); pos += 2) {
      split.d_prime.push_back(nodes[chain[pos]]);
      split.f1.emplace_back(nodes[chain[pos]], nodes[chain[pos + 1]]);
      split.f0.emplace_back(nodes[chain[pos]], nodes[chain[pos + 2]]);
    }
  }

  // f injective and even-position selection make these impossible; verify
  // anyway since ie_coloring depends on them.
  std::set<NatSet> r0, r1;
  for (const auto& [x, y] : split.f0)
    if (!r0.insert(y).second) throw internal_error("orbit_split: f0 is not injective");
  for (const auto& [x, y] : split.f1)
    if (!r1.insert(y).second) throw internal_error("orbit_split: f1 is not injective");
  for (const auto& y : r0)
    if (r1.count(y)) throw internal_error("orbit_split: f0/f1 ranges intersect");
  return split;
}

UnaryColoring ie_coloring(const OrbitSplit& split, const std::vector<NatSet>& family) {
  std::map<NatSet, std::size_t> index;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!index.emplace(family[i], i).second)
      throw precondition_error("ie_coloring: family has a repeated set");

  std::set<NatSet> seen;
  for (const auto& m : {split.f0, split.f1})
    for (const auto& [x, y] : m) {
      if (!index.count(y)) throw precondition_error("ie_coloring: image set not in the family");
      if (!seen.insert(y).second)
        throw precondition_error("ie_coloring: f0/f1 must be injective with disjoint ranges");
    }

  UnaryColoring u;
  u.items = family;
  u.colors.assign(family.size(), 0);
  std::vector<bool> assigned(family.size(), false);
  ColorId fresh = 0;
  for (std::size_t i = 0; i < split.d_prime.size(); ++i) {
    std::size_t i0 = index.at(split.f0[i].second), i1 = index.at(split.f1[i].second);
    u.colors[i0] = u.colors[i1] = fresh++;
    assigned[i0] = assigned[i1] = true;
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!assigned[i]) u.colors[i] = fresh++;
  return u;
}

unsigned unary_bound_of(const UnaryColoring& u) {
  std::map<ColorId, unsigned> count;
  unsigned best = 0;
  for (ColorId c : u.colors) best = std::max(best, ++count[c]);
  return best;
}

}  // namespace rainbow
