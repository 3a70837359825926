#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"

namespace rainbow {

/// Pair coloring on universe 2m (point 2i is a_i, point 2i+1 is b_i):
/// {a_i,b_j} and {a_j,b_i} share a color, as do {a_i,a_j} and {b_i,b_j};
/// each {a_i,b_i} is a singleton fiber. 2-bounded.
PairColoring fraenkel_coloring(std::size_t m);

/// Universe = edges of K_v indexed lexicographically; the color of an edge
/// pair is an identifier for the union of their endpoints. Declared bound 4
/// (the actual maximum fiber is 3 for v >= 4).
PairColoring edge_graph_coloring(std::size_t v);

enum class FiberSizeMode {
  Full,           // every fiber gets exactly k pairs (last one may be short)
  UniformRandom,  // fiber sizes drawn uniformly from 1..k
};

/// Seeded deterministic k-bounded coloring: pair ranks are shuffled and
/// grouped greedily into fibers of size <= k.
PairColoring random_coloring(std::size_t n, unsigned k, std::uint64_t seed,
                             FiberSizeMode mode = FiberSizeMode::Full);

/// Seeded pseudorandom permutation of [0,size) (balanced Feistel network
/// with cycle walking); both directions are O(1) per evaluation.
class FeistelPermutation {
 public:
  FeistelPermutation(std::uint64_t size, std::uint64_t seed);
  std::uint64_t size() const { return size_; }
  std::uint64_t forward(std::uint64_t x) const;
  std::uint64_t inverse(std::uint64_t y) const;

 private:
  static constexpr int kRounds = 6;
  std::uint64_t size_;
  unsigned half_bits_;
  std::uint64_t half_mask_;
  std::uint64_t keys_[kRounds];

  std::uint64_t once(std::uint64_t x) const;
  std::uint64_t once_back(std::uint64_t y) const;
};

/// A seeded 2-bounded coloring evaluated on demand: pair ranks are paired up
/// along a pseudorandom permutation (positions 2t and 2t+1 form a fiber), so
/// universes far beyond what a materialized table could hold stay cheap.
/// The color of a pair is the smaller rank in its fiber.
class PairedShuffleColoring final : public ColoringView {
 public:
  PairedShuffleColoring(std::size_t n, std::uint64_t seed);
  std::size_t universe_size() const override { return n_; }
  unsigned declared_bound() const override { return 2; }
  ColorId color(Point a, Point b) const override;
  std::string content_tag() const override;

  /// Materializes the full table; intended for small universes and tests.
  PairColoring materialize() const;

 private:
  std::size_t n_;
  std::uint64_t seed_;
  std::uint64_t npairs_;
  FeistelPermutation perm_;
};

using NatSet = std::vector<unsigned>;  // sorted, duplicate-free

/// An injective map on a finite family of finite sets with f(x) a proper
/// subset of x (which forces acyclicity).
struct ShrinkingMap {
  std::vector<std::pair<NatSet, NatSet>> entries;  // (x, f(x))
};

/// The even/odd forward-iterate selection: D' holds the even-position
/// elements of each maximal f-chain that still have two forward iterates;
/// f1(x) = f(x) (odd position), f0(x) = f(f(x)) (even position). Selecting
/// only even chain positions keeps the two ranges disjoint.
struct OrbitSplit {
  std::vector<NatSet> d_prime;
  std::vector<std::pair<NatSet, NatSet>> f0;  // x -> f(f(x)), x in D'
  std::vector<std::pair<NatSet, NatSet>> f1;  // x -> f(x),    x in D'
};

OrbitSplit orbit_split(const ShrinkingMap& f);

struct UnaryColoring {
  std::vector<NatSet> items;
  std::vector<ColorId> colors;  // parallel to items
  unsigned declared_bound = 2;
};

/// Colors f0(x) and f1(x) alike for every x in D' and gives every other
/// family member a fresh color; 2-bounded, and every x in D' has two
/// distinct equal-colored proper subsets.
UnaryColoring ie_coloring(const OrbitSplit& split, const std::vector<NatSet>& family);

unsigned unary_bound_of(const UnaryColoring& u);

}  // namespace rainbow
