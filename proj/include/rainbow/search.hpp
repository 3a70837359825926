#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"

namespace rainbow {

struct SearchProgress {
  unsigned shard;
  std::uint64_t nodes;
  std::size_t best;
};

struct SearchConfig {
  std::size_t universe_cap = 64;
  std::uint64_t node_cap = UINT64_MAX;
  /// When set, called every progress_every explored nodes.
  std::uint64_t progress_every = 0;
  std::function<void(const SearchProgress&)> progress;
};

struct SearchResult {
  std::size_t optimum = 0;
  std::vector<Point> witness;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = true;
};

/// Exhaustive maximum polychromatic subset via branch and bound; the bound
/// at a node is |X| + |pool /\ E(X)|. Ties between witnesses are broken
/// lexicographically.
SearchResult max_polychromatic(const PairColoring& c, SearchConfig cfg = {});

/// Exhaustive maximum monochromatic subset. A monochromatic m-set needs all
/// C(m,2) of its pairs inside one fiber, so the search reduces to a clique
/// search per fiber.
SearchResult max_monochromatic(const PairColoring& c, SearchConfig cfg = {});

/// A partition of the pairs of [n] into blocks of size <= k: a k-bounded
/// coloring presented intensionally (colors = blocks).
struct EdgePartition {
  std::size_t n = 0;
  unsigned k = 1;
  std::vector<std::uint16_t> block_of;             // pair rank -> block id
  std::vector<std::vector<std::uint16_t>> blocks;  // block id -> pair ranks, ascending
  std::uint64_t automorphisms = 0;                 // |Aut|, filled for canonical visits

  PairColoring to_coloring() const;
};

/// Enumerates partitions of the pair set of [n] into blocks of size <= k.
/// With canonical_only, visits exactly one representative per orbit of the
/// simultaneous vertex relabeling action (the lexicographically minimal
/// block structure) and fills automorphisms. The callback may return false
/// to stop early. Returns the number of partitions visited.
std::uint64_t enumerate_edge_partitions(std::size_t n, unsigned k, bool canonical_only,
                                        const std::function<bool(const EdgePartition&)>& visit);

struct RainbowNumberResult {
  std::optional<std::size_t> value;  // empty: exceeds cap
  /// A coloring of [value-1] (or of [cap] when the cap was exceeded) with no
  /// polychromatic m-subset; empty when no universe size was ever refuted.
  std::optional<PairColoring> extremal;
  std::uint64_t colorings_checked = 0;
};

/// Least N <= n_max such that every k-bounded coloring of [N]^2 admits a
/// polychromatic subset of size m, computed by canonical enumeration with
/// max_polychromatic as the verifier.
RainbowNumberResult rainbow_number(unsigned k, std::size_t m, std::size_t n_max);

/// Exhaustive monochromatic witness for an arbitrary 2-coloring of the
/// pairs of [n]: the lexicographically first B with |B| = m whose pairs all
/// receive one color, or nothing.
std::optional<std::vector<Point>> ramsey_witness(std::size_t n,
                                                 const std::vector<unsigned>& color_by_rank,
                                                 std::size_t m);

struct WeakSelecterStage {
  std::vector<Point> base;               // B_i
  std::vector<std::uint64_t> added;      // [B_i]^2 as pair ranks
};

struct WeakSelecterResult {
  std::vector<std::uint64_t> selected;   // Y, ascending pair ranks
  std::vector<WeakSelecterStage> stages;
  std::optional<std::size_t> failed_stage;
};

/// Staged weak selecter: at stage i, with Q the union of partition blocks
/// already touched by Y, finds B with [B]^2 inside xset \ Q and |B| >=
/// sizes[i] (the color-1 side of the Q-membership 2-coloring), then adds
/// [B]^2 to Y. A failing stage is reported and the partial Y returned.
WeakSelecterResult weak_selecter(std::size_t n, const std::vector<std::uint64_t>& xset,
                                 const std::vector<std::vector<std::uint64_t>>& partition,
                                 const std::vector<std::size_t>& sizes);

}  // namespace rainbow
