#include "rainbow/search.hpp"

#include <algorithm>
#include <unordered_set>

namespace rainbow {
namespace {

struct PolySearch {
  const PairColoring& c;
  const SearchConfig& cfg;
  std::uint64_t nodes = 0;
  bool exhausted_budget = false;
  std::vector<Point> best;
  std::vector<Point> current;
  std::unordered_set<ColorId> used;

  PolySearch(const PairColoring& col, const SearchConfig& config) : c(col), cfg(config) {}

  bool extends(Point w) const {
    std::unordered_set<ColorId> fresh;
    for (Point v : current) {
      ColorId col = c.color(v, w);
      if (used.count(col) || !fresh.insert(col).second) return false;
    }
    return true;
  }

  void run(const std::vector<Point>& pool) {
    if (++nodes > cfg.node_cap) { exhausted_budget = true; return; }
    if (cfg.progress_every && nodes % cfg.progress_every == 0)
      cfg.progress({0, nodes, best.size()});
    if (current.size() > best.size()) best = current;
    if (current.size() + pool.size() <= best.size()) return;

    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (exhausted_budget) return;
      if (current.size() + (pool.size() - i) <= best.size()) return;
      Point z = pool[i];
      std::vector<ColorId> added;
      for (Point v : current) added.push_back(c.color(v, z));
      current.push_back(z);
      for (ColorId col : added) used.insert(col);

      std::vector<Point> next;
      next.reserve(pool.size() - i);
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (extends(pool[j])) next.push_back(pool[j]);
      run(next);

      for (ColorId col : added) used.erase(col);
      current.pop_back();
    }
  }
};

// Lexicographically first clique of size target in the graph over [n] given
// by an adjacency-matrix predicate; empty when none exists.
template <typename Adj>
std::optional<std::vector<Point>> find_clique(std::size_t n, Adj adjacent, std::size_t target) {
  if (target == 0) return std::vector<Point>{};
  std::vector<Point> current;
  std::vector<Point> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Point>(i);

  std::optional<std::vector<Point>> found;
  auto rec = [&](auto&& self, const std::vector<Point>& cand) -> bool {
    if (current.size() == target) { found = current; return true; }
    if (current.size() + cand.size() < target) return false;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (current.size() + (cand.size() - i) < target) return false;
      current.push_back(cand[i]);
      std::vector<Point> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (adjacent(cand[i], cand[j])) next.push_back(cand[j]);
      if (self(self, next)) return true;
      current.pop_back();
    }
    return false;
  };
  rec(rec, pool);
  return found;
}

void check_cap(const PairColoring& c, const SearchConfig& cfg) {
  if (c.universe_size() > cfg.universe_cap)
    throw cap_exceeded_error("universe size " + std::to_string(c.universe_size()) +
                             " above search cap " + std::to_string(cfg.universe_cap) +
                             "; use rainbow_extract for guaranteed sets at this scale");
}

}  // namespace

SearchResult max_polychromatic(const PairColoring& c, SearchConfig cfg) {
  check_cap(c, cfg);
  PolySearch s(c, cfg);
  std::vector<Point> pool(c.universe_size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Point>(i);
  s.run(pool);
  return {s.best.size(), s.best, s.nodes, !s.exhausted_budget};
}

SearchResult max_monochromatic(const PairColoring& c, SearchConfig cfg) {
  check_cap(c, cfg);
  const std::size_t n = c.universe_size();
  SearchResult r;
  r.nodes_explored = 1;
  if (n >= 1) { r.optimum = 1; r.witness = {0}; }
  if (n >= 2) { r.optimum = 2; r.witness = {0, 1}; }

  auto better = [&](const std::vector<Point>& cand) {
    return cand.size() > r.optimum || (cand.size() == r.optimum && cand < r.witness);
  };

  for (const auto& [col, fiber] : c.fibers()) {
    // A clique of size s inside this fiber needs C(s,2) <= |fiber| pairs.
    std::size_t ceiling = 2;
    while ((ceiling + 1) * ceiling / 2 <= fiber.size()) ++ceiling;
    if (ceiling <= r.optimum) continue;

    std::vector<Point> verts;
    std::vector<std::pair<Point, Point>> edges;
    for (std::uint64_t rank : fiber) {
      auto [a, b] = pair_unrank(n, rank);
      verts.push_back(a);
      verts.push_back(b);
      edges.emplace_back(a, b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto adjacent = [&](Point a, Point b) {
      if (a > b) std::swap(a, b);
      return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
    };
    for (std::size_t want = ceiling; want >= std::max<std::size_t>(r.optimum, 3); --want) {
      auto local = find_clique(verts.size(), [&](Point i, Point j) {
        return adjacent(verts[i], verts[j]);
      }, want);
      ++r.nodes_explored;
      if (local) {
        std::vector<Point> cand;
        for (Point i : *local) cand.push_back(verts[i]);
        std::sort(cand.begin(), cand.end());
        if (better(cand)) { r.optimum = cand.size(); r.witness = cand; }
        break;
      }
    }
  }
  return r;
}

PairColoring EdgePartition::to_coloring() const {
  std::vector<ColorId> cols(block_of.begin(), block_of.end());
  return PairColoring(n, k, std::move(cols));
}

namespace {

// Pair-rank permutation tables for every vertex permutation of [n].
std::vector<std::vector<std::uint16_t>> pair_perm_tables(std::size_t n) {
  const std::uint64_t npairs = pair_count(n);
  std::vector<Point> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Point>(i);
  std::vector<std::vector<std::uint16_t>> tables;
  do {
    std::vector<std::uint16_t> t(npairs);
    for (std::uint64_t r = 0; r < npairs; ++r) {
      auto [a, b] = pair_unrank(n, r);
      Point pa = perm[a], pb = perm[b];
      if (pa > pb) std::swap(pa, pb);
      t[r] = static_cast<std::uint16_t>(pair_rank(n, pa, pb));
    }
    tables.push_back(std::move(t));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

struct PartitionEnumerator {
  std::size_t n;
  unsigned k;
  bool canonical_only;
  const std::function<bool(const EdgePartition&)>& visit;
  std::uint64_t npairs;
  std::vector<std::vector<std::uint16_t>> perms;  // excludes identity slot 0 handling
  EdgePartition part;
  std::uint64_t visited = 0;
  bool stopped = false;

  // mate list of pair `r` under vertex permutation table `t`, written into
  // buf: images of the other members of the block containing t^-1 applied...
  // Since t is an involution-free general permutation we need the preimage;
  // keep inverse tables alongside.
  std::vector<std::vector<std::uint16_t>> inv_perms;

  PartitionEnumerator(std::size_t n_, unsigned k_, bool canon,
                      const std::function<bool(const EdgePartition&)>& v)
      : n(n_), k(k_), canonical_only(canon), visit(v), npairs(pair_count(n_)) {
    part.n = n;
    part.k = k;
    part.block_of.assign(npairs, 0);
    if (canonical_only) {
      perms = pair_perm_tables(n);
      inv_perms.assign(perms.size(), {});
      for (std::size_t p = 0; p < perms.size(); ++p) {
        inv_perms[p].assign(npairs, 0);
        for (std::uint64_t r = 0; r < npairs; ++r) inv_perms[p][perms[p][r]] = r;
      }
    }
  }

  // Compares the permuted block structure against the identity one; returns
  // -1 / 0 / +1. Early-aborts at the first differing pair rank.
  int compare_permuted(std::size_t pi) const {
    const auto& fwd = perms[pi];
    const auto& inv = inv_perms[pi];
    std::uint16_t mine[8], theirs[8];
    for (std::uint64_t r = 0; r < npairs; ++r) {
      const auto& own_block = part.blocks[part.block_of[r]];
      std::size_t mine_sz = 0;
      for (std::uint16_t x : own_block)
        if (x != r) mine[mine_sz++] = x;

      const auto& pre_block = part.blocks[part.block_of[inv[r]]];
      std::size_t their_sz = 0;
      for (std::uint16_t x : pre_block) {
        std::uint16_t img = fwd[x];
        if (img != r) theirs[their_sz++] = img;
      }
      std::sort(theirs, theirs + their_sz);

      const std::size_t common = std::min(mine_sz, their_sz);
      for (std::size_t i = 0; i < common; ++i) {
        if (theirs[i] < mine[i]) return -1;
        if (theirs[i] > mine[i]) return 1;
      }
      if (their_sz != mine_sz) return their_sz < mine_sz ? -1 : 1;
    }
    return 0;
  }

  bool is_canonical(std::uint64_t& aut) const {
    aut = 1;  // identity
    for (std::size_t p = 0; p < perms.size(); ++p) {
      int cmp = compare_permuted(p);
      if (cmp < 0) return false;
      if (cmp == 0) ++aut;
    }
    --aut;  // identity occurs in perms as well
    return true;
  }

  void emit() {
    if (canonical_only) {
      std::uint64_t aut = 0;
      if (!is_canonical(aut)) return;
      part.automorphisms = aut;
    } else {
      part.automorphisms = 0;
    }
    ++visited;
    if (!visit(part)) stopped = true;
  }

  void rec(std::uint64_t r) {
    if (stopped) return;
    if (r == npairs) { emit(); return; }
    const std::size_t nblocks = part.blocks.size();
    for (std::size_t b = 0; b < nblocks && !stopped; ++b) {
      if (part.blocks[b].size() >= k) continue;
      part.blocks[b].push_back(static_cast<std::uint16_t>(r));
      part.block_of[r] = static_cast<std::uint16_t>(b);
      rec(r + 1);
      part.blocks[b].pop_back();
    }
    if (stopped) return;
    part.blocks.push_back({static_cast<std::uint16_t>(r)});
    part.block_of[r] = static_cast<std::uint16_t>(nblocks);
    rec(r + 1);
    part.blocks.pop_back();
  }
};

}  // namespace

std::uint64_t enumerate_edge_partitions(std::size_t n, unsigned k, bool canonical_only,
                                        const std::function<bool(const EdgePartition&)>& visit) {
  if (n < 2) {
    EdgePartition trivial;
    trivial.n = n;
    trivial.k = k;
    trivial.automorphisms = canonical_only ? (n <= 1 ? 1 : 0) : 0;
    visit(trivial);
    return 1;
  }
  if (pair_count(n) > 0xffff) throw cap_exceeded_error("enumerate_edge_partitions: n too large");
  if (canonical_only && k > 8)
    throw cap_exceeded_error("enumerate_edge_partitions: canonical mode supports k <= 8");
  PartitionEnumerator e(n, k, canonical_only, visit);
  e.rec(0);
  return e.visited;
}

RainbowNumberResult rainbow_number(unsigned k, std::size_t m, std::size_t n_max) {
  if (k < 2 || m < 2) throw precondition_error("rainbow_number: need k >= 2 and m >= 2");
  RainbowNumberResult result;
  for (std::size_t bigN = m; bigN <= n_max; ++bigN) {
    std::optional<PairColoring> extremal;
    enumerate_edge_partitions(bigN, k, true, [&](const EdgePartition& p) {
      ++result.colorings_checked;
      PairColoring c = p.to_coloring();
      SearchConfig cfg;
      cfg.universe_cap = bigN;
      if (max_polychromatic(c, cfg).optimum < m) {
        extremal = std::move(c);
        return false;  // one refutation settles this N
      }
      return true;
    });
    if (!extremal) {
      result.value = bigN;
      return result;
    }
    result.extremal = std::move(extremal);
  }
  return result;  // value empty: exceeds cap, extremal from n_max kept
}

std::optional<std::vector<Point>> ramsey_witness(std::size_t n,
                                                 const std::vector<unsigned>& color_by_rank,
                                                 std::size_t m) {
  if (color_by_rank.size() != pair_count(n))
    throw precondition_error("ramsey_witness: color table must cover every pair");
  if (m > n) return std::nullopt;
  if (m <= 1) {
    std::vector<Point> b;
    for (std::size_t i = 0; i < m; ++i) b.push_back(static_cast<Point>(i));
    return b;
  }
  // the lexicographically smaller witness across the two colors
  std::optional<std::vector<Point>> best;
  for (unsigned want : {0u, 1u}) {
    auto found = find_clique(n, [&](Point a, Point b) {
      return color_by_rank[pair_rank(n, std::min(a, b), std::max(a, b))] == want;
    }, m);
    if (found && (!best || *found < *best)) best = found;
  }
  return best;
}

WeakSelecterResult weak_selecter(std::size_t n, const std::vector<std::uint64_t>& xset,
                                 const std::vector<std::vector<std::uint64_t>>& partition,
                                 const std::vector<std::size_t>& sizes) {
  std::unordered_set<std::uint64_t> in_x(xset.begin(), xset.end());
  std::unordered_set<std::uint64_t> selected;
  std::unordered_set<std::size_t> touched_blocks;

  auto block_of_rank = [&](std::uint64_t r) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < partition.size(); ++i)
      if (std::find(partition[i].begin(), partition[i].end(), r) != partition[i].end())
        return i;
    return std::nullopt;
  };

  WeakSelecterResult result;
  for (std::size_t stage = 0; stage < sizes.size(); ++stage) {
    std::unordered_set<std::uint64_t> q;
    for (std::size_t b : touched_blocks)
      for (std::uint64_t r : partition[b]) q.insert(r);

    // Color 1 = member of X \ Q; we need a clique there.
    auto found = find_clique(n, [&](Point a, Point b) {
      std::uint64_t r = pair_rank(n, std::min(a, b), std::max(a, b));
      return in_x.count(r) && !q.count(r);
    }, sizes[stage]);
    if (!found) {
      result.failed_stage = stage;
      break;
    }

    WeakSelecterStage st;
    st.base = *found;
    for (std::size_t i = 0; i < found->size(); ++i)
      for (std::size_t j = i + 1; j < found->size(); ++j) {
        std::uint64_t r = pair_rank(n, (*found)[i], (*found)[j]);
        st.added.push_back(r);
        selected.insert(r);
        if (auto b = block_of_rank(r)) touched_blocks.insert(*b);
      }
    std::sort(st.added.begin(), st.added.end());
    result.stages.push_back(std::move(st));
  }

  result.selected.assign(selected.begin(), selected.end());
  std::sort(result.selected.begin(), result.selected.end());
  return result;
}

}  // namespace rainbow
