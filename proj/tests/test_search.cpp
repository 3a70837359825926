#include <random>
#include <set>

#include "doctest.h"
#include "rainbow/extraction.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/search.hpp"
#include "test_helpers.hpp"

using namespace rainbow;
using rainbow::testing::make_coloring;

TEST_CASE("max_polychromatic") {
  SearchResult whole = max_polychromatic(all_distinct_coloring(6));
  CHECK(whole.optimum == 6);
  CHECK(whole.witness == std::vector<Point>{0, 1, 2, 3, 4, 5});
  CHECK(whole.exhaustive);

  for (std::size_t m = 2; m <= 5; ++m) {
    SearchResult res = max_polychromatic(fraenkel_coloring(m));
    CHECK(res.optimum == m + 1);
    CHECK(classify_subset(fraenkel_coloring(m), res.witness).polychromatic());
  }

  // independent full-enumeration oracle on the base-4 edge graph
  PairColoring eg = edge_graph_coloring(4);
  std::size_t brute = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::vector<Point> y;
    for (unsigned i = 0; i < 6; ++i)
      if (mask >> i & 1) y.push_back(i);
    if (classify_subset(eg, y).polychromatic()) brute = std::max(brute, y.size());
  }
  CHECK(max_polychromatic(eg).optimum == brute);

  CHECK_THROWS_AS(max_polychromatic(all_distinct_coloring(80)), cap_exceeded_error);
}

TEST_CASE("max_monochromatic") {
  CHECK(max_monochromatic(constant_coloring(5)).optimum == 5);
  CHECK(max_monochromatic(constant_coloring(5)).witness ==
        std::vector<Point>{0, 1, 2, 3, 4});
  CHECK(max_monochromatic(all_distinct_coloring(5)).optimum == 2);

  // a seed-fixed 2-coloring of [6]^2 always holds a monochromatic triple
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ColorId> cols(pair_count(6));
    for (auto& c : cols) c = rng() & 1;
    const unsigned bound = static_cast<unsigned>(cols.size());
    PairColoring two(6, bound, std::move(cols));
    CHECK(max_monochromatic(two).optimum >= 3);
  }
}

TEST_CASE("edge partition enumeration counts") {
  // partitions of a 6-element pair set into blocks <= 2: telephone number 76
  CHECK(enumerate_edge_partitions(4, 2, false, [](const EdgePartition&) { return true; }) ==
        76);
  // blocks of size 1 only: a single partition
  CHECK(enumerate_edge_partitions(4, 1, false, [](const EdgePartition&) { return true; }) ==
        1);

  // orbit sizes of canonical representatives add up to the total
  for (std::size_t n = 3; n <= 5; ++n) {
    std::uint64_t total =
        enumerate_edge_partitions(n, 2, false, [](const EdgePartition&) { return true; });
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    std::uint64_t weighted = 0;
    enumerate_edge_partitions(n, 2, true, [&](const EdgePartition& p) {
      CHECK(fact % p.automorphisms == 0);
      weighted += fact / p.automorphisms;
      return true;
    });
    CHECK(weighted == total);
  }
}

TEST_CASE("rainbow_number") {
  RainbowNumberResult r22 = rainbow_number(2, 2, 10);
  CHECK(r22.value == 2);

  RainbowNumberResult r23 = rainbow_number(2, 3, 10);
  REQUIRE(r23.value.has_value());
  CHECK(*r23.value == 4);
  REQUIRE(r23.extremal.has_value());
  CHECK(r23.extremal->universe_size() == 3);
  CHECK(max_polychromatic(*r23.extremal).optimum < 3);

  // m = 4 at a small cap: either a value with certificate or an honest
  // exceeds-cap with the extremal coloring of the cap universe
  RainbowNumberResult r24 = rainbow_number(2, 4, 5);
  if (r24.value) {
    CHECK(*r24.value <= 5);
  } else {
    REQUIRE(r24.extremal.has_value());
    CHECK(r24.extremal->universe_size() == 5);
    CHECK(max_polychromatic(*r24.extremal).optimum < 4);
  }

  CHECK_THROWS_AS(rainbow_number(1, 3, 5), precondition_error);
}

TEST_CASE("ramsey_witness") {
  std::vector<unsigned> cons(pair_count(5), 0);
  CHECK(ramsey_witness(5, cons, 5) == std::vector<Point>{0, 1, 2, 3, 4});

  // pentagon: adjacency distance 1 or 4, no monochromatic triple either way
  std::vector<unsigned> pent(pair_count(5));
  for (std::uint64_t r = 0; r < pent.size(); ++r) {
    auto [a, b] = pair_unrank(5, r);
    unsigned d = (b - a) % 5;
    pent[r] = (d == 1 || d == 4) ? 1 : 0;
  }
  CHECK(!ramsey_witness(5, pent, 3).has_value());
  CHECK(ramsey_witness(5, pent, 2).has_value());

  // R(3,3) = 6: sweep every 2-coloring of [6]^2
  std::uint64_t found = 0;
  std::vector<unsigned> colors(15);
  for (std::uint32_t word = 0; word < (1u << 15); ++word) {
    for (std::size_t i = 0; i < 15; ++i) colors[i] = word >> i & 1;
    if (ramsey_witness(6, colors, 3)) ++found;
  }
  CHECK(found == (1u << 15));
}

TEST_CASE("weak_selecter") {
  const std::size_t n = 12;
  std::vector<std::uint64_t> xset(pair_count(n));
  for (std::uint64_t i = 0; i < xset.size(); ++i) xset[i] = i;

  SUBCASE("singleton blocks") {
    std::vector<std::vector<std::uint64_t>> partition;
    for (std::uint64_t i = 0; i < xset.size(); ++i) partition.push_back({i});
    WeakSelecterResult res = weak_selecter(n, xset, partition, {3});
    CHECK(!res.failed_stage);
    REQUIRE(res.stages.size() == 1);
    CHECK(res.stages[0].base.size() == 3);
    CHECK(res.selected.size() == 3);  // [B]^2 for |B| = 3
  }

  SUBCASE("vertex-0 block is avoided at stage two") {
    std::vector<std::vector<std::uint64_t>> partition;
    std::vector<std::uint64_t> star;
    for (Point b = 1; b < n; ++b) star.push_back(pair_rank(n, 0, b));
    partition.push_back(star);
    for (std::uint64_t i = 0; i < xset.size(); ++i)
      if (std::find(star.begin(), star.end(), i) == star.end()) partition.push_back({i});

    WeakSelecterResult res = weak_selecter(n, xset, partition, {3, 3});
    CHECK(!res.failed_stage);
    REQUIRE(res.stages.size() == 2);
    // stage one picks B = {0,1,2}, touching the star block; stage two must
    // avoid every pair through vertex 0 and everything already selected
    for (std::uint64_t r : res.stages[1].added) {
      auto [a, b] = pair_unrank(n, r);
      CHECK(a != 0);
      for (std::uint64_t prev : res.stages[0].added) CHECK(r != prev);
    }
    // each partition block meets Y in at most one stage's contribution
    for (const auto& block : partition) {
      std::set<std::size_t> stages_hit;
      for (std::uint64_t r : block)
        for (std::size_t s = 0; s < res.stages.size(); ++s)
          if (std::find(res.stages[s].added.begin(), res.stages[s].added.end(), r) !=
              res.stages[s].added.end())
            stages_hit.insert(s);
      CHECK(stages_hit.size() <= 1);
    }
  }

  SUBCASE("impossible stage reports failure with partial output") {
    std::vector<std::vector<std::uint64_t>> partition{xset};  // one block: everything
    WeakSelecterResult res = weak_selecter(n, xset, partition, {3, 3});
    REQUIRE(res.failed_stage.has_value());
    CHECK(*res.failed_stage == 1);  // Q swallows X after the first stage
    CHECK(res.stages.size() == 1);
  }
}

TEST_CASE("oracle agreement: greedy extraction never beats the exact optimum") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 8 + rng() % 9;
    PairColoring c = random_coloring(n, 2, rng());
    SearchResult best = max_polychromatic(c);
    RainbowExtraction greedy = rainbow_extract(c, best.optimum, /*best_effort=*/true);
    CHECK(greedy.points.size() <= best.optimum);
    CHECK(classify_subset(c, greedy.points).polychromatic());
    const std::size_t guaranteed = [&] {
      std::size_t m = 0;
      while (rainbow_extract_required_universe(m + 1) <= n) ++m;
      return m;
    }();
    CHECK(guaranteed <= best.optimum);
  }
}

TEST_CASE("stored rainbow number data stays reproducible") {
  // RR(3,3): recomputed from scratch each run
  RainbowNumberResult r33 = rainbow_number(3, 3, 6);
  CHECK(r33.value == 5);
  REQUIRE(r33.extremal.has_value());
  CHECK(r33.extremal->universe_size() == 4);
  CHECK(max_polychromatic(*r33.extremal).optimum < 3);

  // RR(2,4) exceeds universe 6: the stored extremal really refutes it
  RainbowNumberResult r24 = rainbow_number(2, 4, 6);
  CHECK(!r24.value.has_value());
  REQUIRE(r24.extremal.has_value());
  CHECK(r24.extremal->universe_size() == 6);
  CHECK(max_polychromatic(*r24.extremal).optimum < 4);
}

TEST_CASE("canonical enumeration rejects unsupported block sizes") {
  CHECK_THROWS_AS(
      enumerate_edge_partitions(4, 9, true, [](const EdgePartition&) { return true; }),
      cap_exceeded_error);
  // non-canonical mode has no such limit
  CHECK(enumerate_edge_partitions(3, 9, false, [](const EdgePartition&) { return true; }) > 0);
}
