#include <random>
#include <set>

#include "doctest.h"
#include "rainbow/extraction.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/search.hpp"
#include "test_helpers.hpp"

using namespace rainbow;
using rainbow::testing::LazyAllDistinct;
using rainbow::testing::make_coloring;

TEST_CASE("extender_set") {
  PairColoring ad = all_distinct_coloring(8);
  std::vector<Point> pool{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(extender_set(ad, {2, 5}, pool) == std::vector<Point>{0, 1, 3, 4, 6, 7});
  CHECK(extender_set(ad, {}, pool) == pool);

  PairColoring ident = make_coloring(10, 2, {{{0, 1}, {2, 3}}});
  std::vector<Point> rest{3, 4, 5, 6, 7, 8, 9};
  CHECK(extender_set(ident, {0, 1, 2}, rest) == std::vector<Point>{4, 5, 6, 7, 8, 9});

  PairColoring cons = constant_coloring(4);
  CHECK_THROWS_AS(extender_set(cons, {0, 1, 2}, {3}), precondition_error);
}

TEST_CASE("extend_normal greedy") {
  PairColoring ad = all_distinct_coloring(6);
  Extension ext = extend_normal(ad, {}, {0, 1, 2, 3, 4, 5}, 3);
  CHECK(ext.points == std::vector<Point>{0, 1, 2});
  CHECK(ext.certificate.steps.size() == 3);

  // chi(0,1) = chi(2,3): after X = {0,1,2}, candidate 3 breaks normality
  // (pair (2,3) picks up the color of (0,1) with a different top), so the
  // greedy must skip to 4.
  PairColoring ident = make_coloring(10, 2, {{{0, 1}, {2, 3}}});
  REQUIRE(!is_normal(ident, std::vector<Point>{0, 1, 2, 3}).normal);
  Extension one = extend_normal(ident, {0, 1, 2}, {3, 4, 5, 6, 7, 8, 9}, 1);
  CHECK(one.points == std::vector<Point>{4});
  CHECK(one.certificate.steps[0].examined == 2);

  // seed-fixed random colorings at the guaranteed pool size
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t pool_size = nrm_value(0, 4);
    PairColoring c = random_coloring(pool_size, 2, rng());
    std::vector<Point> pool(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) pool[i] = static_cast<Point>(i);
    Extension got = extend_normal(c, {}, pool, 4);
    CHECK(got.points.size() == 4);
    CHECK(is_normal(c, got.points).normal);
    CHECK(check_step_bounds(got.certificate).ok);
  }
}

TEST_CASE("extend_normal validates preconditions") {
  PairColoring ad = all_distinct_coloring(8);
  CHECK_THROWS_AS(extend_normal(ad, {}, {0, 1}, 3), precondition_error);  // pool too small
  CHECK_THROWS_AS(extend_normal(ad, {4}, {2, 3, 5, 6, 7}, 1), precondition_error);  // below X
  PairColoring ident = make_coloring(6, 2, {{{0, 1}, {2, 3}}});
  CHECK_THROWS_AS(extend_normal(ident, {0, 1, 2, 3}, {4, 5}, 1), precondition_error);
  // best effort runs anyway
  Extension best = extend_normal(ad, {}, {0, 1}, 3, /*best_effort=*/true);
  CHECK(best.points.size() == 2);
}

TEST_CASE("extend_polychromatic") {
  PairColoring ad = all_distinct_coloring(20);
  std::vector<Point> pool(ext_value(0, 3));
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Point>(i);
  Extension got = extend_polychromatic(ad, pool, {}, pool, 3);
  CHECK(got.points == std::vector<Point>{0, 1, 2});
  CHECK(check_step_bounds(got.certificate).ok);

  // a normal subset of the Fraenkel coloring admits a polychromatic triple
  PairColoring fr = fraenkel_coloring(4);
  std::vector<Point> everything(fr.universe_size());
  for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = static_cast<Point>(i);
  std::vector<Point> a =
      extend_normal(fr, {}, everything, everything.size(), /*best_effort=*/true).points;
  std::sort(a.begin(), a.end());
  REQUIRE(a.size() >= 3);
  Extension poly = extend_polychromatic(fr, a, {}, a, 3, /*best_effort=*/true);
  CHECK(poly.points.size() == 3);
  CHECK(classify_subset(fr, poly.points).polychromatic());
}

TEST_CASE("extend_polychromatic validates preconditions") {
  PairColoring ident = make_coloring(8, 2, {{{0, 1}, {2, 3}}});
  // ambient not normal
  CHECK_THROWS_AS(extend_polychromatic(ident, {0, 1, 2, 3}, {}, {0, 1}, 1),
                  precondition_error);
  PairColoring ad = all_distinct_coloring(8);
  // pool not inside ambient
  CHECK_THROWS_AS(extend_polychromatic(ad, {0, 1, 2}, {}, {5}, 1), precondition_error);
  // pool below the guarantee bound
  CHECK_THROWS_AS(extend_polychromatic(ad, {0, 1, 2, 3}, {}, {0, 1, 2, 3}, 3),
                  precondition_error);
}

TEST_CASE("rainbow_extract on the lazy all-distinct view") {
  LazyAllDistinct big(rainbow_extract_required_universe(5));
  RainbowExtraction got = rainbow_extract(big, 5);
  CHECK(got.points == std::vector<Point>{0, 1, 2, 3, 4});
  CHECK(check_step_bounds(got.normal_certificate).ok);
  CHECK(check_step_bounds(got.poly_certificate).ok);
}

TEST_CASE("rainbow_extract reports the required universe") {
  PairColoring small = all_distinct_coloring(10);
  try {
    rainbow_extract(small, 3);
    FAIL("expected precondition_error");
  } catch (const precondition_error& e) {
    CHECK(std::string(e.what()).find(std::to_string(rainbow_extract_required_universe(3))) !=
          std::string::npos);
  }
}

TEST_CASE("rainbow_extract best effort finds a triangle-free triple on the edge graph") {
  PairColoring eg = edge_graph_coloring(5);
  RainbowExtraction got = rainbow_extract(eg, 3, /*best_effort=*/true);
  REQUIRE(got.points.size() >= 3);
  CHECK(classify_subset(eg, got.points).polychromatic());
  // polychromatic edge sets contain no triangle: all three edge pairs of a
  // triangle share one color
  std::vector<std::pair<Point, Point>> edges;
  for (Point e : got.points) edges.push_back(pair_unrank(pair_count(5), e));
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      for (std::size_t k = j + 1; k < edges.size(); ++k) {
        std::set<Point> verts{edges[i].first, edges[i].second, edges[j].first,
                              edges[j].second, edges[k].first, edges[k].second};
        CHECK(verts.size() > 3);
      }
}

TEST_CASE("rainbow_extract randomized guarantee at the mandated size") {
  const std::size_t universe = rainbow_extract_required_universe(3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    PairedShuffleColoring c(universe, seed);
    RainbowExtraction got = rainbow_extract(c, 3);
    CHECK(got.points.size() >= 3);
    CHECK(classify_subset(c, got.points).polychromatic());
    CHECK(check_step_bounds(got.normal_certificate).ok);
    CHECK(check_step_bounds(got.poly_certificate).ok);
  }
}

TEST_CASE("certificates replay deterministically") {
  PairedShuffleColoring c(200, 99);
  RainbowExtraction got = rainbow_extract(c, 2);
  CHECK(replay_certificate(c, got.normal_certificate));
  CHECK(replay_certificate(c, got.poly_certificate));
  // tampered trace fails
  ExtractionCertificate bad = got.normal_certificate;
  if (!bad.steps.empty()) {
    bad.steps.front().examined += 1;
    CHECK(!replay_certificate(c, bad));
  }
  // wrong coloring fails
  PairedShuffleColoring other(200, 100);
  CHECK(!replay_certificate(other, got.normal_certificate));
}

TEST_CASE("pigeonhole_check") {
  PairColoring ad = all_distinct_coloring(10);
  std::vector<Point> everything{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(pigeonhole_check(ad, everything, {0}, {1, 2}).ok);

  // exhaustive over every 2-bounded coloring of [5]^2 and every minimal
  // configuration
  enumerate_edge_partitions(5, 2, false, [&](const EdgePartition& part) {
    PairColoring c = part.to_coloring();
    for (std::uint32_t amask = 0; amask < 32; ++amask) {
      std::vector<Point> a;
      for (unsigned i = 0; i < 5; ++i)
        if (amask >> i & 1) a.push_back(i);
      if (!is_normal(c, a).normal) continue;
      for (std::uint32_t xmask = amask;; xmask = (xmask - 1) & amask) {
        std::vector<Point> xs;
        for (unsigned i = 0; i < 5; ++i)
          if (xmask >> i & 1) xs.push_back(i);
        if (classify_subset(c, xs).polychromatic()) {
          std::vector<Point> ae = extender_set(c, xs, a);
          if (ae.size() >= xs.size() + 1) {
            std::vector<Point> as(ae.begin(), ae.begin() + xs.size() + 1);
            CHECK(pigeonhole_check(c, a, xs, as).ok);
          }
        }
        if (xmask == 0) break;
      }
    }
    return true;
  });
}

TEST_CASE("small extension points stay within the covering bound") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 10 + rng() % 20;
    PairColoring c = random_coloring(n, 2, rng());
    std::vector<Point> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Point>(i);
    std::vector<Point> a = extend_normal(c, {}, pool, n, /*best_effort=*/true).points;
    std::sort(a.begin(), a.end());
    std::vector<Point> xs;
    if (!a.empty()) xs.push_back(a[rng() % a.size()]);
    if (!classify_subset(c, xs).polychromatic()) continue;
    std::vector<Point> ae = extender_set(c, xs, a);
    for (std::uint64_t t = 1; t <= 4; ++t) {
      if (ae.size() < (t + 1) * (xs.size() + 1) + xs.size()) continue;
      CHECK(small_extension_points(c, a, xs, t).size() <= xs.size());
    }
  }
}

TEST_CASE("rich_refine") {
  BoundTables tables(8, 16, 4);
  PairColoring ad = all_distinct_coloring(64);
  std::vector<Point> a(64);
  for (std::size_t i = 0; i < 64; ++i) a[i] = static_cast<Point>(i);

  SUBCASE("window satisfiable: f(n)=2^(n+3)") {
    std::vector<std::uint64_t> f{8, 16, 32, 64, 128};
    RichRefineResult got = rich_refine(ad, a, f, tables, 1, 0, 0, RichMode::Normal);
    CHECK(got.window_index == 0);   // |[0,8)| = 8 >= g(2,0) = 5
    CHECK(got.window_target == 1);  // g(1,0)
    CHECK(got.window_set.size() >= 1);
    CHECK(is_normal(ad, got.window_set).normal);
    // later start point: n=1 needs |[0,16)| = 16 < g(2,1) = 17, n=2 needs
    // 32 < g(2,2) = 65 ... unsatisfiable from 1 on this table
    CHECK_THROWS_AS(rich_refine(ad, a, f, tables, 1, 0, 1, RichMode::Normal),
                    precondition_error);
  }

  SUBCASE("window check is strict: f(n)=2^(n+2) misses g(2,0) by one") {
    std::vector<std::uint64_t> f{4, 8, 16, 32, 64};
    CHECK_THROWS_AS(rich_refine(ad, a, f, tables, 1, 0, 0, RichMode::Normal),
                    precondition_error);
  }

  SUBCASE("normal window then polychromatic refinement on a random coloring") {
    std::mt19937_64 rng(77);
    PairColoring c = random_coloring(64, 2, rng());
    std::vector<std::uint64_t> f{8, 40, 64};
    RichRefineResult normal = rich_refine(c, a, f, tables, 1, 0, 1, RichMode::Normal);
    // n=1: |[0,40)| = 40 >= g(2,1) = 17; extract g(1,1) = 2 normal points
    CHECK(normal.window_index == 1);
    CHECK(normal.window_set.size() >= 2);
    CHECK(is_normal(c, normal.window_set).normal);
    std::uint64_t in_window = 0;
    for (Point p : normal.window_set)
      if (p < f[normal.window_index]) ++in_window;
    CHECK(in_window >= normal.window_target);

    // poly mode on a normal ambient set
    std::vector<Point> pool(64);
    for (std::size_t i = 0; i < 64; ++i) pool[i] = static_cast<Point>(i);
    std::vector<Point> ambient = extend_normal(c, {}, pool, 64, /*best_effort=*/true).points;
    std::sort(ambient.begin(), ambient.end());
    std::vector<std::uint64_t> f2{static_cast<std::uint64_t>(ambient.size() + 1), 1000};
    RichRefineResult poly = rich_refine(c, ambient, f2, tables, 1, 0, 1, RichMode::Polychromatic);
    CHECK(classify_subset(c, poly.window_set).polychromatic());
    CHECK(poly.window_set.size() >= poly.window_target);
  }

  SUBCASE("f must strictly increase") {
    std::vector<std::uint64_t> f{8, 8};
    CHECK_THROWS_AS(rich_refine(ad, a, f, tables, 1, 0, 0, RichMode::Normal),
                    precondition_error);
  }
}

TEST_CASE("step budgets distinguish phases") {
  ExtractionCertificate cert;
  cert.phase = ExtendPhase::Polychromatic;
  cert.start = {1, 2};
  cert.steps = {{5, 5, 10}};  // p = 2, budget 2p+1 = 5
  CHECK(check_step_bounds(cert).ok);
  cert.steps = {{5, 6, 10}};
  CHECK(!check_step_bounds(cert).ok);
  cert.phase = ExtendPhase::Normal;
  cert.steps = {{5, 2, 10}};  // p = 2, budget C(2,2)+1 = 2
  CHECK(check_step_bounds(cert).ok);
  cert.steps = {{5, 3, 10}};
  CHECK(!check_step_bounds(cert).ok);
}
