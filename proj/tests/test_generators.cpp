#include <random>
#include <set>

#include "doctest.h"
#include "rainbow/coloring.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

TEST_CASE("fraenkel_coloring m=2 fiber structure") {
  PairColoring c = fraenkel_coloring(2);
  CHECK(c.universe_size() == 4);
  CHECK(c.declared_bound() == 2);
  // points: 0=a0, 1=b0, 2=a1, 3=b1
  CHECK(c.color(0, 3) == c.color(1, 2));  // {a0,b1} ~ {b0,a1}
  CHECK(c.color(0, 2) == c.color(1, 3));  // {a0,a1} ~ {b0,b1}
  std::set<ColorId> singles{c.color(0, 1), c.color(2, 3)};
  CHECK(singles.size() == 2);
  CHECK(!singles.count(c.color(0, 3)));
  CHECK(!singles.count(c.color(0, 2)));
  CHECK(bound_of(c) == 2);

  SubsetStatus whole = classify_subset(c, std::vector<Point>{0, 1, 2, 3});
  CHECK(whole.verdict == SubsetVerdict::Neither);
}

TEST_CASE("fraenkel law and witness structure") {
  for (std::size_t m = 2; m <= 5; ++m) {
    PairColoring c = fraenkel_coloring(m);
    CHECK(bound_of(c) == 2);
    SearchResult best = max_polychromatic(c);
    CHECK(best.optimum == m + 1);
    // explicit witness from the analysis: {a0, b0, a1, ..., a_{m-1}}
    std::vector<Point> witness{0, 1};
    for (std::size_t i = 1; i < m; ++i) witness.push_back(static_cast<Point>(2 * i));
    CHECK(classify_subset(c, witness).polychromatic());
  }
}

TEST_CASE("edge_graph_coloring base 4") {
  PairColoring c = edge_graph_coloring(4);
  CHECK(c.universe_size() == 6);
  auto e = [](Point a, Point b) { return static_cast<Point>(pair_rank(4, a, b)); };
  // the three perfect matchings share the color {0,1,2,3}
  ColorId m01 = c.color(e(0, 1), e(2, 3));
  CHECK(m01 == c.color(e(0, 2), e(1, 3)));
  CHECK(m01 == c.color(e(0, 3), e(1, 2)));
  // the three edge pairs of the triangle {0,1,2} share {0,1,2}
  ColorId t = c.color(e(0, 1), e(0, 2));
  CHECK(t == c.color(e(0, 1), e(1, 2)));
  CHECK(t == c.color(e(0, 2), e(1, 2)));
  CHECK(t != m01);
  CHECK(bound_of(c) == 3);
  CHECK(c.declared_bound() == 4);
}

TEST_CASE("edge_graph identification across quadruples") {
  for (std::size_t v = 4; v <= 6; ++v) {
    PairColoring c = edge_graph_coloring(v);
    auto e = [&](Point a, Point b) {
      if (a > b) std::swap(a, b);
      return static_cast<Point>(pair_rank(v, a, b));
    };
    for (Point a = 0; a < v; ++a)
      for (Point b = a + 1; b < v; ++b)
        for (Point x = b + 1; x < v; ++x)
          for (Point d = x + 1; d < v; ++d) {
            CHECK(c.color(e(a, b), e(x, d)) == c.color(e(a, d), e(b, x)));
            CHECK(c.color(e(a, b), e(x, d)) == c.color(e(a, x), e(b, d)));
          }
  }
}

TEST_CASE("random_coloring") {
  CHECK(bound_of(random_coloring(8, 1, 3)) == 1);

  PairColoring a = random_coloring(10, 2, 7);
  PairColoring b = random_coloring(10, 2, 7);
  CHECK(a.colors_by_rank() == b.colors_by_rank());
  CHECK(bound_of(a) <= 2);

  PairColoring c = random_coloring(10, 2, 8);
  CHECK(a.colors_by_rank() != c.colors_by_rank());

  PairColoring u = random_coloring(12, 4, 9, FiberSizeMode::UniformRandom);
  CHECK(bound_of(u) <= 4);
}

TEST_CASE("feistel permutation is a bijection") {
  for (std::uint64_t size : {1ull, 2ull, 7ull, 64ull, 1000ull}) {
    FeistelPermutation perm(size, 42);
    std::set<std::uint64_t> image;
    for (std::uint64_t x = 0; x < size; ++x) {
      std::uint64_t y = perm.forward(x);
      CHECK(y < size);
      CHECK(perm.inverse(y) == x);
      image.insert(y);
    }
    CHECK(image.size() == size);
  }
}

TEST_CASE("paired shuffle coloring agrees with its materialization") {
  PairedShuffleColoring lazy(12, 5);
  PairColoring eager = lazy.materialize();
  CHECK(bound_of(eager) <= 2);
  for (Point a = 0; a < 12; ++a)
    for (Point b = a + 1; b < 12; ++b) CHECK(lazy.color(a, b) == eager.color(a, b));
  // determinism across instances
  PairedShuffleColoring again(12, 5);
  CHECK(again.color(3, 7) == lazy.color(3, 7));
}

namespace {

NatSet nats(std::initializer_list<unsigned> xs) { return NatSet(xs); }

}  // namespace

TEST_CASE("orbit_split") {
  SUBCASE("two chains") {
    // x1 -> x2 -> x3 and x4 -> x5
    NatSet x1 = nats({0, 1, 2, 3}), x2 = nats({0, 1, 2}), x3 = nats({0, 1});
    NatSet x4 = nats({1, 2, 3}), x5 = nats({1, 2});
    ShrinkingMap f{{{x1, x2}, {x2, x3}, {x4, x5}}};
    OrbitSplit split = orbit_split(f);
    REQUIRE(split.d_prime.size() == 1);
    CHECK(split.d_prime[0] == x1);
    CHECK(split.f1[0].second == x2);
    CHECK(split.f0[0].second == x3);
  }

  SUBCASE("empty domain") {
    OrbitSplit split = orbit_split(ShrinkingMap{});
    CHECK(split.d_prime.empty());
    CHECK(split.f0.empty());
    CHECK(split.f1.empty());
  }

  SUBCASE("chain of five sets: alternate selection keeps ranges disjoint") {
    std::vector<NatSet> chain;
    for (unsigned len = 5; len >= 1; --len) {
      NatSet s;
      for (unsigned i = 0; i < len; ++i) s.push_back(i);
      chain.push_back(s);
    }
    ShrinkingMap f;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      f.entries.emplace_back(chain[i], chain[i + 1]);
    OrbitSplit split = orbit_split(f);
    REQUIRE(split.d_prime.size() == 2);
    CHECK(split.d_prime[0] == chain[0]);
    CHECK(split.d_prime[1] == chain[2]);
    std::set<NatSet> r0, r1;
    for (const auto& [x, y] : split.f0) r0.insert(y);
    for (const auto& [x, y] : split.f1) r1.insert(y);
    for (const auto& y : r0) CHECK(!r1.count(y));
  }

  SUBCASE("rejects non-shrinking or non-injective maps") {
    CHECK_THROWS_AS(orbit_split(ShrinkingMap{{{nats({0, 1}), nats({2})}}}),
                    precondition_error);
    NatSet big = nats({0, 1, 2}), small = nats({0});
    CHECK_THROWS_AS(orbit_split(ShrinkingMap{{{big, small}, {nats({0, 1}), small}}}),
                    precondition_error);
  }
}

TEST_CASE("ie_coloring") {
  SUBCASE("empty split: all distinct") {
    std::vector<NatSet> family{nats({0}), nats({1}), nats({0, 1})};
    UnaryColoring u = ie_coloring(OrbitSplit{}, family);
    std::set<ColorId> distinct(u.colors.begin(), u.colors.end());
    CHECK(distinct.size() == family.size());
    CHECK(unary_bound_of(u) == 1);
  }

  SUBCASE("two-step chain identifies exactly one pair") {
    NatSet x1 = nats({0, 1, 2, 3}), x2 = nats({0, 1, 2}), x3 = nats({0, 1});
    ShrinkingMap f{{{x1, x2}, {x2, x3}}};
    OrbitSplit split = orbit_split(f);
    std::vector<NatSet> family{x1, x2, x3};
    UnaryColoring u = ie_coloring(split, family);
    CHECK(u.colors[1] == u.colors[2]);  // chi(x2) = chi(x3)
    CHECK(u.colors[0] != u.colors[1]);
    CHECK(unary_bound_of(u) == 2);
  }
}

TEST_CASE("ie witness property over exhaustive chains and random families") {
  // exhaustive chain-length profiles totalling <= 6 sets
  std::vector<std::vector<unsigned>> profiles;
  std::vector<unsigned> acc;
  auto rec = [&](auto&& self, unsigned remaining, unsigned min_len) -> void {
    profiles.push_back(acc);
    for (unsigned len = min_len; len <= remaining; ++len) {
      acc.push_back(len);
      self(self, remaining - len, len);
      acc.pop_back();
    }
  };
  rec(rec, 6, 2);

  for (const auto& profile : profiles) {
    ShrinkingMap f;
    std::vector<NatSet> family;
    unsigned base = 0;
    for (unsigned len : profile) {
      std::vector<NatSet> chain;
      for (unsigned i = 0; i < len; ++i) {
        NatSet s;
        for (unsigned j = 0; j + i < len; ++j) s.push_back(base + j);
        chain.push_back(s);
        family.push_back(s);
      }
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        f.entries.emplace_back(chain[i], chain[i + 1]);
      base += len;
    }
    OrbitSplit split = orbit_split(f);
    UnaryColoring u = ie_coloring(split, family);
    CHECK(unary_bound_of(u) <= 2);
    // the witness property: each x in D' has two distinct equal-colored
    // proper subsets, namely f0(x) and f1(x)
    std::map<NatSet, ColorId> color_of;
    for (std::size_t i = 0; i < family.size(); ++i) color_of[family[i]] = u.colors[i];
    for (std::size_t i = 0; i < split.d_prime.size(); ++i) {
      const NatSet& x = split.d_prime[i];
      const NatSet& lo = split.f0[i].second;
      const NatSet& hi = split.f1[i].second;
      CHECK(lo != hi);
      CHECK(color_of.at(lo) == color_of.at(hi));
      CHECK(std::includes(x.begin(), x.end(), lo.begin(), lo.end()));
      CHECK(std::includes(x.begin(), x.end(), hi.begin(), hi.end()));
      CHECK(lo.size() < x.size());
      CHECK(hi.size() < x.size());
    }
  }
}

TEST_CASE("edge-graph polychromatic sets avoid complete edge triples, v = 6") {
  PairColoring c = edge_graph_coloring(6);
  const std::size_t universe = c.universe_size();  // 15 edges
  REQUIRE(universe == 15);
  // triangles as edge-index triples
  std::vector<std::uint32_t> triangles;
  for (Point a = 0; a < 6; ++a)
    for (Point b = a + 1; b < 6; ++b)
      for (Point x = b + 1; x < 6; ++x)
        triangles.push_back((1u << pair_rank(6, a, b)) | (1u << pair_rank(6, a, x)) |
                            (1u << pair_rank(6, b, x)));
  std::uint64_t poly_count = 0;
  for (std::uint32_t mask = 0; mask < (1u << universe); ++mask) {
    std::vector<Point> y;
    for (unsigned i = 0; i < universe; ++i)
      if (mask >> i & 1) y.push_back(i);
    if (!classify_subset(c, y).polychromatic()) continue;
    ++poly_count;
    for (std::uint32_t t : triangles) CHECK((mask & t) != t);
  }
  CHECK(poly_count > 0);
}
