#include <cstdio>

#include "doctest.h"
#include "rainbow/extraction.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/nwd.hpp"

using namespace rainbow;

TEST_CASE("coloring interchange round-trip") {
  PairColoring c = fraenkel_coloring(3);
  Json j = coloring_to_json(c);
  CHECK(j["format"] == "pair-coloring");
  CHECK(j["n"] == 6);
  CHECK(j["pairs"].size() == pair_count(6));
  PairColoring back = coloring_from_json(j);
  CHECK(back.colors_by_rank() == c.colors_by_rank());
  CHECK(back.declared_bound() == c.declared_bound());
  CHECK(back.content_id() == c.content_id());
}

TEST_CASE("coloring parser rejects bad documents") {
  Json j = coloring_to_json(all_distinct_coloring(4));

  Json missing = j;
  missing["pairs"].erase(0);
  CHECK_THROWS_AS(coloring_from_json(missing), parse_error);

  Json dup = j;
  dup["pairs"][1] = dup["pairs"][0];
  CHECK_THROWS_AS(coloring_from_json(dup), parse_error);

  Json out_of_range = j;
  out_of_range["pairs"][0] = Json::array({0, 9, 0});
  CHECK_THROWS_AS(coloring_from_json(out_of_range), parse_error);

  Json wrong_format{{"format", "something-else"}};
  CHECK_THROWS_AS(coloring_from_json(wrong_format), parse_error);

  // declared bound violated by the listed fibers
  Json bad_bound = j;
  for (auto& entry : bad_bound["pairs"]) entry[2] = 0;
  bad_bound["k"] = 2;
  CHECK_THROWS_AS(coloring_from_json(bad_bound), precondition_error);
}

TEST_CASE("certificate round-trip preserves replayability") {
  PairColoring c = random_coloring(40, 2, 12345);
  RainbowExtraction got = rainbow_extract(c, 2);
  Json j = certificate_to_json(got.poly_certificate);
  ExtractionCertificate back = certificate_from_json(j);
  CHECK(replay_certificate(c, back));
  CHECK(certificate_to_json(back) == j);
}

TEST_CASE("remaining formats round-trip") {
  FiniteFunction f{{5, 2, 7, 3, 9}};
  CHECK(finite_function_from_json(finite_function_to_json(f)).values == f.values);

  Slalom s = Slalom::from_sets({{4, 1}, {}, {0, 8}});
  Json sj = slalom_to_json(s);
  CHECK(slalom_to_json(slalom_from_json(sj)) == sj);

  SetDescription d = from_brackets("[[][[]]][]");
  CHECK(to_brackets(set_description_from_json(set_description_to_json(d))) == to_brackets(d));

  UnaryColoring u;
  u.items = {{0, 1}, {0}, {1}};
  u.colors = {0, 1, 1};
  Json uj = unary_coloring_to_json(u);
  UnaryColoring ub = unary_coloring_from_json(uj);
  CHECK(ub.items == u.items);
  CHECK(ub.colors == u.colors);
}

TEST_CASE("interval system document shape") {
  NwdColoring nc = nowhere_dense_coloring(dyadic_points(6), 3);
  Json j = interval_system_to_json(nc.system);
  CHECK(j["format"] == "interval-system");
  CHECK(j["points"].size() == 6);
  CHECK(j["c"].size() == 3);
  CHECK(j["levels"].size() == 3);
}

TEST_CASE("file save and load") {
  const std::string path = "io_test_tmp.json";
  Json j = coloring_to_json(all_distinct_coloring(5));
  save_json(path, j);
  CHECK(load_json(path) == j);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_json("does_not_exist.json"), parse_error);
}

TEST_CASE("strip_timing") {
  Json report{{"command", "x"},
              {"results", Json::array({Json{{"value", 1}, {"timing_ms", 9.5}}})},
              {"timing_ms", 17.0}};
  Json stripped = strip_timing(report);
  CHECK(!stripped.contains("timing_ms"));
  CHECK(!stripped["results"][0].contains("timing_ms"));
  CHECK(stripped["results"][0]["value"] == 1);
}
