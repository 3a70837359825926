#include "rainbow/io.hpp"

#include <fstream>

namespace rainbow {
namespace {

void expect_format(const Json& j, const std::string& want) {
  if (!j.is_object() || j.value("format", "") != want)
    throw parse_error("expected a \"" + want + "\" document");
}

Json interval_to_json(const Interval& iv) {
  return Json::array({rational_to_string(iv.lo), rational_to_string(iv.hi)});
}

}  // namespace

Json coloring_to_json(const PairColoring& c) {
  Json pairs = Json::array();
  const std::size_t n = c.universe_size();
  for (std::uint64_t r = 0; r < pair_count(n); ++r) {
    auto [a, b] = pair_unrank(n, r);
    pairs.push_back(Json::array({a, b, c.color_by_rank(r)}));
  }
  return Json{{"format", "pair-coloring"},
              {"n", n},
              {"k", c.declared_bound()},
              {"pairs", std::move(pairs)}};
}

PairColoring coloring_from_json(const Json& j) {
  expect_format(j, "pair-coloring");
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    const unsigned k = j.at("k").get<unsigned>();
    std::vector<ColorId> cols(pair_count(n));
    std::vector<bool> seen(cols.size(), false);
    for (const Json& entry : j.at("pairs")) {
      if (!entry.is_array() || entry.size() != 3) throw parse_error("pair entry must be [a,b,color]");
      Point a = entry[0].get<Point>(), b = entry[1].get<Point>();
      if (a > b) std::swap(a, b);
      if (a == b || b >= n) throw parse_error("pair entry out of range");
      std::uint64_t r = pair_rank(n, a, b);
      if (seen[r]) throw parse_error("pair listed twice");
      seen[r] = true;
      cols[r] = entry[2].get<ColorId>();
    }
    for (std::size_t r = 0; r < seen.size(); ++r)
      if (!seen[r]) {
        auto [a, b] = pair_unrank(n, r);
        throw parse_error("pair {" + std::to_string(a) + "," + std::to_string(b) + "} omitted");
      }
    PairColoring c(n, k, std::move(cols));
    c.validate_bound();
    return c;
  } catch (const Json::exception& e) {
    throw parse_error(std::string("malformed coloring document: ") + e.what());
  }
}

Json certificate_to_json(const ExtractionCertificate& cert) {
  Json steps = Json::array();
  for (const CertificateStep& s : cert.steps)
    steps.push_back(Json{{"chosen", s.chosen}, {"examined", s.examined},
                         {"pool_after", s.pool_after}});
  return Json{{"format", "extraction-certificate"},
              {"coloring", cert.coloring_id},
              {"phase", cert.phase == ExtendPhase::Normal ? "normal" : "polychromatic"},
              {"greedy", cert.greedy},
              {"start", cert.start},
              {"pool", cert.pool},
              {"output", cert.output},
              {"steps", std::move(steps)}};
}

ExtractionCertificate certificate_from_json(const Json& j) {
  expect_format(j, "extraction-certificate");
  try {
    ExtractionCertificate cert;
    cert.coloring_id = j.at("coloring").get<std::string>();
    const std::string phase = j.at("phase").get<std::string>();
    if (phase == "normal") cert.phase = ExtendPhase::Normal;
    else if (phase == "polychromatic") cert.phase = ExtendPhase::Polychromatic;
    else throw parse_error("unknown certificate phase: " + phase);
    cert.greedy = j.value("greedy", false);
    cert.start = j.at("start").get<std::vector<Point>>();
    cert.pool = j.at("pool").get<std::vector<Point>>();
    cert.output = j.at("output").get<std::vector<Point>>();
    for (const Json& s : j.at("steps"))
      cert.steps.push_back({s.at("chosen").get<Point>(), s.at("examined").get<std::uint32_t>(),
                            s.at("pool_after").get<std::uint64_t>()});
    return cert;
  } catch (const Json::exception& e) {
    throw parse_error(std::string("malformed certificate document: ") + e.what());
  }
}

Json interval_system_to_json(const IntervalSystem& sys) {
  Json points = Json::array();
  for (const Rational& q : sys.points) points.push_back(rational_to_string(q));
  Json cs = Json::array();
  for (const Interval& iv : sys.c) cs.push_back(interval_to_json(iv));
  Json levels = Json::array();
  for (const auto& level : sys.levels) {
    Json chain = Json::array();
    for (const Interval& iv : level.a_chain) chain.push_back(interval_to_json(iv));
    Json blocks = Json::array();
    for (const auto& [pq, iv] : level.blocks)
      blocks.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"interval", interval_to_json(iv)}});
    levels.push_back(Json{{"a_chain", std::move(chain)},
                          {"removed", level.removed},
                          {"b", std::move(blocks)}});
  }
  return Json{{"format", "interval-system"},
              {"points", std::move(points)},
              {"c", std::move(cs)},
              {"levels", std::move(levels)}};
}

Json unary_coloring_to_json(const UnaryColoring& u) {
  Json items = Json::array();
  for (const NatSet& s : u.items) items.push_back(s);
  return Json{{"format", "unary-coloring"},
              {"k", u.declared_bound},
              {"items", std::move(items)},
              {"colors", u.colors}};
}

UnaryColoring unary_coloring_from_json(const Json& j) {
  expect_format(j, "unary-coloring");
  try {
    UnaryColoring u;
    u.declared_bound = j.at("k").get<unsigned>();
    for (const Json& s : j.at("items")) u.items.push_back(s.get<NatSet>());
    u.colors = j.at("colors").get<std::vector<ColorId>>();
    if (u.colors.size() != u.items.size())
      throw parse_error("unary coloring: one color per item required");
    return u;
  } catch (const Json::exception& e) {
    throw parse_error(std::string("malformed unary coloring: ") + e.what());
  }
}

Json finite_function_to_json(const FiniteFunction& f) {
  return Json{{"format", "finite-function"}, {"values", f.values}};
}

FiniteFunction finite_function_from_json(const Json& j) {
  expect_format(j, "finite-function");
  try {
    return FiniteFunction(j.at("values").get<std::vector<std::uint64_t>>());
  } catch (const Json::exception& e) {
    throw parse_error(std::string("malformed finite function: ") + e.what());
  }
}

Json slalom_to_json(const Slalom& s) {
  return Json{{"format", "slalom"}, {"sets", s.sets}, {"width_bound", s.width_bound}};
}

Slalom slalom_from_json(const Json& j) {
  expect_format(j, "slalom");
  try {
    return Slalom(j.at("sets").get<std::vector<std::vector<std::uint64_t>>>(),
                  j.at("width_bound").get<std::vector<std::uint64_t>>());
  } catch (const Json::exception& e) {
    throw parse_error(std::string("malformed slalom: ") + e.what());
  }
}

Json set_description_to_json(const SetDescription& d) {
  return Json{{"format", "set-description"}, {"term", to_brackets(d)}};
}

SetDescription set_description_from_json(const Json& j) {
  expect_format(j, "set-description");
  try {
    return from_brackets(j.at("term").get<std::string>());
  } catch (const Json::exception& e) {
    throw parse_error(std::string("malformed set description: ") + e.what());
  }
}

Json search_result_to_json(const SearchResult& r) {
  return Json{{"optimum", r.optimum},
              {"witness", r.witness},
              {"nodes_explored", r.nodes_explored},
              {"exhaustive", r.exhaustive}};
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw parse_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
}

void save_text(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw parse_error("cannot open for writing: " + path);
  out << body;
}

Json strip_timing(Json report) {
  report.erase("timing_ms");
  if (report.contains("results"))
    for (Json& item : report["results"])
      if (item.is_object()) item.erase("timing_ms");
  return report;
}

}  // namespace rainbow
