#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "rainbow/extraction.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/nwd.hpp"
#include "rainbow/search.hpp"
#include "rainbow/tables.hpp"
#include "rainbow/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 internal, 2 parse, 3 precondition, 4 verification
// failure, 5 cap exceeded.
constexpr int kOk = 0, kInternal = 1, kParse = 2, kPrecondition = 3, kVerifyFail = 4,
              kCap = 5;

using rainbow::Json;

void emit(const Json& j, const std::string& output) {
  if (output.empty() || output == "-")
    std::cout << j.dump(2) << "\n";
  else
    rainbow::save_json(output, j);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct GenerateOpts {
  std::string kind;
  std::string output;
  std::size_t m = 3, v = 4, n = 10, points = 16, depth = 8;
  unsigned k = 2;
  std::uint64_t seed = 1;
  std::string fiber_mode = "full";
  std::vector<std::size_t> chains{3, 2};
  std::string aux_output;
};

int cmd_generate(const GenerateOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  Json payload;
  Json aux;
  if (o.kind == "fraenkel") {
    payload = rainbow::coloring_to_json(rainbow::fraenkel_coloring(o.m));
  } else if (o.kind == "edge-graph") {
    payload = rainbow::coloring_to_json(rainbow::edge_graph_coloring(o.v));
  } else if (o.kind == "random") {
    auto mode = o.fiber_mode == "uniform" ? rainbow::FiberSizeMode::UniformRandom
                                          : rainbow::FiberSizeMode::Full;
    payload = rainbow::coloring_to_json(rainbow::random_coloring(o.n, o.k, o.seed, mode));
  } else if (o.kind == "nwd") {
    rainbow::NwdColoring nc =
        rainbow::nowhere_dense_coloring(rainbow::dyadic_points(o.points), o.depth);
    payload = rainbow::coloring_to_json(nc.coloring);
    aux = rainbow::interval_system_to_json(nc.system);
  } else if (o.kind == "ie") {
    // disjoint chains of nested initial segments; chain lengths from --chains
    rainbow::ShrinkingMap f;
    std::vector<rainbow::NatSet> family;
    unsigned base = 0;
    for (std::size_t len : o.chains) {
      std::vector<rainbow::NatSet> chain;
      for (std::size_t i = 0; i < len; ++i) {
        rainbow::NatSet s;
        for (std::size_t j = 0; j + i < len; ++j) s.push_back(base + j);
        chain.push_back(s);
        family.push_back(s);
      }
      for (std::size_t i = 0; i + 1 < len; ++i) f.entries.emplace_back(chain[i], chain[i + 1]);
      base += static_cast<unsigned>(len);
    }
    payload = rainbow::unary_coloring_to_json(
        rainbow::ie_coloring(rainbow::orbit_split(f), family));
  } else {
    throw rainbow::precondition_error("unknown generator kind: " + o.kind);
  }
  emit(payload, o.output);
  if (!aux.is_null()) {
    if (o.aux_output.empty())
      std::cout << aux.dump(2) << "\n";
    else
      rainbow::save_json(o.aux_output, aux);
  }
  (void)t0;
  return kOk;
}

struct ExtractOpts {
  std::string input, output;
  std::size_t target = 3;
  bool best_effort = false;
};

int cmd_extract(const ExtractOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  rainbow::PairColoring c = rainbow::coloring_from_json(rainbow::load_json(o.input));
  rainbow::RainbowExtraction got = rainbow::rainbow_extract(c, o.target, o.best_effort);
  rainbow::SubsetStatus st = rainbow::classify_subset(c, got.points);
  Json report{
      {"command", "extract"},
      {"config", Json{{"input", o.input}, {"target", o.target}}},
      {"results",
       Json::array(
           {Json{{"points", got.points},
                 {"verdict", st.polychromatic() ? "polychromatic" : "not-polychromatic"},
                 {"normal_certificate", rainbow::certificate_to_json(got.normal_certificate)},
                 {"poly_certificate", rainbow::certificate_to_json(got.poly_certificate)}}})},
      {"timing_ms", ms_since(t0)}};
  emit(report, o.output);
  return st.polychromatic() ? kOk : kInternal;
}

struct SearchOpts {
  std::string objective = "max-poly";
  std::string input, output;
  unsigned k = 2;
  std::size_t m = 3;
  std::size_t cap = 8;
  std::size_t universe_cap = 24;
  std::uint64_t progress_every = 0;
  std::vector<std::size_t> sizes{3, 3};
};

int cmd_search(const SearchOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  Json results = Json::array();
  int code = kOk;
  if (o.objective == "max-poly" || o.objective == "max-mono") {
    rainbow::PairColoring c = rainbow::coloring_from_json(rainbow::load_json(o.input));
    rainbow::SearchConfig cfg;
    cfg.universe_cap = o.universe_cap;
    cfg.progress_every = o.progress_every;
    if (o.progress_every)
      cfg.progress = [](const rainbow::SearchProgress& p) {
        std::cerr << "event shard=" << p.shard << " nodes=" << p.nodes
                  << " best=" << p.best << "\n";
      };
    rainbow::SearchResult res = o.objective == "max-poly" ? rainbow::max_polychromatic(c, cfg)
                                                          : rainbow::max_monochromatic(c, cfg);
    results.push_back(rainbow::search_result_to_json(res));
  } else if (o.objective == "rainbow-number") {
    rainbow::RainbowNumberResult res = rainbow::rainbow_number(o.k, o.m, o.cap);
    Json entry{{"k", o.k},
               {"m", o.m},
               {"cap", o.cap},
               {"colorings_checked", res.colorings_checked}};
    if (res.value) entry["value"] = *res.value;
    else {
      entry["value"] = nullptr;
      code = kCap;
    }
    if (res.extremal) entry["extremal"] = rainbow::coloring_to_json(*res.extremal);
    results.push_back(std::move(entry));
  } else if (o.objective == "weak-selecter") {
    rainbow::PairColoring c = rainbow::coloring_from_json(rainbow::load_json(o.input));
    // partition = fibers of the input coloring; X = all pairs
    const std::size_t n = c.universe_size();
    std::vector<std::uint64_t> xset(rainbow::pair_count(n));
    for (std::uint64_t i = 0; i < xset.size(); ++i) xset[i] = i;
    std::vector<std::vector<std::uint64_t>> partition;
    for (const auto& [col, fiber] : c.fibers()) partition.push_back(fiber);
    rainbow::WeakSelecterResult res = rainbow::weak_selecter(n, xset, partition, o.sizes);
    Json stages = Json::array();
    for (const auto& st : res.stages)
      stages.push_back(Json{{"base", st.base}, {"added", st.added}});
    Json entry{{"selected", res.selected}, {"stages", std::move(stages)}};
    if (res.failed_stage) {
      entry["failed_stage"] = *res.failed_stage;
      code = kCap;
    }
    results.push_back(std::move(entry));
  } else {
    throw rainbow::precondition_error("unknown search objective: " + o.objective);
  }
  Json report{{"command", "search"},
              {"config", Json{{"objective", o.objective}}},
              {"results", std::move(results)},
              {"timing_ms", ms_since(t0)}};
  emit(report, o.output);
  return code;
}

struct TablesOpts {
  std::size_t max_p = 10, max_n = 20, max_k = 5;
  std::string table = "all";
  std::string output;  // directory prefix when writing CSV files
  std::string format = "csv";
};

int cmd_tables(const TablesOpts& o) {
  rainbow::BoundTables t(o.max_p, o.max_n, o.max_k);
  std::vector<std::string> names =
      o.table == "all" ? std::vector<std::string>{"nrm", "ext", "lim", "g"}
                       : std::vector<std::string>{o.table};
  for (const std::string& name : names) {
    std::string body = t.csv(name);
    if (o.output.empty() || o.output == "-")
      std::cout << body;
    else
      rainbow::save_text(o.output + "/" + name + ".csv", body);
  }
  return kOk;
}

struct VerifyOpts {
  std::vector<std::string> suites{"all"};
  rainbow::VerifyScale scale;
  std::string output;
};

int cmd_verify(const VerifyOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<rainbow::SuiteResult> suites = rainbow::verify_suites(o.suites, o.scale);
  bool all_pass = true;
  Json results = Json::array();
  for (const rainbow::SuiteResult& s : suites) {
    for (const rainbow::CheckItem& item : s.items) {
      std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << s.suite << ": " << item.name;
      if (!item.detail.empty()) std::cout << " (" << item.detail << ")";
      std::cout << "\n";
      all_pass = all_pass && item.pass;
    }
    Json items = Json::array();
    for (const rainbow::CheckItem& item : s.items)
      items.push_back(Json{{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
    results.push_back(Json{{"suite", s.suite}, {"items", std::move(items)},
                           {"timing_ms", s.seconds * 1000.0}});
  }
  if (!o.output.empty()) {
    Json report{{"command", "verify"},
                {"config", Json{{"suites", o.suites}, {"seed", o.scale.seed}}},
                {"results", std::move(results)},
                {"timing_ms", ms_since(t0)}};
    rainbow::save_json(o.output, report);
  }
  return all_pass ? kOk : kVerifyFail;
}

struct ReportOpts {
  std::string input;     // certificate document
  std::string coloring;  // coloring document it came from
};

int cmd_report(const ReportOpts& o) {
  rainbow::ExtractionCertificate cert =
      rainbow::certificate_from_json(rainbow::load_json(o.input));
  std::cout << "certificate: phase "
            << (cert.phase == rainbow::ExtendPhase::Normal ? "normal" : "polychromatic")
            << ", |start|=" << cert.start.size() << ", |pool|=" << cert.pool.size()
            << ", |output|=" << cert.output.size() << "\n";
  rainbow::StepBoundReport bounds = rainbow::check_step_bounds(cert);
  std::cout << "step budget: " << (bounds.ok ? "within bounds" : "EXCEEDED at step " +
                                                                     std::to_string(bounds.first_bad_step))
            << "\n";
  if (o.coloring.empty()) return bounds.ok ? kOk : kVerifyFail;
  rainbow::PairColoring c = rainbow::coloring_from_json(rainbow::load_json(o.coloring));
  bool replay = rainbow::replay_certificate(c, cert);
  std::cout << "replay: " << (replay ? "reproduces the trace" : "MISMATCH") << "\n";
  return bounds.ok && replay ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite rainbow Ramsey toolkit"};
  app.require_subcommand(1);

  GenerateOpts gen;
  CLI::App* g = app.add_subcommand("generate", "write a coloring document");
  g->add_option("--kind", gen.kind, "fraenkel | edge-graph | nwd | random | ie")->required();
  g->add_option("--m", gen.m, "fraenkel pair count");
  g->add_option("--v", gen.v, "edge-graph base vertices");
  g->add_option("--n", gen.n, "random coloring universe");
  g->add_option("--k", gen.k, "random coloring bound");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--fiber-mode", gen.fiber_mode, "full | uniform");
  g->add_option("--points", gen.points, "nwd point count");
  g->add_option("--depth", gen.depth, "nwd depth");
  g->add_option("--chains", gen.chains, "ie chain lengths");
  g->add_option("--output", gen.output, "output path (default stdout)");
  g->add_option("--aux-output", gen.aux_output, "auxiliary document path (nwd system)");

  ExtractOpts ext;
  CLI::App* e = app.add_subcommand("extract", "guaranteed rainbow extraction");
  e->add_option("--input", ext.input, "coloring document")->required();
  e->add_option("--target", ext.target, "polychromatic set size");
  e->add_flag("--best-effort", ext.best_effort, "run greedily below the guarantee bound");
  e->add_option("--output", ext.output, "report path (default stdout)");

  SearchOpts sea;
  CLI::App* s = app.add_subcommand("search", "exact search oracles");
  s->add_option("--objective", sea.objective,
                "max-poly | max-mono | rainbow-number | weak-selecter");
  s->add_option("--input", sea.input, "coloring document");
  s->add_option("--k", sea.k, "bound for rainbow-number");
  s->add_option("--m", sea.m, "target size");
  s->add_option("--cap", sea.cap, "rainbow-number universe cap");
  s->add_option("--universe-cap", sea.universe_cap, "search universe cap");
  s->add_option("--progress", sea.progress_every, "emit progress events every N nodes");
  s->add_option("--sizes", sea.sizes, "weak-selecter stage sizes");
  s->add_option("--output", sea.output, "report path (default stdout)");

  TablesOpts tab;
  CLI::App* t = app.add_subcommand("tables", "bound table export");
  t->add_option("--max-p", tab.max_p);
  t->add_option("--max-n", tab.max_n);
  t->add_option("--max-k", tab.max_k);
  t->add_option("--table", tab.table, "nrm | ext | lim | g | all");
  t->add_option("--output", tab.output, "directory for CSV files (default stdout)");

  VerifyOpts ver;
  CLI::App* v = app.add_subcommand("verify", "run verification suites");
  v->add_option("--suite", ver.suites, "suite names or 'all'");
  v->add_option("--seed", ver.scale.seed);
  v->add_option("--trials", ver.scale.extract_trials);
  v->add_option("--pipeline-seeds", ver.scale.pipeline_seeds);
  v->add_option("--pigeonhole-trials", ver.scale.pigeonhole_trials);
  v->add_option("--chars-trials", ver.scale.chars_trials);
  v->add_option("--exhaustive-n", ver.scale.exhaustive_max_n);
  v->add_option("--tables-pk", ver.scale.tables_max_pk, "table extent for p and k");
  v->add_option("--tables-n", ver.scale.tables_max_n, "table extent for n");
  v->add_option("--cap", ver.scale.rainbow_cap);
  v->add_option("--data-dir", ver.scale.data_dir, "ground-truth directory to cross-check");
  v->add_option("--output", ver.output, "report path");

  ReportOpts rep;
  CLI::App* rp = app.add_subcommand("report", "inspect and replay a certificate");
  rp->add_option("--input", rep.input, "certificate document")->required();
  rp->add_option("--coloring", rep.coloring, "coloring to replay against");

  try {
    app.parse(argc, argv);
    if (g->parsed()) return cmd_generate(gen);
    if (e->parsed()) return cmd_extract(ext);
    if (s->parsed()) return cmd_search(sea);
    if (t->parsed()) return cmd_tables(tab);
    if (v->parsed()) return cmd_verify(ver);
    if (rp->parsed()) return cmd_report(rep);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  } catch (const rainbow::parse_error& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kParse;
  } catch (const rainbow::cap_exceeded_error& err) {
    std::cerr << "cap exceeded: " << err.what() << "\n";
    return kCap;
  } catch (const rainbow::precondition_error& err) {
    std::cerr << "precondition error: " << err.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kInternal;
  }
  return kOk;
}
