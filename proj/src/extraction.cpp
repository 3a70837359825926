#include "rainbow/extraction.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace rainbow {
namespace {

std::vector<Point> sorted_unique(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_in_range(const ColoringView& c, const std::vector<Point>& v, const char* what) {
  for (Point p : v)
    if (p >= c.universe_size())
      throw precondition_error(std::string(what) + ": point " + std::to_string(p) +
                               " outside universe");
}

std::unordered_set<ColorId> inner_colors(const ColoringView& c, const std::vector<Point>& s) {
  std::unordered_set<ColorId> used;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) used.insert(c.color(s[i], s[j]));
  return used;
}

// w extends the polychromatic set s (whose inner pair colors are `used`).
bool extends_polychromatic(const ColoringView& c, const std::vector<Point>& s,
                           const std::unordered_set<ColorId>& used, Point w) {
  std::unordered_set<ColorId> fresh;
  fresh.reserve(s.size() * 2);
  for (Point v : s) {
    if (v == w) return false;
    ColorId col = c.color(v, w);
    if (used.count(col) || !fresh.insert(col).second) return false;
  }
  return true;
}

// Greedy cores, shared with certificate replay.

Extension normal_core(const ColoringView& c, const std::vector<Point>& xs,
                      const std::vector<Point>& pool, std::size_t target) {
  Extension ext;
  ext.certificate = {c.content_tag(), ExtendPhase::Normal, false, xs, pool, {}, {}};

  std::vector<Point> current = xs;
  std::unordered_set<ColorId> used = inner_colors(c, current);
  std::size_t cursor = 0;

  while (ext.points.size() < target) {
    std::uint32_t examined = 0;
    std::optional<Point> chosen;
    // Failed candidates stay failed (normality only gets harder as the set
    // grows), so the cursor never moves backwards.
    while (cursor < pool.size()) {
      Point z = pool[cursor++];
      ++examined;
      bool ok = true;
      for (Point x : current)
        if (used.count(c.color(x, z))) { ok = false; break; }
      if (ok) { chosen = z; break; }
    }
    if (!chosen) break;
    for (Point x : current) used.insert(c.color(x, *chosen));
    current.push_back(*chosen);
    ext.points.push_back(*chosen);
    ext.certificate.output.push_back(*chosen);
    ext.certificate.steps.push_back(
        {*chosen, examined, static_cast<std::uint64_t>(pool.size() - cursor)});
  }
  return ext;
}

Extension poly_core(const ColoringView& c, const std::vector<Point>& xs,
                    const std::vector<Point>& pool, std::size_t target, bool greedy) {
  Extension ext;
  ext.certificate = {c.content_tag(), ExtendPhase::Polychromatic, greedy, xs, pool, {}, {}};

  std::vector<Point> current = xs;
  std::unordered_set<ColorId> used = inner_colors(c, current);
  std::vector<Point> live = pool;

  while (ext.points.size() < target) {
    const std::size_t remaining = target - ext.points.size();
    const std::uint64_t need =
        (!greedy && remaining >= 2) ? ext_value(current.size() + 1, remaining - 1) : 0;

    std::uint32_t examined = 0;
    bool stepped = false;
    for (std::size_t i = 0; i < live.size() && !stepped; ++i) {
      Point z = live[i];
      ++examined;
      // Pool after adopting z: live points that still extend current + z.
      std::vector<Point> with_z = current;
      with_z.push_back(z);
      std::unordered_set<ColorId> used_z = used;
      for (Point x : current) used_z.insert(c.color(x, z));
      std::vector<Point> next_pool;
      next_pool.reserve(live.size());
      for (Point w : live)
        if (w != z && extends_polychromatic(c, with_z, used_z, w)) next_pool.push_back(w);
      if (next_pool.size() < need) continue;

      current = std::move(with_z);
      used = std::move(used_z);
      live = std::move(next_pool);
      ext.points.push_back(z);
      ext.certificate.output.push_back(z);
      ext.certificate.steps.push_back({z, examined, live.size()});
      stepped = true;
    }
    if (!stepped) {
      if (greedy || ext.points.size() + live.size() < target) break;
      throw internal_error(
          "polychromatic extension guarantee violated: no admissible candidate at step " +
          std::to_string(ext.points.size()) + " with pool " + std::to_string(live.size()));
    }
  }
  return ext;
}

}  // namespace

std::vector<Point> extender_set(const ColoringView& c, const std::vector<Point>& xs,
                                const std::vector<Point>& pool) {
  check_in_range(c, xs, "extender_set");
  check_in_range(c, pool, "extender_set");
  if (!classify_subset(c, xs).polychromatic())
    throw precondition_error("extender_set: X is not polychromatic");

  std::unordered_set<ColorId> used = inner_colors(c, xs);
  std::vector<Point> out;
  for (Point a : sorted_unique(pool)) {
    if (std::find(xs.begin(), xs.end(), a) != xs.end()) continue;
    if (extends_polychromatic(c, xs, used, a)) out.push_back(a);
  }
  return out;
}

Extension extend_normal(const ColoringView& c, const std::vector<Point>& xs,
                        const std::vector<Point>& pool, std::size_t target,
                        bool best_effort) {
  check_in_range(c, xs, "extend_normal");
  check_in_range(c, pool, "extend_normal");
  if (!is_normal(c, xs).normal)
    throw precondition_error("extend_normal: X is not normal");

  std::vector<Point> z = sorted_unique(pool);
  if (!xs.empty()) {
    Point mx = *std::max_element(xs.begin(), xs.end());
    if (!z.empty() && z.front() <= mx)
      throw precondition_error("extend_normal: pool must lie strictly above X");
  }
  const std::uint64_t bound = nrm_value(xs.size(), target);
  if (z.size() < bound && !best_effort)
    throw precondition_error("extend_normal: pool size " + std::to_string(z.size()) +
                             " below nrm(" + std::to_string(xs.size()) + "," +
                             std::to_string(target) + ") = " + std::to_string(bound));

  Extension ext = normal_core(c, xs, z, target);
  ext.certificate.greedy = best_effort;
  if (ext.points.size() < target && !best_effort)
    throw internal_error("normal extension guarantee violated: got " +
                         std::to_string(ext.points.size()) + " of " + std::to_string(target));
  return ext;
}

Extension extend_polychromatic(const ColoringView& c, const std::vector<Point>& ambient,
                               const std::vector<Point>& xs, const std::vector<Point>& pool,
                               std::size_t target, bool best_effort) {
  check_in_range(c, ambient, "extend_polychromatic");
  std::vector<Point> a = sorted_unique(ambient);
  if (!is_normal(c, a).normal)
    throw precondition_error("extend_polychromatic: ambient set is not normal");
  std::vector<Point> xs_sorted = sorted_unique(xs);
  if (!std::includes(a.begin(), a.end(), xs_sorted.begin(), xs_sorted.end()))
    throw precondition_error("extend_polychromatic: X must be a subset of the ambient set");
  if (!classify_subset(c, xs).polychromatic())
    throw precondition_error("extend_polychromatic: X is not polychromatic");

  std::vector<Point> z = sorted_unique(pool);
  if (!std::includes(a.begin(), a.end(), z.begin(), z.end()))
    throw precondition_error("extend_polychromatic: pool must be a subset of the ambient set");
  std::unordered_set<ColorId> used = inner_colors(c, xs);
  for (Point w : z) {
    if (std::find(xs.begin(), xs.end(), w) != xs.end())
      throw precondition_error("extend_polychromatic: pool meets X");
    if (!extends_polychromatic(c, xs, used, w))
      throw precondition_error("extend_polychromatic: pool point " + std::to_string(w) +
                               " is not in E(X)");
  }
  if (!best_effort) {
    const std::uint64_t bound = ext_value(xs.size(), target);
    if (z.size() < bound)
      throw precondition_error("extend_polychromatic: pool size " + std::to_string(z.size()) +
                               " below ext(" + std::to_string(xs.size()) + "," +
                               std::to_string(target) + ") = " + std::to_string(bound));
  }
  return poly_core(c, xs, z, target, best_effort);
}

std::uint64_t rainbow_extract_required_universe(std::size_t target) {
  return nrm_value(0, ext_value(0, target));
}

RainbowExtraction rainbow_extract(const ColoringView& c, std::size_t target,
                                  bool best_effort) {
  std::uint64_t normal_target = ext_value(0, target);
  if (best_effort) {
    normal_target = std::min<std::uint64_t>(normal_target, c.universe_size());
  } else {
    const std::uint64_t required = nrm_value(0, normal_target);
    if (c.universe_size() < required)
      throw precondition_error("rainbow_extract: universe size " +
                               std::to_string(c.universe_size()) + " below required " +
                               std::to_string(required) + " for target " +
                               std::to_string(target));
  }

  std::vector<Point> everything(c.universe_size());
  for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = static_cast<Point>(i);

  Extension normal = extend_normal(c, {}, everything, normal_target, best_effort);
  std::vector<Point> a = sorted_unique(normal.points);
  Extension poly = poly_core(c, {}, a, target, best_effort);
  if (poly.points.size() < target && !best_effort)
    throw internal_error("rainbow_extract: polychromatic phase fell short");
  return {poly.points, std::move(normal.certificate), std::move(poly.certificate)};
}

PigeonholeResult pigeonhole_check(const ColoringView& c, const std::vector<Point>& ambient,
                                  const std::vector<Point>& xs,
                                  const std::vector<Point>& as) {
  std::vector<Point> a = sorted_unique(ambient);
  if (!is_normal(c, a).normal)
    throw precondition_error("pigeonhole_check: ambient set is not normal");
  if (as.size() < xs.size() + 1)
    throw precondition_error("pigeonhole_check: need |X|+1 extension points");
  std::vector<Point> ae = extender_set(c, xs, a);
  for (Point ai : as)
    if (!std::binary_search(ae.begin(), ae.end(), ai))
      throw precondition_error("pigeonhole_check: a_i not in A /\\ E(X)");

  const Point top = *std::max_element(as.begin(), as.end());
  for (Point z : ae) {
    if (z <= top) continue;
    bool covered = false;
    for (Point ai : as) {
      std::vector<Point> probe = xs;
      probe.push_back(ai);
      probe.push_back(z);
      if (classify_subset(c, probe).polychromatic()) { covered = true; break; }
    }
    if (!covered) return {false, z};
  }
  return {true, std::nullopt};
}

std::vector<Point> small_extension_points(const ColoringView& c,
                                          const std::vector<Point>& ambient,
                                          const std::vector<Point>& xs, std::uint64_t t) {
  std::vector<Point> a = sorted_unique(ambient);
  std::vector<Point> ae = extender_set(c, xs, a);
  std::vector<Point> out;
  for (Point cand : ae) {
    std::vector<Point> xplus = xs;
    xplus.push_back(cand);
    if (extender_set(c, xplus, a).size() < t) out.push_back(cand);
  }
  return out;
}

RichRefineResult rich_refine(const ColoringView& c, const std::vector<Point>& ambient,
                             const std::vector<std::uint64_t>& f, const BoundTables& tables,
                             std::size_t k, std::uint64_t l, std::size_t from_n,
                             RichMode mode) {
  if (k < 1) throw precondition_error("rich_refine: k must be >= 1");
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i] >= f[i + 1]) throw precondition_error("rich_refine: f must be strictly increasing");
  std::vector<Point> a = sorted_unique(ambient);
  check_in_range(c, a, "rich_refine");

  std::ostringstream checked;
  for (std::size_t n = from_n; n < f.size(); ++n) {
    std::vector<Point> window;
    for (Point p : a)
      if (p >= l && p < f[n]) window.push_back(p);

    TableCell threshold = tables.g(k + 1, n);
    if (threshold.overflow || window.size() < threshold.value) {
      checked << " (n=" << n << ", window=" << window.size() << ", need="
              << (threshold.overflow ? std::string("overflow") : std::to_string(threshold.value))
              << ")";
      continue;
    }

    const std::uint64_t target = tables.g_at(k, n);
    Extension got = mode == RichMode::Normal
                        ? extend_normal(c, {}, window, target)
                        : extend_polychromatic(c, a, {}, window, target);
    return {sorted_unique(got.points), mode, n, target, std::move(got.certificate)};
  }
  throw precondition_error("rich_refine: window-unsatisfiable; checked" +
                           (checked.str().empty() ? std::string(" nothing") : checked.str()));
}

bool replay_certificate(const ColoringView& c, const ExtractionCertificate& cert) {
  if (!cert.coloring_id.empty() && !c.content_tag().empty() &&
      cert.coloring_id != c.content_tag())
    return false;
  Extension redo;
  try {
    redo = cert.phase == ExtendPhase::Normal
               ? normal_core(c, cert.start, cert.pool, cert.output.size())
               : poly_core(c, cert.start, cert.pool, cert.output.size(), cert.greedy);
  } catch (const std::exception&) {
    return false;
  }
  if (redo.points != cert.output) return false;
  if (redo.certificate.steps.size() != cert.steps.size()) return false;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep &x = redo.certificate.steps[i], &y = cert.steps[i];
    if (x.chosen != y.chosen || x.examined != y.examined || x.pool_after != y.pool_after)
      return false;
  }
  return true;
}

StepBoundReport check_step_bounds(const ExtractionCertificate& cert) {
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const std::uint64_t p = cert.start.size() + i;
    const std::uint64_t budget =
        cert.phase == ExtendPhase::Normal ? (p < 2 ? 0 : p * (p - 1) / 2) + 1 : 2 * p + 1;
    if (cert.steps[i].examined > budget) return {false, i};
  }
  return {true, 0};
}

}  // namespace rainbow
