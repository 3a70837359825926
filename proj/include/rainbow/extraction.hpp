#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/tables.hpp"

namespace rainbow {

/// Extender set E(X): the points of pool \ X whose addition keeps X
/// polychromatic. X must itself be polychromatic.
std::vector<Point> extender_set(const ColoringView& c, const std::vector<Point>& xs,
                                const std::vector<Point>& pool);

struct CertificateStep {
  Point chosen;
  std::uint32_t examined;    // candidates inspected at this step, chosen one included
  std::uint64_t pool_after;  // surviving pool size once the step is done
};

enum class ExtendPhase { Normal, Polychromatic };

/// Records enough of a greedy extension run to replay it deterministically.
struct ExtractionCertificate {
  std::string coloring_id;
  ExtendPhase phase = ExtendPhase::Normal;
  /// Best-effort runs take the first extending candidate instead of
  /// insisting on the bound-mandated surviving pool; replay needs to know.
  bool greedy = false;
  std::vector<Point> start;  // X
  std::vector<Point> pool;   // Z, ascending
  std::vector<Point> output; // Y, in chosen order
  std::vector<CertificateStep> steps;
};

struct Extension {
  std::vector<Point> points;  // Y
  ExtractionCertificate certificate;
};

/// Greedy normal extension: X normal, Z strictly above X. Picks, repeatedly,
/// the least z of the surviving pool with X + picked + z normal. With
/// |Z| >= nrm(|X|, target) each step succeeds within the first C(p,2)+1
/// candidates (p = current set size) for 2-bounded colorings. When the pool
/// is below the bound the call fails unless best_effort is set, in which
/// case the search runs anyway and may return fewer than target points.
Extension extend_normal(const ColoringView& c, const std::vector<Point>& xs,
                        const std::vector<Point>& pool, std::size_t target,
                        bool best_effort = false);

/// Greedy polychromatic extension inside a normal set A: X polychromatic,
/// Z a subset of A and of E(X) with |Z| >= ext(|X|, target). Each chosen
/// point lies among the first 2p+1 members of the surviving pool, and after
/// choosing z the pool becomes pool-intersect-E(X + picked + z). Without
/// the pool bound the guarantee is void; best_effort runs the plain greedy
/// anyway and may return fewer than target points.
Extension extend_polychromatic(const ColoringView& c, const std::vector<Point>& ambient,
                               const std::vector<Point>& xs, const std::vector<Point>& pool,
                               std::size_t target, bool best_effort = false);

struct RainbowExtraction {
  std::vector<Point> points;
  ExtractionCertificate normal_certificate;
  ExtractionCertificate poly_certificate;
};

/// Guaranteed rainbow extraction for 2-bounded colorings: builds a normal
/// set of size ext(0,target) from the whole universe, then extracts a
/// polychromatic set of size target from it. Requires
/// universe >= nrm(0, ext(0,target)); best_effort drops the requirement and
/// runs both phases greedily on whatever is available.
RainbowExtraction rainbow_extract(const ColoringView& c, std::size_t target,
                                  bool best_effort = false);

/// Least universe size at which rainbow_extract(target) is guaranteed.
std::uint64_t rainbow_extract_required_universe(std::size_t target);

struct PigeonholeResult {
  bool ok;
  std::optional<Point> violator;  // a z above a_n in no E(X + a_i)
  explicit operator bool() const { return ok; }
};

/// Refutation harness for the extender covering property: with A normal, X in A
/// polychromatic, |X| <= n and a_0 < ... < a_n in A-intersect-E(X), every
/// z > a_n of A-intersect-E(X) must lie in some E(X + a_i).
PigeonholeResult pigeonhole_check(const ColoringView& c, const std::vector<Point>& ambient,
                                  const std::vector<Point>& xs,
                                  const std::vector<Point>& as);

/// The extenders whose one-point extension leaves fewer than t usable
/// points: {a in A-intersect-E(X) : |A-intersect-E(X+a)| < t}. Instantiating
/// the ideal as "size < t", this set has size at most |X| whenever
/// |A-intersect-E(X)| >= (t+1)(|X|+1)+|X|.
std::vector<Point> small_extension_points(const ColoringView& c,
                                          const std::vector<Point>& ambient,
                                          const std::vector<Point>& xs, std::uint64_t t);

enum class RichMode { Normal, Polychromatic };

struct RichRefineResult {
  std::vector<Point> window_set;  // B
  RichMode mode;
  std::size_t window_index;       // the qualifying n
  std::uint64_t window_target;    // g(k, n); |B| >= this
  ExtractionCertificate certificate;
};

/// Windowed richness refinement. Scans n = from_n, ..., |f|-1 for a window
/// with |[l, f(n)) /\ A| >= g(k+1, n); on the first hit extracts B inside
/// the window with |B| >= g(k,n), normal (mode Normal) or polychromatic
/// given normal A (mode Polychromatic). Throws a precondition_error listing
/// the checked windows when none qualifies.
RichRefineResult rich_refine(const ColoringView& c, const std::vector<Point>& ambient,
                             const std::vector<std::uint64_t>& f, const BoundTables& tables,
                             std::size_t k, std::uint64_t l, std::size_t from_n,
                             RichMode mode);

/// Re-runs the greedy recorded in cert against c and compares the trace.
bool replay_certificate(const ColoringView& c, const ExtractionCertificate& cert);

struct StepBoundReport {
  bool ok;
  std::size_t first_bad_step = 0;
  explicit operator bool() const { return ok; }
};

/// Checks the per-step candidate budget: C(p,2)+1 for normal steps, 2p+1
/// for polychromatic ones, with p the set size entering the step.
StepBoundReport check_step_bounds(const ExtractionCertificate& cert);

}  // namespace rainbow
