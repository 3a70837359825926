#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

/// Read-only view of a pair coloring. Implementations may materialize the
/// color table (PairColoring) or synthesize colors on demand (the seeded
/// shuffle family in generators.hpp), so extraction can run on universes
/// whose full table would not fit in memory.
class ColoringView {
 public:
  virtual ~ColoringView() = default;
  virtual std::size_t universe_size() const = 0;
  /// Color of the unordered pair {a,b}; a != b, both < universe_size().
  virtual ColorId color(Point a, Point b) const = 0;
  virtual unsigned declared_bound() const = 0;
  /// Stable identifier tying certificates to the coloring they were
  /// produced from; empty when the implementation has none.
  virtual std::string content_tag() const { return {}; }
};

using PairOfPoints = std::pair<Point, Point>;  // normalized a < b

/// A total coloring of all 2-element subsets of {0,...,n-1} together with a
/// declared boundedness certificate: no color may be used more than
/// declared_bound times.
class PairColoring final : public ColoringView {
 public:
  /// colors_by_rank[r] is the color of the pair of lexicographic rank r.
  PairColoring(std::size_t universe_size, unsigned declared_bound,
               std::vector<ColorId> colors_by_rank);

  std::size_t universe_size() const override { return n_; }
  unsigned declared_bound() const override { return declared_bound_; }
  ColorId color(Point a, Point b) const override;
  ColorId color_by_rank(std::uint64_t rank) const { return colors_[rank]; }
  const std::vector<ColorId>& colors_by_rank() const { return colors_; }

  /// Fibers keyed by color; each fiber lists pair ranks in increasing order
  /// (the canonical fiber enumeration: lexicographic by (min,max)).
  const std::map<ColorId, std::vector<std::uint64_t>>& fibers() const {
    return fibers_;
  }

  /// Throws precondition_error if some fiber exceeds declared_bound.
  void validate_bound() const;

  /// Stable content hash used to tie certificates to their coloring.
  std::string content_id() const;
  std::string content_tag() const override { return content_id(); }

 private:
  std::size_t n_;
  unsigned declared_bound_;
  std::vector<ColorId> colors_;
  std::map<ColorId, std::vector<std::uint64_t>> fibers_;
};

PairColoring all_distinct_coloring(std::size_t n);
PairColoring constant_coloring(std::size_t n);

/// Least k such that c is k-bounded (maximum fiber size, 0 for empty).
unsigned bound_of(const PairColoring& c);

/// Galvin's dual: each pair is replaced by its rank inside its color fiber.
struct DualColoring {
  const PairColoring* base;
  std::vector<unsigned> index_by_rank;  // < base->declared_bound()

  /// The dual viewed as a PairColoring (colors = fiber ranks). Its declared
  /// bound is the largest index fiber, which is typically close to the
  /// number of pairs.
  PairColoring as_coloring() const;
};

/// Requires c to actually satisfy its declared bound.
DualColoring galvin_dual(const PairColoring& c);

enum class SubsetVerdict { Polychromatic, Monochromatic, Neither };

struct SubsetStatus {
  SubsetVerdict verdict;
  /// Sets of size <= 2 are reported Polychromatic; when they are also
  /// (vacuously) monochromatic this flag is set.
  bool degenerate_monochromatic = false;
  std::optional<ColorId> mono_color;  // set for Monochromatic
  /// Two distinct pairs with equal colors (refutes polychromatic).
  std::optional<std::pair<PairOfPoints, PairOfPoints>> equal_witness;
  /// Two pairs with different colors (refutes monochromatic).
  std::optional<std::pair<PairOfPoints, PairOfPoints>> diff_witness;

  bool polychromatic() const { return verdict == SubsetVerdict::Polychromatic; }
};

/// Classifies Y: polychromatic iff all pairs inside Y receive pairwise
/// distinct colors, monochromatic iff they all receive one color.
SubsetStatus classify_subset(const ColoringView& c, std::span<const Point> ys);

struct NormalityResult {
  bool normal;
  /// When !normal: two equal-colored pairs whose larger elements differ.
  std::optional<std::pair<PairOfPoints, PairOfPoints>> counterexample;
  explicit operator bool() const { return normal; }
};

/// A is normal when equal-colored pairs inside A share their larger element.
NormalityResult is_normal(const ColoringView& c, std::span<const Point> a);

/// Splits a coloring with maximum fiber size k into C(k,2) colorings, each
/// 2-bounded: output {i,j} identifies the i-th and j-th pair of every fiber
/// (canonical enumeration) and colors everything else distinctly. A set
/// polychromatic for every output is polychromatic for c. Returns an empty
/// list when k < 2.
std::vector<PairColoring> k_bounded_decompose(const PairColoring& c);

}  // namespace rainbow
