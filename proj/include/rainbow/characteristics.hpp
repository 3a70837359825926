#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

/// A function table on the window 0..N-1. The flags are recomputed from the
/// table on construction, never trusted from input.
struct FiniteFunction {
  std::vector<std::uint64_t> values;
  std::size_t max_fiber = 0;
  bool strictly_increasing = false;
  bool injective = false;
  bool two_to_one = false;       // every fiber <= 2
  bool finite_to_one = false;    // window shadow: not constant on a window >= 2

  FiniteFunction() = default;
  explicit FiniteFunction(std::vector<std::uint64_t> table);

  std::size_t window() const { return values.size(); }
  std::uint64_t operator()(std::size_t n) const { return values.at(n); }
};

enum class WitnessStatus { Constant, Injective, Neither, Both };

/// Classifies f restricted to X; index sets of size <= 1 are Both.
/// "Eventually constant/injective" questions are asked by passing tails.
WitnessStatus witness_status(const FiniteFunction& f, const std::vector<std::size_t>& xs);

/// Unary Galvin dual for two-to-one f: f*(a) = rank of a inside its fiber
/// (fibers ordered by argument). f* constant 0 on X forces f injective on X.
FiniteFunction unary_dual(const FiniteFunction& f);

/// For strictly increasing f: g with g(x) = n on [f(2n), f(2n+2)) and
/// g(x) = 0 below f(2); finite-to-one. Needs at least f(0..2); the output
/// window is [0, f(2M)) for the largest usable M, capped by output_cap.
FiniteFunction interval_collapse(const FiniteFunction& f, std::size_t output_cap = 1u << 20);

/// {f^0(0), f^1(0), ...}: stops at cap iterates, on leaving the window, or
/// on the first repeated value. Sorted ascending.
std::vector<std::size_t> orbit_sequence(const FiniteFunction& f, std::size_t cap);

struct ThresholdResult {
  FiniteFunction h;       // h_g(n) = 1 + last window position whose value is in g(0..n)
  std::size_t valid_end;  // h trustworthy for n < valid_end (no window-edge recurrence)
};

/// Recurrence threshold: l >= h_g(n) implies g(l) not in {g(0..n)} inside
/// the window; positions whose threshold hits the window edge are beyond
/// the reported valid sub-window.
ThresholdResult hg_threshold(const FiniteFunction& g);

struct IncreasingRefine {
  std::vector<std::size_t> xs;  // greedy leftmost strictly increasing index set
  FiniteFunction g;             // g_f(n) = f(x_n)
  bool fallback_identity = false;
};

/// Greedy increasing refinement; functions constant on the window fall back
/// to the identity, flagged.
IncreasingRefine increasing_refine(const FiniteFunction& f);

/// Set-valued function with an explicit width bound.
struct Slalom {
  std::vector<std::vector<std::uint64_t>> sets;  // each sorted ascending
  std::vector<std::uint64_t> width_bound;        // |sets[n]| <= width_bound[n]

  Slalom() = default;
  Slalom(std::vector<std::vector<std::uint64_t>> s, std::vector<std::uint64_t> bound);
  static Slalom from_sets(std::vector<std::vector<std::uint64_t>> s);

  std::size_t window() const { return sets.size(); }
  bool member(std::size_t n, std::uint64_t v) const;
};

/// psi(n) = phi(0) + ... + phi(n) + {0..n}.
Slalom psi_of(const Slalom& phi);

struct PartnerSlalom {
  std::vector<std::uint64_t> partner;  // h_g: the other preimage, or n itself
  Slalom phi;                          // phi_g(n) = {h_g(0..n)}
};

/// For two-to-one g: the partner slalom phi_g with |phi_g(n)| <= n+1.
PartnerSlalom slalom_of_two_to_one(const FiniteFunction& g);

/// f(n) not in phi(n) for every n >= from inside the shared window.
bool evade_check(const FiniteFunction& f, const Slalom& phi, std::size_t from);

}  // namespace rainbow
