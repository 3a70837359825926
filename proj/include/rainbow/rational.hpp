#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

// Exact arithmetic: the interval constructions repeatedly subdivide, so
// denominators grow past any fixed-width budget.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string rational_to_string(const Rational& q);    // "num/den"
Rational rational_from_string(const std::string& s);  // throws parse_error

/// Open interval (lo, hi) with rational endpoints, lo < hi.
struct Interval {
  Rational lo, hi;

  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw precondition_error("interval endpoints must satisfy lo < hi");
  }
  bool contains(const Rational& q) const { return lo < q && q < hi; }
  bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool intersects(const Interval& o) const {
    return std::max(lo, o.lo) < std::min(hi, o.hi);
  }
  Rational width() const { return hi - lo; }
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Canonical enumeration of the open intervals with dyadic endpoints inside
/// (0,1): by increasing denominator level, then lexicographically by
/// endpoints; an interval appears at the first level showing both its
/// endpoints.
std::vector<Interval> dyadic_intervals(std::size_t count);

/// Canonical enumeration of the dyadic rationals in (0,1): by level, then by
/// numerator (1/2, 1/4, 3/4, 1/8, 3/8, ...).
std::vector<Rational> dyadic_points(std::size_t count);

}  // namespace rainbow
