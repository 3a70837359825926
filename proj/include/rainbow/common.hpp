#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rainbow {

using Point = std::uint32_t;
using ColorId = std::uint64_t;

// Error taxonomy. The CLI maps these onto distinct exit codes.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct cap_exceeded_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A guarantee the library itself promises was broken. Loud by design.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

constexpr std::uint64_t pair_count(std::size_t n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Rank of {a,b}, a<b, in the lexicographic order (0,1),(0,2),...,(n-2,n-1).
inline std::uint64_t pair_rank(std::size_t n, Point a, Point b) {
  const std::uint64_t ua = a, ub = b, un = n;
  return ua * un - ua * (ua + 1) / 2 + (ub - ua - 1);
}

inline std::pair<Point, Point> pair_unrank(std::size_t n, std::uint64_t rank) {
  // row a holds n-1-a pairs
  Point a = 0;
  std::uint64_t row = n - 1;
  while (rank >= row) {
    rank -= row;
    --row;
    ++a;
  }
  return {a, static_cast<Point>(a + 1 + rank)};
}

}  // namespace rainbow
