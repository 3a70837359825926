#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

/// One table entry: an exact 64-bit value, or an explicit overflow marker.
/// The recursions grow factorially (ext) and as iterated-factorial towers
/// (g), so overflow cells are expected at the standard table extents and are
/// reported, never silently wrapped.
struct TableCell {
  std::uint64_t value = 0;
  bool overflow = false;

  bool ok() const { return !overflow; }
};

struct table_overflow_error : cap_exceeded_error {
  using cap_exceeded_error::cap_exceeded_error;
};

// On-demand cell evaluation; used both by the table builder and by the
// extraction preconditions, which need single values at arguments far
// outside any reasonable table extent.

/// nrm(p,0) = 0, nrm(p,n+1) = nrm(p,n) + C(p+n,2) + 1.
/// Evaluated via the closed form nrm(p,n) = n + C(p+n,3) - C(p,3).
TableCell nrm_cell(std::uint64_t p, std::uint64_t n);

/// ext(p,0) = 0, ext(p,n+1) = (p+1)*ext(p+1,n) + 2p + 2.
TableCell ext_cell(std::uint64_t p, std::uint64_t n);

/// lim(0,n) = n, lim(k+1,n) = n + 1 + lim(k,n+1).
/// Closed form: (k+1)n + k(k+3)/2.
TableCell lim_cell(std::uint64_t k, std::uint64_t n);

/// g(1,n) = n+1, g(k+1,n) = max(ext(k,g(k,n)), nrm(k,g(k,n)), 2*g(k,n)) + 1.
/// Defined for k >= 1.
TableCell g_cell(std::uint64_t k, std::uint64_t n);

/// Throwing accessors for call sites that need the value.
std::uint64_t nrm_value(std::uint64_t p, std::uint64_t n);
std::uint64_t ext_value(std::uint64_t p, std::uint64_t n);

/// The four recursions materialized over rectangular extents.
class BoundTables {
 public:
  /// nrm and ext are indexed (p,n) for p <= max_p, n <= max_n; lim and g are
  /// indexed (k,n) for k <= max_k (g from k = 1), n <= max_n.
  BoundTables(std::size_t max_p, std::size_t max_n, std::size_t max_k);

  std::size_t max_p() const { return max_p_; }
  std::size_t max_n() const { return max_n_; }
  std::size_t max_k() const { return max_k_; }

  TableCell nrm(std::size_t p, std::size_t n) const;
  TableCell ext(std::size_t p, std::size_t n) const;
  TableCell lim(std::size_t k, std::size_t n) const;
  TableCell g(std::size_t k, std::size_t n) const;  // k >= 1

  /// Value accessors; throw table_overflow_error naming the cell.
  std::uint64_t nrm_at(std::size_t p, std::size_t n) const;
  std::uint64_t ext_at(std::size_t p, std::size_t n) const;
  std::uint64_t lim_at(std::size_t k, std::size_t n) const;
  std::uint64_t g_at(std::size_t k, std::size_t n) const;

  /// CSV matrix (rows p or k, columns n); overflow cells render as
  /// "overflow". name is one of "nrm", "ext", "lim", "g".
  std::string csv(const std::string& name) const;

 private:
  std::size_t max_p_, max_n_, max_k_;
  std::vector<std::vector<TableCell>> nrm_, ext_, lim_, g_;
};

}  // namespace rainbow
