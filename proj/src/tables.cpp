#include "rainbow/tables.hpp"

#include <algorithm>
#include <sstream>

namespace rainbow {
namespace {

constexpr TableCell kOverflow{0, true};

TableCell checked_add(TableCell a, TableCell b) {
  if (a.overflow || b.overflow) return kOverflow;
  std::uint64_t r;
  if (__builtin_add_overflow(a.value, b.value, &r)) return kOverflow;
  return {r, false};
}

TableCell checked_mul(TableCell a, TableCell b) {
  if (a.overflow || b.overflow) return kOverflow;
  std::uint64_t r;
  if (__builtin_mul_overflow(a.value, b.value, &r)) return kOverflow;
  return {r, false};
}

TableCell checked_max(TableCell a, TableCell b) {
  // max with an overflowed operand exceeds the representable range itself.
  if (a.overflow || b.overflow) return kOverflow;
  return {std::max(a.value, b.value), false};
}

// C(x,2) and C(x,3) with overflow checking.
TableCell choose2(std::uint64_t x) {
  if (x < 2) return {0, false};
  std::uint64_t a = x, b = x - 1;
  if (a % 2 == 0) a /= 2; else b /= 2;
  return checked_mul({a, false}, {b, false});
}

TableCell choose3(std::uint64_t x) {
  if (x < 3) return {0, false};
  std::uint64_t f[3] = {x, x - 1, x - 2};
  for (auto& v : f)
    if (v % 3 == 0) { v /= 3; break; }
  for (auto& v : f)
    if (v % 2 == 0) { v /= 2; break; }
  return checked_mul(checked_mul({f[0], false}, {f[1], false}), {f[2], false});
}

}  // namespace

TableCell nrm_cell(std::uint64_t p, std::uint64_t n) {
  // n + C(p+n,3) - C(p,3); the subtraction never underflows since C is
  // monotone, so only the additions need checking.
  std::uint64_t pn;
  if (__builtin_add_overflow(p, n, &pn)) return kOverflow;
  TableCell big = choose3(pn);
  if (big.overflow) return kOverflow;
  TableCell small = choose3(p);
  return checked_add({n, false}, {big.value - small.value, false});
}

TableCell ext_cell(std::uint64_t p, std::uint64_t n) {
  std::uint64_t top;
  if (__builtin_add_overflow(p, n, &top)) return kOverflow;  // ext(p,n) >= n
  // Walk the anti-diagonal bottom-up: v_j = ext(p+n-j, j). Values increase
  // strictly once n >= 1, so overflow is hit within ~70 steps regardless of
  // how large n is.
  TableCell v{0, false};
  for (std::uint64_t j = 1; j <= n; ++j) {
    const std::uint64_t row = top - j;  // v = ext(row, j) from ext(row+1, j-1)
    TableCell step = checked_add(checked_mul({2, false}, {row, false}), {2, false});
    v = checked_add(checked_mul(v, {row + 1, false}), step);
    if (v.overflow) return kOverflow;
  }
  return v;
}

TableCell lim_cell(std::uint64_t k, std::uint64_t n) {
  // (k+1)n + k(k+3)/2
  TableCell kk = (k % 2 == 0) ? checked_mul({k / 2, false}, {k + 3, false})
                              : checked_mul({k, false}, {(k + 3) / 2, false});
  if (k == UINT64_MAX) return kOverflow;
  return checked_add(checked_mul({k + 1, false}, {n, false}), kk);
}

TableCell g_cell(std::uint64_t k, std::uint64_t n) {
  if (k < 1) throw precondition_error("g(k,n) requires k >= 1");
  TableCell g{n + 1, false};
  if (n == UINT64_MAX) return kOverflow;
  for (std::uint64_t level = 1; level < k; ++level) {
    if (g.overflow) return kOverflow;
    TableCell next = checked_max(ext_cell(level, g.value), nrm_cell(level, g.value));
    next = checked_max(next, checked_mul({2, false}, g));
    g = checked_add(next, {1, false});
  }
  return g;
}

std::uint64_t nrm_value(std::uint64_t p, std::uint64_t n) {
  TableCell c = nrm_cell(p, n);
  if (c.overflow)
    throw table_overflow_error("nrm(" + std::to_string(p) + "," + std::to_string(n) +
                               ") exceeds 64-bit range");
  return c.value;
}

std::uint64_t ext_value(std::uint64_t p, std::uint64_t n) {
  TableCell c = ext_cell(p, n);
  if (c.overflow)
    throw table_overflow_error("ext(" + std::to_string(p) + "," + std::to_string(n) +
                               ") exceeds 64-bit range");
  return c.value;
}

BoundTables::BoundTables(std::size_t max_p, std::size_t max_n, std::size_t max_k)
    : max_p_(max_p), max_n_(max_n), max_k_(max_k) {
  if (max_p < 1 || max_n < 1 || max_k < 1)
    throw precondition_error("table extents must be >= 1");

  // nrm by its recursion.
  nrm_.assign(max_p + 1, std::vector<TableCell>(max_n + 1));
  for (std::size_t p = 0; p <= max_p; ++p) {
    nrm_[p][0] = {0, false};
    for (std::size_t n = 0; n < max_n; ++n)
      nrm_[p][n + 1] = checked_add(nrm_[p][n], checked_add(choose2(p + n), {1, false}));
  }

  // ext needs rows up to max_p + max_n internally; keep only the requested rows.
  {
    std::vector<std::vector<TableCell>> wide(max_p + max_n + 1,
                                             std::vector<TableCell>(max_n + 1));
    for (std::size_t p = 0; p <= max_p + max_n; ++p) wide[p][0] = {0, false};
    for (std::size_t n = 0; n < max_n; ++n)
      for (std::size_t p = 0; p + n + 1 <= max_p + max_n; ++p)
        wide[p][n + 1] =
            checked_add(checked_mul(wide[p + 1][n], {p + 1, false}), {2 * p + 2, false});
    ext_.assign(wide.begin(), wide.begin() + max_p + 1);
  }

  // lim likewise needs columns up to max_n + max_k internally.
  {
    std::vector<std::vector<TableCell>> wide(max_k + 1,
                                             std::vector<TableCell>(max_n + max_k + 1));
    for (std::size_t n = 0; n <= max_n + max_k; ++n) wide[0][n] = {n, false};
    for (std::size_t k = 0; k < max_k; ++k)
      for (std::size_t n = 0; n + k + 1 <= max_n + max_k; ++n)
        wide[k + 1][n] = checked_add({n + 1, false}, wide[k][n + 1]);
    lim_.assign(max_k + 1, {});
    for (std::size_t k = 0; k <= max_k; ++k)
      lim_[k].assign(wide[k].begin(), wide[k].begin() + max_n + 1);
  }

  // g by its recursion; the ext/nrm arguments escape any table extent almost
  // immediately, so those are evaluated on demand.
  g_.assign(max_k + 1, std::vector<TableCell>(max_n + 1, kOverflow));
  if (max_k >= 1)
    for (std::size_t n = 0; n <= max_n; ++n) g_[1][n] = {n + 1, false};
  for (std::size_t k = 1; k < max_k; ++k) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      TableCell prev = g_[k][n];
      if (prev.overflow) {
        g_[k + 1][n] = kOverflow;
        continue;
      }
      TableCell next = checked_max(ext_cell(k, prev.value), nrm_cell(k, prev.value));
      next = checked_max(next, checked_mul({2, false}, prev));
      g_[k + 1][n] = checked_add(next, {1, false});
    }
  }
}

namespace {
TableCell at(const std::vector<std::vector<TableCell>>& t, std::size_t i, std::size_t j,
             const char* name) {
  if (i >= t.size() || j >= t[i].size())
    throw precondition_error(std::string(name) + " index outside table extents");
  return t[i][j];
}
std::uint64_t require(TableCell c, const char* name, std::size_t i, std::size_t j) {
  if (c.overflow)
    throw table_overflow_error(std::string(name) + "(" + std::to_string(i) + "," +
                               std::to_string(j) + ") exceeds 64-bit range");
  return c.value;
}
}  // namespace

TableCell BoundTables::nrm(std::size_t p, std::size_t n) const { return at(nrm_, p, n, "nrm"); }
TableCell BoundTables::ext(std::size_t p, std::size_t n) const { return at(ext_, p, n, "ext"); }
TableCell BoundTables::lim(std::size_t k, std::size_t n) const { return at(lim_, k, n, "lim"); }
TableCell BoundTables::g(std::size_t k, std::size_t n) const {
  if (k < 1) throw precondition_error("g(k,n) requires k >= 1");
  return at(g_, k, n, "g");
}

std::uint64_t BoundTables::nrm_at(std::size_t p, std::size_t n) const {
  return require(nrm(p, n), "nrm", p, n);
}
std::uint64_t BoundTables::ext_at(std::size_t p, std::size_t n) const {
  return require(ext(p, n), "ext", p, n);
}
std::uint64_t BoundTables::lim_at(std::size_t k, std::size_t n) const {
  return require(lim(k, n), "lim", k, n);
}
std::uint64_t BoundTables::g_at(std::size_t k, std::size_t n) const {
  return require(g(k, n), "g", k, n);
}

std::string BoundTables::csv(const std::string& name) const {
  const std::vector<std::vector<TableCell>>* t = nullptr;
  std::size_t first_row = 0;
  if (name == "nrm") t = &nrm_;
  else if (name == "ext") t = &ext_;
  else if (name == "lim") t = &lim_;
  else if (name == "g") { t = &g_; first_row = 1; }
  else throw precondition_error("unknown table: " + name);

  std::ostringstream os;
  os << name;
  for (std::size_t n = 0; n <= max_n_; ++n) os << ",n=" << n;
  os << "\n";
  for (std::size_t i = first_row; i < t->size(); ++i) {
    os << i;
    for (const TableCell& c : (*t)[i]) {
      if (c.overflow) os << ",overflow";
      else os << "," << c.value;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace rainbow
