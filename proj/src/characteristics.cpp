#include "rainbow/characteristics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace rainbow {

FiniteFunction::FiniteFunction(std::vector<std::uint64_t> table) : values(std::move(table)) {
  std::unordered_map<std::uint64_t, std::size_t> fibers;
  for (std::uint64_t v : values) max_fiber = std::max(max_fiber, ++fibers[v]);
  injective = max_fiber <= 1;
  two_to_one = max_fiber <= 2;
  strictly_increasing = true;
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] >= values[i + 1]) { strictly_increasing = false; break; }
  finite_to_one = values.size() <= 1 || max_fiber < values.size();
}

WitnessStatus witness_status(const FiniteFunction& f, const std::vector<std::size_t>& xs) {
  for (std::size_t x : xs)
    if (x >= f.window()) throw precondition_error("witness_status: index outside window");
  if (xs.size() <= 1) return WitnessStatus::Both;
  bool constant = true, inj = true;
  std::unordered_set<std::uint64_t> seen;
  for (std::size_t x : xs) {
    std::uint64_t v = f(x);
    if (v != f(xs.front())) constant = false;
    if (!seen.insert(v).second) inj = false;
  }
  if (constant) return WitnessStatus::Constant;
  if (inj) return WitnessStatus::Injective;
  return WitnessStatus::Neither;
}

FiniteFunction unary_dual(const FiniteFunction& f) {
  std::vector<std::uint64_t> dual(f.window(), 0);
  std::unordered_map<std::uint64_t, unsigned> count;
  for (std::size_t a = 0; a < f.window(); ++a) {
    unsigned rank = count[f(a)]++;
    if (rank >= 2) throw precondition_error("unary_dual: a fiber has three elements");
    dual[a] = rank;
  }
  return FiniteFunction(std::move(dual));
}

FiniteFunction interval_collapse(const FiniteFunction& f, std::size_t output_cap) {
  if (!f.strictly_increasing)
    throw precondition_error("interval_collapse: f must be strictly increasing");
  if (f.window() < 3)
    throw precondition_error("interval_collapse: window too short for a full interval");
  const std::size_t m = (f.window() - 1) / 2;  // intervals [f(2n), f(2n+2)) for n < m
  const std::uint64_t end = f(2 * m);
  if (end > output_cap)
    throw cap_exceeded_error("interval_collapse: output window " + std::to_string(end) +
                             " above cap " + std::to_string(output_cap));
  std::vector<std::uint64_t> g(end, 0);
  for (std::size_t n = 1; n < m; ++n)
    for (std::uint64_t x = f(2 * n); x < f(2 * n + 2); ++x) g[x] = n;
  return FiniteFunction(std::move(g));
}

std::vector<std::size_t> orbit_sequence(const FiniteFunction& f, std::size_t cap) {
  std::set<std::size_t> seen;
  std::size_t x = 0;
  for (std::size_t it = 0; it <= cap && x < f.window(); ++it) {
    if (!seen.insert(x).second) break;
    std::uint64_t next = f(x);
    if (next >= f.window()) break;
    x = static_cast<std::size_t>(next);
  }
  return {seen.begin(), seen.end()};
}

ThresholdResult hg_threshold(const FiniteFunction& g) {
  const std::size_t n = g.window();
  if (n == 0) return {FiniteFunction(std::vector<std::uint64_t>{}), 0};
  // h(n) = 1 + the last window position whose value recurs in g(0..n)
  std::unordered_map<std::uint64_t, std::size_t> last_of;
  for (std::size_t i = 0; i < n; ++i) last_of[g(i)] = i;

  std::vector<std::uint64_t> h(n);
  std::size_t running = 0;
  std::size_t valid_end = n;
  for (std::size_t i = 0; i < n; ++i) {
    running = std::max(running, last_of[g(i)]);
    h[i] = running + 1;
    if (running + 1 >= n && valid_end == n) valid_end = i;
  }
  return {FiniteFunction(std::move(h)), valid_end};
}

IncreasingRefine increasing_refine(const FiniteFunction& f) {
  IncreasingRefine out;
  if (!f.finite_to_one) {
    std::vector<std::uint64_t> ident(f.window());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
    out.g = FiniteFunction(std::move(ident));
    out.fallback_identity = true;
    return out;
  }
  std::vector<std::uint64_t> vals;
  for (std::size_t i = 0; i < f.window(); ++i) {
    if (out.xs.empty() || f(i) > vals.back()) {
      out.xs.push_back(i);
      vals.push_back(f(i));
    }
  }
  out.g = FiniteFunction(std::move(vals));
  return out;
}

Slalom::Slalom(std::vector<std::vector<std::uint64_t>> s, std::vector<std::uint64_t> bound)
    : sets(std::move(s)), width_bound(std::move(bound)) {
  if (sets.size() != width_bound.size())
    throw precondition_error("slalom: one width bound per slot");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::sort(sets[i].begin(), sets[i].end());
    sets[i].erase(std::unique(sets[i].begin(), sets[i].end()), sets[i].end());
    if (sets[i].size() > width_bound[i])
      throw precondition_error("slalom: slot " + std::to_string(i) + " exceeds its width bound");
  }
}

Slalom Slalom::from_sets(std::vector<std::vector<std::uint64_t>> s) {
  std::vector<std::uint64_t> bound;
  for (auto& v : s) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    bound.push_back(v.size());
  }
  return Slalom(std::move(s), std::move(bound));
}

bool Slalom::member(std::size_t n, std::uint64_t v) const {
  const auto& s = sets.at(n);
  return std::binary_search(s.begin(), s.end(), v);
}

Slalom psi_of(const Slalom& phi) {
  std::vector<std::vector<std::uint64_t>> out(phi.window());
  std::set<std::uint64_t> acc;
  for (std::size_t n = 0; n < phi.window(); ++n) {
    acc.insert(phi.sets[n].begin(), phi.sets[n].end());
    acc.insert(n);
    out[n].assign(acc.begin(), acc.end());
  }
  return Slalom::from_sets(std::move(out));
}

PartnerSlalom slalom_of_two_to_one(const FiniteFunction& g) {
  if (!g.two_to_one) throw precondition_error("slalom_of_two_to_one: fibers must be <= 2");
  const std::size_t n = g.window();
  std::vector<std::uint64_t> partner(n);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> fibers;
  for (std::size_t i = 0; i < n; ++i) fibers[g(i)].push_back(i);
  for (const auto& [v, where] : fibers) {
    if (where.size() == 1) partner[where[0]] = where[0];
    else {
      partner[where[0]] = where[1];
      partner[where[1]] = where[0];
    }
  }

  std::vector<std::vector<std::uint64_t>> sets(n);
  std::vector<std::uint64_t> bound(n);
  std::set<std::uint64_t> acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc.insert(partner[i]);
    sets[i].assign(acc.begin(), acc.end());
    bound[i] = i + 1;
  }
  return {std::move(partner), Slalom(std::move(sets), std::move(bound))};
}

bool evade_check(const FiniteFunction& f, const Slalom& phi, std::size_t from) {
  const std::size_t window = std::min(f.window(), phi.window());
  for (std::size_t n = from; n < window; ++n)
    if (phi.member(n, f(n))) return false;
  return true;
}

}  // namespace rainbow
