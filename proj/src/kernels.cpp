#include "isw/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "isw/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isw::kernels {

std::vector<int> TcWitness::interleaved() const {
  std::vector<int> out{a, b};
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.push_back(u[i]);
    out.push_back(v[i]);
  }
  return out;
}

std::vector<std::pair<int, int>> saturated_pairs(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.together(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<int, int>> distinct_pairs(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (x != y && p.together(x, y)) out.emplace_back(x, y);
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

namespace {

// Variables of t other than the distinguished one, ascending.
std::vector<int> scan_variables(const Term& t) {
  std::vector<int> vars;
  for (int v = 1; v < t.arity; ++v)
    if (t.uses(v)) vars.push_back(v);
  return vars;
}

bool is_m_term(const Term& t) {
  return t.arity == 3 &&
         t.word == std::vector<std::pair<int, int>>{{1, 1}, {0, 1}, {2, 1}};
}

// Reference inner scan for one alpha-pair: odometer over the used variables
// in lexicographic pair order, generic term evaluation, first hit returned.
std::optional<TcWitness> tc_pair_reference(const InverseSemigroup& s, const Term& t,
                                           const std::vector<std::pair<int, int>>& beta_pairs,
                                           const std::vector<int>& vars, int a, int b) {
  const int nv = static_cast<int>(vars.size());
  std::vector<int> asg_u(t.arity, 0), asg_v(t.arity, 0);
  std::vector<std::size_t> idx(nv, 0);
  for (;;) {
    for (int j = 0; j < nv; ++j) {
      asg_u[vars[j]] = beta_pairs[idx[j]].first;
      asg_v[vars[j]] = beta_pairs[idx[j]].second;
    }
    asg_u[0] = a;
    asg_v[0] = a;
    if (eval_term(s, t, asg_u) == eval_term(s, t, asg_v)) {
      asg_u[0] = b;
      asg_v[0] = b;
      if (eval_term(s, t, asg_u) != eval_term(s, t, asg_v)) {
        TcWitness w;
        w.a = a;
        w.b = b;
        w.u.assign(t.arity - 1, 0);
        w.v.assign(t.arity - 1, 0);
        for (int j = 0; j < nv; ++j) {
          w.u[vars[j] - 1] = beta_pairs[idx[j]].first;
          w.v[vars[j] - 1] = beta_pairs[idx[j]].second;
        }
        return w;
      }
      asg_u[0] = a;
      asg_v[0] = a;
    }
    int j = nv - 1;
    while (j >= 0 && ++idx[j] == beta_pairs.size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return std::nullopt;
}

// Tight kernel for the paper's m(x,y,z) = yxz, the term every centralization
// check reduces to.
std::optional<TcWitness> tc_pair_m(const InverseSemigroup& s,
                                   const std::vector<std::pair<int, int>>& beta_pairs, int a,
                                   int b) {
  const int n = s.order();
  const int* t = s.raw_table().data();
  for (auto [u1, v1] : beta_pairs) {
    const int ua = t[static_cast<std::size_t>(u1) * n + a];
    const int va = t[static_cast<std::size_t>(v1) * n + a];
    const int ub = t[static_cast<std::size_t>(u1) * n + b];
    const int vb = t[static_cast<std::size_t>(v1) * n + b];
    const int* row_ua = t + static_cast<std::size_t>(ua) * n;
    const int* row_va = t + static_cast<std::size_t>(va) * n;
    const int* row_ub = t + static_cast<std::size_t>(ub) * n;
    const int* row_vb = t + static_cast<std::size_t>(vb) * n;
    for (auto [u2, v2] : beta_pairs)
      if (row_ua[u2] == row_va[v2] && row_ub[u2] != row_vb[v2])
        return TcWitness{a, b, {u1, u2}, {v1, v2}};
  }
  return std::nullopt;
}

} // namespace

std::optional<TcWitness> tc_scan(const InverseSemigroup& s, const Term& t,
                                 const Partition& alpha, const Partition& beta,
                                 std::uint64_t budget, Mode mode) {
  const auto alpha_pairs = distinct_pairs(alpha);
  const auto beta_pairs = saturated_pairs(beta);
  const auto vars = scan_variables(t);

  std::uint64_t space = alpha_pairs.size();
  for (std::size_t i = 0; i < vars.size(); ++i)
    space = saturating_mul(space, beta_pairs.size());
  if (space > budget) throw budget_exceeded(space, budget);

  const bool use_m = is_m_term(t);
  auto scan_pair = [&](int a, int b) {
    return use_m && mode == Mode::parallel
               ? tc_pair_m(s, beta_pairs, a, b)
               : tc_pair_reference(s, t, beta_pairs, vars, a, b);
  };

#ifdef _OPENMP
  if (mode == Mode::parallel && alpha_pairs.size() > 1) {
    const std::size_t count = alpha_pairs.size();
    std::vector<std::optional<TcWitness>> found(count);
    std::atomic<std::size_t> best{count};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < count; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      auto w = scan_pair(alpha_pairs[i].first, alpha_pairs[i].second);
      if (w) {
        found[i] = std::move(w);
        std::size_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
    for (std::size_t i = 0; i < count; ++i)
      if (found[i]) return found[i];
    return std::nullopt;
  }
#endif

  for (auto [a, b] : alpha_pairs)
    if (auto w = scan_pair(a, b)) return w;
  return std::nullopt;
}

namespace {

bool word_pair_holds(const InverseSemigroup& s, const Term& lhs, const Term& rhs, int a, int b,
                     int nz) {
  const int n = s.order();
  std::vector<int> asg(lhs.arity, 0);
  asg[0] = a;
  asg[1] = b;
  std::vector<int> z(nz, 0);
  for (;;) {
    for (int j = 0; j < nz; ++j) asg[2 + j] = z[j];
    if (eval_term(s, lhs, asg) != eval_term(s, rhs, asg)) return false;
    int j = nz - 1;
    while (j >= 0 && ++z[j] == n) z[j--] = 0;
    if (j < 0) return true;
  }
}

} // namespace

Tolerance word_equality_scan(const InverseSemigroup& s, const Term& lhs, const Term& rhs,
                             std::uint64_t budget, Mode mode) {
  if (lhs.arity != rhs.arity || lhs.arity < 2)
    throw invalid_table("word pair must share an arity >= 2");
  const int n = s.order();
  const int nz = lhs.arity - 2;

  std::uint64_t space = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  for (int j = 0; j < nz; ++j) space = saturating_mul(space, n);
  if (space > budget) throw budget_exceeded(space, budget);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  Tolerance rel(n);

#ifdef _OPENMP
  if (mode == Mode::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      if (word_pair_holds(s, lhs, rhs, a, b, nz)) {
        rel.set_raw(a, b, true);
        rel.set_raw(b, a, true);
      }
    }
    return rel;
  }
#endif

  for (auto [a, b] : pairs)
    if (word_pair_holds(s, lhs, rhs, a, b, nz)) rel.add(a, b);
  return rel;
}

} // namespace isw::kernels
