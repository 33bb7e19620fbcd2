#include "isw/series.hpp"

#include <algorithm>
#include <deque>

#include "isw/classical_group.hpp"
#include "isw/conjugation.hpp"
#include "isw/errors.hpp"

namespace isw {

CentralSeries upper_central_series(const InverseSemigroup& s, std::uint64_t budget,
                                   kernels::Mode mode, int enumeration_guard) {
  CentralSeries series;
  series.zetas.emplace_back(s.order());
  for (;;) {
    QuotientResult q = quotient(s, series.zetas.back());
    Partition zq = center_congruence(q.algebra, budget, mode, enumeration_guard);
    Partition next = preimage_congruence(q, zq);
    if (next == series.zetas.back()) break;
    if (!series.zetas.back().refines(next))
      throw theorem_mismatch("upper central series failed to ascend");
    series.zetas.push_back(std::move(next));
  }
  return series;
}

NilpotenceResult is_nilpotent(const InverseSemigroup& s, std::uint64_t budget,
                              kernels::Mode mode, int enumeration_guard) {
  CentralSeries series = upper_central_series(s, budget, mode, enumeration_guard);
  NilpotenceResult r;
  r.clazz = series.nilpotency_class();
  r.nilpotent = r.clazz.has_value();

  std::optional<int> classical =
      is_group(s) ? group_nilpotency_class(s) : std::nullopt;
  if (classical.has_value() != r.nilpotent)
    throw theorem_mismatch("nilpotence disagrees with (group and classically nilpotent)");
  if (r.nilpotent && classical != r.clazz)
    throw theorem_mismatch("nilpotency class disagrees with the classical series");
  return r;
}

SolvabilityResult is_solvable(const InverseSemigroup& s, std::uint64_t budget,
                              kernels::Mode mode, int enumeration_guard) {
  const auto congs = enumerate_congruences(s, enumeration_guard);
  const int count = static_cast<int>(congs.size());

  int start = -1, goal = -1;
  const Partition zero(s.order());
  const Partition one = Partition::universal(s.order());
  for (int i = 0; i < count; ++i) {
    if (congs[i] == zero) start = i;
    if (congs[i] == one) goal = i;
  }

  // BFS for the shortest abelian chain
  std::vector<int> dist(count, -1);
  dist[start] = 0;
  std::deque<int> frontier{start};
  while (!frontier.empty() && dist[goal] < 0) {
    int i = frontier.front();
    frontier.pop_front();
    QuotientResult q = quotient(s, congs[i]);
    for (int j = 0; j < count; ++j) {
      if (dist[j] >= 0 || i == j || !congs[i].refines(congs[j])) continue;
      if (is_abelian_congruence(q.algebra, project_congruence(q, congs[j]), budget, mode)) {
        dist[j] = dist[i] + 1;
        frontier.push_back(j);
      }
    }
  }

  SolvabilityResult r;
  r.solvable = dist[goal] >= 0;
  if (r.solvable) r.length = dist[goal];

  bool classical = is_group(s) && group_derived_length(s).has_value();
  if (classical != r.solvable)
    throw theorem_mismatch("solvability disagrees with (group and classically solvable)");
  return r;
}

KmmSeries kmm_kernel_series(const InverseSemigroup& s, std::uint64_t budget, kernels::Mode mode,
                            int enumeration_guard) {
  CentralSeries series = upper_central_series(s, budget, mode, enumeration_guard);
  KmmSeries k;
  for (const auto& z : series.zetas) k.kernels.push_back(kernel(s, z));
  for (std::size_t i = 0; i < k.kernels.size(); ++i)
    if (k.kernels[i].count() == s.order()) {
      k.nilpotent = true;
      k.clazz = static_cast<int>(i);
      break;
    }
  return k;
}

MalcevWord malcev_words(int n, int guard) {
  if (n < 0 || n > guard) throw level_too_large(n, guard);
  const int arity = n + 2;
  std::vector<std::pair<int, int>> lam{{0, 1}}, rho{{1, 1}};
  for (int i = 0; i < n; ++i) {
    auto next_lam = lam;
    next_lam.emplace_back(2 + i, 1);
    next_lam.insert(next_lam.end(), rho.begin(), rho.end());
    auto next_rho = rho;
    next_rho.emplace_back(2 + i, 1);
    next_rho.insert(next_rho.end(), lam.begin(), lam.end());
    lam = std::move(next_lam);
    rho = std::move(next_rho);
  }
  return MalcevWord{n, Term::make(arity, std::move(lam)), Term::make(arity, std::move(rho))};
}

CheckResult is_tolerance(const InverseSemigroup& s, const Tolerance& rel) {
  const int n = s.order();
  if (rel.size() != n) return CheckResult::fail("carrier size mismatch", {rel.size(), n});
  for (int a = 0; a < n; ++a)
    if (!rel.related(a, a)) return CheckResult::fail("not reflexive", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rel.related(a, b) != rel.related(b, a)) return CheckResult::fail("not symmetric", {a, b});
  const auto pairs = rel.ordered_pairs();
  for (auto [a, b] : pairs) {
    if (!rel.related(s.inverse(a), s.inverse(b)))
      return CheckResult::fail("not closed under inversion", {a, b});
    for (auto [c, d] : pairs)
      if (!rel.related(s.product(a, c), s.product(b, d)))
        return CheckResult::fail("not compatible with the product", {a, b, c, d});
  }
  return CheckResult::pass();
}

// Note: reflexivity, symmetry and inversion-closure of mu_n are theorems, but
// closure under componentwise products can fail (mu_2 on IS(2) is a
// counterexample), so the axioms are checked by callers via is_tolerance
// rather than enforced here.
Tolerance malcev_tolerance(const InverseSemigroup& s, int n, std::uint64_t budget,
                           kernels::Mode mode) {
  MalcevWord w = malcev_words(n, std::max(n, kDefaultMalcevGuard));
  return kernels::word_equality_scan(s, w.lambda, w.rho, budget, mode);
}

bool is_malcev_nilpotent(const InverseSemigroup& s, int n, std::uint64_t budget,
                         kernels::Mode mode) {
  return malcev_tolerance(s, n, budget, mode) == Tolerance::universal(s.order());
}

std::optional<int> malcev_class(const InverseSemigroup& s, int max_n, std::uint64_t budget,
                                kernels::Mode mode) {
  for (int n = 0; n <= max_n; ++n)
    if (is_malcev_nilpotent(s, n, budget, mode)) return n;
  return std::nullopt;
}

ConjectureResult conjecture_check(const InverseSemigroup& s, int n, std::uint64_t budget,
                                  kernels::Mode mode, int enumeration_guard) {
  CentralSeries series = upper_central_series(s, budget, mode, enumeration_guard);
  ConjectureResult r{false, series.at(static_cast<std::size_t>(n)), Tolerance(s.order()),
                     std::nullopt};
  Tolerance mu = malcev_tolerance(s, n, budget, mode);
  r.h_and_mu = Tolerance::from_partition(green_relations(s).h) & mu;

  Tolerance lhs = Tolerance::from_partition(r.zeta_n);
  r.holds = lhs == r.h_and_mu;
  if (!r.holds) {
    for (int a = 0; a < s.order() && !r.witness; ++a)
      for (int b = 0; b < s.order(); ++b)
        if (lhs.related(a, b) != r.h_and_mu.related(a, b)) {
          r.witness = std::make_pair(a, b);
          break;
        }
  }
  return r;
}

} // namespace isw
