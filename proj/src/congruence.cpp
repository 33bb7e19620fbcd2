#include "isw/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "isw/errors.hpp"
#include "isw/union_find.hpp"

namespace isw {

CheckResult is_congruence(const InverseSemigroup& s, const Partition& eq) {
  const int n = s.order();
  CheckResult mult = CheckResult::pass();
  for (int a = 0; a < n && mult.ok; ++a)
    for (int b = a + 1; b < n && mult.ok; ++b) {
      if (!eq.together(a, b)) continue;
      for (int x = 0; x < n; ++x) {
        if (!eq.together(s.product(x, a), s.product(x, b)))
          mult = CheckResult::fail("left translation breaks the relation", {a, b, x});
        else if (!eq.together(s.product(a, x), s.product(b, x)))
          mult = CheckResult::fail("right translation breaks the relation", {a, b, x});
        if (!mult.ok) break;
      }
    }

  CheckResult invi = CheckResult::pass();
  for (int a = 0; a < n && invi.ok; ++a)
    for (int b = a + 1; b < n && invi.ok; ++b)
      if (eq.together(a, b) && !eq.together(s.inverse(a), s.inverse(b)))
        invi = CheckResult::fail("inversion breaks the relation", {a, b});

  // multiplication-invariance must already force inversion-invariance
  if (mult.ok && !invi.ok)
    throw theorem_mismatch("multiplication-invariant relation not inversion-invariant",
                           invi.witness);
  return mult.ok ? invi : mult;
}

Partition congruence_generated(const InverseSemigroup& s,
                               const std::vector<std::pair<int, int>>& pairs) {
  const int n = s.order();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  auto push = [&](int a, int b) {
    if (uf.merge(a, b)) work.emplace_back(a, b);
  };
  for (auto [a, b] : pairs) push(a, b);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    push(s.inverse(a), s.inverse(b));
    for (int x = 0; x < n; ++x) {
      push(s.product(x, a), s.product(x, b));
      push(s.product(a, x), s.product(b, x));
    }
  }
  return Partition::from_union_find(uf);
}

Subset kernel(const InverseSemigroup& s, const Partition& alpha) {
  Subset k(s.order());
  std::vector<bool> block_has_idem(alpha.block_count(), false);
  for (int e : s.idempotents()) block_has_idem[alpha.block_of(e)] = true;
  for (int x = 0; x < s.order(); ++x)
    if (block_has_idem[alpha.block_of(x)]) k.set(x);
  return k;
}

Partition trace(const InverseSemigroup& s, const Partition& alpha) {
  return alpha.restrict_to(s.idempotents());
}

Partition trace_identity(const InverseSemigroup& s) {
  return Partition(static_cast<int>(s.idempotents().size()));
}

Partition trace_universal(const InverseSemigroup& s) {
  return Partition::universal(static_cast<int>(s.idempotents().size()));
}

InverseSemigroup idempotent_semilattice(const InverseSemigroup& s) {
  const auto& idem = s.idempotents();
  const int m = static_cast<int>(idem.size());
  CayleyTable t{m, std::vector<int>(static_cast<std::size_t>(m) * m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t.product[static_cast<std::size_t>(i) * m + j] =
          s.idempotent_position(s.product(idem[i], idem[j]));
  return InverseSemigroup::from_cayley_table(std::move(t));
}

CheckResult is_semilattice_congruence(const InverseSemigroup& s, const Partition& eps) {
  const auto& idem = s.idempotents();
  const int m = static_cast<int>(idem.size());
  if (eps.size() != m) return CheckResult::fail("trace carrier size mismatch", {eps.size(), m});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!eps.together(i, j)) continue;
      for (int k = 0; k < m; ++k) {
        int gi = s.idempotent_position(s.product(idem[k], idem[i]));
        int gj = s.idempotent_position(s.product(idem[k], idem[j]));
        if (!eps.together(gi, gj))
          return CheckResult::fail("not a semilattice congruence", {idem[i], idem[j], idem[k]});
      }
    }
  return CheckResult::pass();
}

namespace {

CheckResult check_normal(const InverseSemigroup& s, const Subset& n) {
  for (int e : s.idempotents())
    if (!n.test(e)) return CheckResult::fail("not full: missing idempotent", {e});
  const auto members = n.members();
  for (int a : members) {
    if (!n.test(s.inverse(a))) return CheckResult::fail("not closed under inversion", {a});
    for (int b : members)
      if (!n.test(s.product(a, b))) return CheckResult::fail("not closed under product", {a, b});
  }
  for (int g = 0; g < s.order(); ++g)
    for (int a : members) {
      int c = s.product(s.product(s.inverse(g), a), g);
      if (!n.test(c)) return CheckResult::fail("not closed under conjugation", {g, a});
    }
  return CheckResult::pass();
}

} // namespace

CheckResult is_congruence_pair(const InverseSemigroup& s, const Subset& n, const Partition& eps) {
  if (auto r = check_normal(s, n); !r) return r;
  if (auto r = is_semilattice_congruence(s, eps); !r) return r;

  const auto& idem = s.idempotents();
  // (CP1)
  for (int a = 0; a < s.order(); ++a) {
    if (n.test(a)) continue;
    int aia = s.product(s.inverse(a), a);
    for (int e : idem)
      if (n.test(s.product(a, e)) &&
          eps.together(s.idempotent_position(e), s.idempotent_position(aia)))
        return CheckResult::fail("CP1 fails", {a, e});
  }
  // (CP2)
  for (int a : n.members())
    for (int e : idem) {
      int lhs = s.product(s.product(s.inverse(a), e), a);
      int rhs = s.product(s.product(s.inverse(a), a), e);
      if (!eps.together(s.idempotent_position(lhs), s.idempotent_position(rhs)))
        return CheckResult::fail("CP2 fails", {a, e});
    }
  return CheckResult::pass();
}

Partition congruence_from_pair(const InverseSemigroup& s, const Subset& n, const Partition& eps) {
  if (auto r = is_congruence_pair(s, n, eps); !r) throw invalid_pair(r.witness);

  const int order = s.order();
  UnionFind uf(order);
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b) {
      if (!n.test(s.product(a, s.inverse(b)))) continue;
      int ea = s.idempotent_position(s.product(a, s.inverse(a)));
      int eb = s.idempotent_position(s.product(b, s.inverse(b)));
      if (eps.together(ea, eb)) uf.merge(a, b);
    }
  Partition alpha = Partition::from_union_find(uf);

  // the defining relation of a valid pair is already transitive, and the
  // round-trip laws are forced; both guaranteed by the correspondence theorem
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      bool rel = n.test(s.product(a, s.inverse(b))) &&
                 eps.together(s.idempotent_position(s.product(a, s.inverse(a))),
                              s.idempotent_position(s.product(b, s.inverse(b))));
      if (rel != alpha.together(a, b))
        throw theorem_mismatch("pair relation is not transitive", {a, b});
    }
  if (auto r = is_congruence(s, alpha); !r)
    throw theorem_mismatch("pair relation is not a congruence", r.witness);
  if (kernel(s, alpha) != n) throw theorem_mismatch("kernel round-trip failed");
  if (trace(s, alpha) != eps) throw theorem_mismatch("trace round-trip failed");
  return alpha;
}

std::vector<Partition> enumerate_congruences(const InverseSemigroup& s, int guard) {
  const int n = s.order();
  if (n > guard) throw order_too_large(n, guard);

  std::set<std::vector<int>> seen;
  std::vector<Partition> all;
  auto add = [&](const Partition& p) {
    if (seen.insert(p.assignment()).second) {
      all.push_back(p);
      return true;
    }
    return false;
  };

  add(Partition(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) add(congruence_generated(s, {{a, b}}));

  // close under pairwise join; joins of congruences are congruences
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(all[i].join(all[j]));

  std::sort(all.begin(), all.end(), Partition::canonical_less);
  return all;
}

QuotientResult quotient(const InverseSemigroup& s, const Partition& alpha) {
  const int m = alpha.block_count();
  std::vector<int> rep(m, -1);
  for (int x = 0; x < s.order(); ++x)
    if (rep[alpha.block_of(x)] < 0) rep[alpha.block_of(x)] = x;

  CayleyTable table;
  table.order = m;
  table.product.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table.product[static_cast<std::size_t>(i) * m + j] =
          alpha.block_of(s.product(rep[i], rep[j]));

  return QuotientResult{InverseSemigroup::from_cayley_table(std::move(table)),
                        alpha.assignment()};
}

bool is_idempotent_separating(const InverseSemigroup& s, const Partition& alpha) {
  bool by_trace = trace(s, alpha).is_identity();
  bool below_h = alpha.refines(green_relations(s).h);
  if (by_trace != below_h)
    throw theorem_mismatch("trace = 0 and alpha <= H disagree");
  return by_trace;
}

Partition project_congruence(const QuotientResult& q, const Partition& coarser) {
  std::vector<int> ids(q.algebra.order(), -1);
  for (std::size_t x = 0; x < q.projection.size(); ++x)
    ids[q.projection[x]] = coarser.block_of(static_cast<int>(x));
  return Partition::from_assignment(std::move(ids));
}

Partition preimage_congruence(const QuotientResult& q, const Partition& on_quotient) {
  std::vector<int> ids(q.projection.size());
  for (std::size_t x = 0; x < q.projection.size(); ++x)
    ids[x] = on_quotient.block_of(q.projection[x]);
  return Partition::from_assignment(std::move(ids));
}

} // namespace isw
