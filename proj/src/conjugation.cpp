#include "isw/conjugation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "isw/errors.hpp"

namespace isw {

CheckResult is_normal(const InverseSemigroup& s, const Subset& n) {
  for (int e : s.idempotents())
    if (!n.test(e)) return CheckResult::fail("not full", {e});
  const auto members = n.members();
  for (int a : members)
    if (!n.test(s.inverse(a))) return CheckResult::fail("not closed under inversion", {a});
  for (int a : members)
    for (int b : members)
      if (!n.test(s.product(a, b))) return CheckResult::fail("not closed under product", {a, b});
  for (int g = 0; g < s.order(); ++g)
    for (int a : members)
      if (!n.test(s.product(s.product(s.inverse(g), a), g)))
        return CheckResult::fail("not stable under conjugation", {g, a});
  return CheckResult::pass();
}

Subset normal_closure(const InverseSemigroup& s, const Subset& x) {
  Subset cur = x | s.idempotent_set();
  for (;;) {
    Subset next = cur;
    const auto members = cur.members();
    for (int a : members) {
      next.set(s.inverse(a));
      for (int b : members) next.set(s.product(a, b));
      for (int g = 0; g < s.order(); ++g)
        next.set(s.product(s.product(s.inverse(g), a), g));
    }
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<Subset> enumerate_normal_subsemigroups(const InverseSemigroup& s, int guard) {
  if (s.order() > guard) throw order_too_large(s.order(), guard);

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Subset> all;
  std::vector<Subset> work{normal_closure(s, Subset(s.order()))};
  seen.insert(work[0].raw_words());
  while (!work.empty()) {
    Subset n = std::move(work.back());
    work.pop_back();
    all.push_back(n);
    for (int g = 0; g < s.order(); ++g) {
      if (n.test(g)) continue;
      Subset bigger = n;
      bigger.set(g);
      Subset closed = normal_closure(s, bigger);
      if (seen.insert(closed.raw_words()).second) work.push_back(closed);
    }
  }
  std::sort(all.begin(), all.end(), Subset::canonical_less);
  return all;
}

Subset conjugate_set(const InverseSemigroup& s, int g, const Subset& x) {
  Subset out(s.order());
  const int gi = s.inverse(g);
  for (int a : x.members()) out.set(s.product(s.product(g, a), gi));
  return out;
}

TotalConjugationMap psi(const InverseSemigroup& s, const Subset& n, int g) {
  TotalConjugationMap m{n, std::vector<int>(s.order(), -1)};
  const int gi = s.inverse(g);
  for (int a : n.members()) m.image[a] = s.product(s.product(g, a), gi);
  return m;
}

PartialAutomorphism PartialAutomorphism::after(const PartialAutomorphism& inner) const {
  PartialAutomorphism out{Subset(inner.domain.universe()),
                          std::vector<int>(inner.image.size(), -1)};
  for (int x : inner.domain.members()) {
    int y = inner.image[x];
    if (domain.test(y)) {
      out.domain.set(x);
      out.image[x] = image[y];
    }
  }
  return out;
}

PartialAutomorphism phi(const InverseSemigroup& s, const Subset& n, int g) {
  const int gi = s.inverse(g);
  PartialAutomorphism p{conjugate_set(s, gi, n), std::vector<int>(s.order(), -1)};
  for (int x : p.domain.members()) p.image[x] = s.product(s.product(g, x), gi);

  // domain characterization: g^-1 N g = (g^-1 g) N (g^-1 g)
  const int e = s.product(gi, g);
  Subset expected(s.order());
  for (int a : n.members()) expected.set(s.product(s.product(e, a), e));
  if (!(p.domain == expected))
    throw theorem_mismatch("phi domain differs from (g^-1 g) N (g^-1 g)", {g});

  // isomorphism onto g N g^-1
  Subset img = conjugate_set(s, g, n);
  Subset hit(s.order());
  for (int x : p.domain.members()) {
    int y = p.image[x];
    if (!img.test(y)) throw theorem_mismatch("phi image escapes g N g^-1", {g, x});
    if (hit.test(y)) throw theorem_mismatch("phi not injective", {g, x});
    hit.set(y);
  }
  if (!(hit == img)) throw theorem_mismatch("phi not onto g N g^-1", {g});
  const auto dom = p.domain.members();
  for (int x : dom) {
    if (!p.domain.test(s.inverse(x)) || p.image[s.inverse(x)] != s.inverse(p.image[x]))
      throw theorem_mismatch("phi does not preserve inversion", {g, x});
    for (int y : dom) {
      int xy = s.product(x, y);
      if (!p.domain.test(xy) || p.image[xy] != s.product(p.image[x], p.image[y]))
        throw theorem_mismatch("phi does not preserve products", {g, x, y});
    }
  }
  return p;
}

namespace {

Partition group_by_key(int order, const std::vector<std::vector<int>>& keys) {
  std::map<std::vector<int>, int> labels;
  std::vector<int> ids(order);
  for (int g = 0; g < order; ++g)
    ids[g] = labels.emplace(keys[g], static_cast<int>(labels.size())).first->second;
  return Partition::from_assignment(std::move(ids));
}

} // namespace

Partition ker_psi(const InverseSemigroup& s, const Subset& n) {
  const auto members = n.members();
  std::vector<std::vector<int>> keys(s.order());
  for (int g = 0; g < s.order(); ++g) {
    const int gi = s.inverse(g);
    keys[g].reserve(members.size());
    for (int a : members) keys[g].push_back(s.product(s.product(g, a), gi));
  }
  Partition k = group_by_key(s.order(), keys);
  if (auto r = is_congruence(s, k); !r)
    throw theorem_mismatch("ker(Psi_N) is not a congruence", r.witness);
  return k;
}

Partition ker_phi(const InverseSemigroup& s, const Subset& n) {
  std::vector<std::vector<int>> keys(s.order());
  for (int g = 0; g < s.order(); ++g) {
    PartialAutomorphism p = phi(s, n, g);
    for (auto w : p.domain.raw_words()) {
      keys[g].push_back(static_cast<int>(w & 0xffffffffu));
      keys[g].push_back(static_cast<int>(w >> 32));
    }
    for (int x : p.domain.members()) keys[g].push_back(p.image[x]);
  }
  Partition k = group_by_key(s.order(), keys);
  if (auto r = is_congruence(s, k); !r)
    throw theorem_mismatch("ker(Phi_N) is not a congruence", r.witness);
  return k;
}

Subset z_of(const InverseSemigroup& s, const Subset& n) {
  Subset z(s.order());
  for (int g = 0; g < s.order(); ++g) {
    const int gi = s.inverse(g);
    const int ggi = s.product(g, gi);
    bool in = true;
    for (int a : n.members()) {
      // g g^-1 a g == g a g^-1 g
      if (s.product(s.product(ggi, a), g) != s.product(s.product(g, a), s.product(gi, g))) {
        in = false;
        break;
      }
    }
    if (in) z.set(g);
  }
  return z;
}

Subset metacenter(const InverseSemigroup& s) {
  Subset z = z_of(s, Subset::full(s.order()));
  if (!classical_center(s).subset_of(z))
    throw theorem_mismatch("classical center escapes the metacenter");
  return z;
}

Tolerance xi_relation(const InverseSemigroup& s) {
  const int n = s.order();
  Tolerance xi(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool rel = true;
      for (int x = 0; x < n && rel; ++x)
        rel = s.product(s.product(a, x), b) == s.product(s.product(b, x), a);
      if (rel) xi.add(a, b);
    }
  return xi;
}

} // namespace isw
