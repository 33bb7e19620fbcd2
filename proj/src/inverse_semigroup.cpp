#include "isw/inverse_semigroup.hpp"

#include "isw/errors.hpp"

namespace isw {

InverseSemigroup InverseSemigroup::from_cayley_table(CayleyTable table, std::string name,
                                                     int max_order) {
  const int n = table.order;
  if (n <= 0) throw invalid_table("order must be positive");
  if (n > max_order) throw order_too_large(n, max_order);
  if (table.product.size() != static_cast<std::size_t>(n) * n)
    throw invalid_table("table size does not match order");
  for (int v : table.product)
    if (v < 0 || v >= n) throw invalid_table("table entry out of range");

  const int* t = table.product.data();
  auto mul = [&](int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) throw not_associative(a, b, c);
    }

  // regularity: every x has some x' with xx'x = x and x'xx' = x'
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y) {
        inv[x] = y;
        break;
      }
    if (inv[x] < 0) throw not_regular(x);
  }

  std::vector<int> idempotents;
  for (int e = 0; e < n; ++e)
    if (mul(e, e) == e) idempotents.push_back(e);
  for (int e : idempotents)
    for (int f : idempotents)
      if (mul(e, f) != mul(f, e)) throw idempotents_do_not_commute(e, f);

  // uniqueness is a consequence of the above; scan anyway
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (int y = 0; y < n; ++y)
      if (mul(mul(x, y), x) == x && mul(mul(y, x), y) == y) {
        if (found >= 0)
          throw theorem_mismatch("regular with commuting idempotents but inverses not unique",
                                 {x, found, y});
        found = y;
      }
    inv[x] = found;
  }

  InverseSemigroup s;
  s.order_ = n;
  s.table_ = std::move(table.product);
  s.inv_ = std::move(inv);
  s.idempotents_ = std::move(idempotents);
  s.idem_pos_.assign(n, -1);
  for (std::size_t i = 0; i < s.idempotents_.size(); ++i)
    s.idem_pos_[s.idempotents_[i]] = static_cast<int>(i);
  s.name_ = std::move(name);
  return s;
}

GreenRelations green_relations(const InverseSemigroup& s) {
  const int n = s.order();
  std::vector<int> lkey(n), rkey(n);
  for (int a = 0; a < n; ++a) {
    lkey[a] = s.product(s.inverse(a), a);
    rkey[a] = s.product(a, s.inverse(a));
  }
  GreenRelations g;
  g.l = Partition::from_assignment(lkey);
  g.r = Partition::from_assignment(rkey);
  g.h = g.l.meet(g.r);
  return g;
}

Subset classical_center(const InverseSemigroup& s) {
  const int n = s.order();
  Subset c(n);
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int x = 0; x < n && central; ++x)
      central = s.product(a, x) == s.product(x, a);
    if (central) c.set(a);
  }
  return c;
}

bool is_clifford(const InverseSemigroup& s) {
  for (int e : s.idempotents())
    for (int x = 0; x < s.order(); ++x)
      if (s.product(e, x) != s.product(x, e)) return false;
  return true;
}

bool is_group(const InverseSemigroup& s) { return s.idempotents().size() == 1; }

bool is_commutative(const InverseSemigroup& s) {
  for (int a = 0; a < s.order(); ++a)
    for (int b = a + 1; b < s.order(); ++b)
      if (s.product(a, b) != s.product(b, a)) return false;
  return true;
}

bool is_inverse_subsemigroup(const InverseSemigroup& s, const Subset& x) {
  for (int a : x.members()) {
    if (!x.test(s.inverse(a))) return false;
    for (int b : x.members())
      if (!x.test(s.product(a, b))) return false;
  }
  return true;
}

} // namespace isw
