#include "isw/classical_group.hpp"

#include "isw/errors.hpp"
#include "isw/subset.hpp"

namespace isw {

namespace {

int identity_of(const InverseSemigroup& g) {
  if (!is_group(g)) throw not_a_group();
  return g.idempotents()[0];
}

int commutator(const InverseSemigroup& g, int a, int b) {
  return g.product(g.product(g.product(a, b), g.inverse(a)), g.inverse(b));
}

Subset generated_subgroup(const InverseSemigroup& g, Subset seed) {
  seed.set(identity_of(g));
  for (;;) {
    Subset next = seed;
    for (int a : seed.members())
      for (int b : seed.members()) next.set(g.product(a, b));
    if (next == seed) return seed;
    seed = next;
  }
}

} // namespace

std::optional<int> group_nilpotency_class(const InverseSemigroup& g) {
  const int n = g.order();
  Subset z(n);
  z.set(identity_of(g));
  int cls = 0;
  for (;;) {
    if (z.count() == n) return cls;
    Subset next(n);
    for (int x = 0; x < n; ++x) {
      bool in = true;
      for (int y = 0; y < n && in; ++y) in = z.test(commutator(g, x, y));
      if (in) next.set(x);
    }
    if (next == z) return std::nullopt;
    z = next;
    ++cls;
  }
}

std::optional<int> group_derived_length(const InverseSemigroup& g) {
  Subset cur = Subset::full(g.order());
  int len = 0;
  while (cur.count() > 1) {
    Subset comms(g.order());
    for (int a : cur.members())
      for (int b : cur.members()) comms.set(commutator(g, a, b));
    Subset next = generated_subgroup(g, comms);
    if (next == cur) return std::nullopt;
    cur = next;
    ++len;
  }
  return len;
}

} // namespace isw
