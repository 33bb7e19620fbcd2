#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "isw/congruence.hpp"
#include "isw/conjugation.hpp"
#include "isw/constructions.hpp"
#include "isw/errors.hpp"
#include "isw/partial_bijection.hpp"

#include "test_util.hpp"

using namespace isw;

TEST_CASE("identity and universal partitions are congruences") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    CHECK(is_congruence(s, Partition(s.order())).ok);
    CHECK(is_congruence(s, Partition::universal(s.order())).ok);
  }
}

TEST_CASE("separating the unit group of IS(2) is not a congruence") {
  auto m = symmetric_inverse_monoid(2);
  const auto& s = m.algebra;
  auto h = green_relations(s).h;
  // the unit group is the H-class of the identity chart
  int id = -1;
  for (int x = 0; x < s.order(); ++x)
    if (m.embedding[x] == PartialBijection::identity(2)) id = x;
  std::vector<int> ids(s.order());
  for (int x = 0; x < s.order(); ++x) ids[x] = h.together(x, id) ? 0 : 1;
  auto r = is_congruence(s, Partition::from_assignment(ids));
  CHECK(!r.ok);
  CHECK(!r.witness.empty());
}

TEST_CASE("congruence_generated") {
  auto chain = chain_semilattice(2);
  CHECK(congruence_generated(chain, {}).is_identity());
  CHECK(congruence_generated(chain, {{1, 1}}).is_identity());
  CHECK(congruence_generated(chain, {{0, 1}}).is_universal());

  SUBCASE("idempotent and monotone") {
    auto s = brandt(trivial_semigroup(), 2);
    auto once = congruence_generated(s, {{0, 1}});
    CHECK(congruence_generated(s, once.related_pairs()) == once);
    auto more = congruence_generated(s, {{0, 1}, {0, 2}});
    CHECK(once.refines(more));
  }
}

TEST_CASE("kernel and trace of the extreme congruences") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    CHECK(kernel(s, Partition(s.order())) == s.idempotent_set());
    CHECK(kernel(s, Partition::universal(s.order())) == Subset::full(s.order()));
    CHECK(trace(s, Partition(s.order())).is_identity());
    CHECK(trace(s, Partition::universal(s.order())).is_universal());
  }
}

TEST_CASE("on a group the kernel is the class of the identity") {
  auto g = symmetric_group(3);
  auto alpha = congruence_generated(g, {{1, 2}}); // collapses A3 cosets or more
  Subset k = kernel(g, alpha);
  const int e = g.idempotents()[0];
  for (int x = 0; x < g.order(); ++x) CHECK(k.test(x) == alpha.together(x, e));
}

TEST_CASE("trace of the maximal idempotent-separating congruence of IS(2) is zero") {
  auto s = symmetric_inverse_monoid(2).algebra;
  Partition mu = ker_psi(s, s.idempotent_set());
  CHECK(trace(s, mu).is_identity());
}

TEST_CASE("congruence pairs") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    CHECK(is_congruence_pair(s, s.idempotent_set(), trace_identity(s)).ok);
    CHECK(is_congruence_pair(s, Subset::full(s.order()), trace_universal(s)).ok);
  }

  SUBCASE("a non-closed kernel candidate on B2 is rejected") {
    auto b2 = brandt(trivial_semigroup(), 2);
    Subset n = b2.idempotent_set();
    n.set(1); // the (1,2) element
    CHECK(!is_congruence_pair(b2, n, trace_identity(b2)).ok);
  }
}

TEST_CASE("congruence_from_pair on the extremes and on group cosets") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    CHECK(congruence_from_pair(s, s.idempotent_set(), trace_identity(s)).is_identity());
    CHECK(congruence_from_pair(s, Subset::full(s.order()), trace_universal(s)).is_universal());
  }

  SUBCASE("Z4 mod {0,2}") {
    auto z4 = cyclic_group(4);
    Subset n = Subset::of(4, {0, 2});
    Partition alpha = congruence_from_pair(z4, n, trace_identity(z4));
    CHECK(alpha.block_count() == 2);
    CHECK(alpha.together(0, 2));
    CHECK(alpha.together(1, 3));
    CHECK(!alpha.together(0, 1));
  }

  SUBCASE("invalid pairs are rejected with a witness") {
    auto b2 = brandt(trivial_semigroup(), 2);
    Subset n = b2.idempotent_set();
    n.set(1);
    CHECK_THROWS_AS(congruence_from_pair(b2, n, trace_identity(b2)), invalid_pair);
  }
}

TEST_CASE("enumerate_congruences matches the raw partition scan on small members") {
  for (const auto& s : test::corpus_up_to(7)) {
    CAPTURE(s.name());
    std::vector<Partition> expected;
    for (auto& p : test::all_partitions(s.order()))
      if (is_congruence(s, p).ok) expected.push_back(p);
    std::sort(expected.begin(), expected.end(), Partition::canonical_less);

    auto got = enumerate_congruences(s);
    CHECK(got == expected);
  }
}

TEST_CASE("congruence counts on named members") {
  CHECK(enumerate_congruences(trivial_semigroup()).size() == 1);
  CHECK(enumerate_congruences(chain_semilattice(2)).size() == 2);
  CHECK(enumerate_congruences(cyclic_group(4)).size() == 3);
}

TEST_CASE("enumeration guard refuses big members") {
  CHECK_THROWS_AS(enumerate_congruences(symmetric_inverse_monoid(3).algebra, 16),
                  order_too_large);
}

TEST_CASE("quotients") {
  for (const auto& s : test::corpus_up_to(9)) {
    CAPTURE(s.name());
    auto q0 = quotient(s, Partition(s.order()));
    CHECK(q0.algebra.raw_table() == s.raw_table());
    auto q1 = quotient(s, Partition::universal(s.order()));
    CHECK(q1.algebra.order() == 1);
  }
}

TEST_CASE("idempotent-separating quotients preserve the idempotent count") {
  for (const auto& s : test::corpus_up_to(9)) {
    CAPTURE(s.name());
    for (const auto& alpha : enumerate_congruences(s)) {
      if (!is_idempotent_separating(s, alpha)) continue;
      auto q = quotient(s, alpha);
      CHECK(q.algebra.idempotents().size() == s.idempotents().size());
    }
  }
}

TEST_CASE("idempotent classes of a quotient lift to idempotents") {
  for (const auto& s : test::corpus_up_to(9)) {
    CAPTURE(s.name());
    for (const auto& alpha : enumerate_congruences(s)) {
      auto q = quotient(s, alpha);
      for (int c : q.algebra.idempotents()) {
        bool has_idempotent = false;
        for (int e : s.idempotents()) has_idempotent |= q.projection[e] == c;
        CHECK(has_idempotent);
      }
    }
  }
}

TEST_CASE("is_idempotent_separating extremes") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    CHECK(is_idempotent_separating(s, Partition(s.order())));
    if (s.idempotents().size() >= 2)
      CHECK(!is_idempotent_separating(s, Partition::universal(s.order())));
  }
}

TEST_CASE("maximal idempotent-separating congruence of IS(2) is ker(Psi_E)") {
  auto s = symmetric_inverse_monoid(2).algebra;
  Partition mu = ker_psi(s, s.idempotent_set());
  for (const auto& alpha : enumerate_congruences(s))
    if (is_idempotent_separating(s, alpha)) CHECK(alpha.refines(mu));
  CHECK(is_idempotent_separating(s, mu));
}

TEST_CASE("kernel-trace round trip over all enumerated congruences") {
  for (const auto& s : test::corpus_up_to(9)) {
    CAPTURE(s.name());
    for (const auto& alpha : enumerate_congruences(s)) {
      Subset n = kernel(s, alpha);
      CHECK(is_normal(s, n).ok);
      Partition eps = trace(s, alpha);
      CHECK(is_congruence_pair(s, n, eps).ok);
      CHECK(congruence_from_pair(s, n, eps) == alpha);
    }
  }
}

TEST_CASE("pair round trip over all enumerated valid pairs") {
  for (const auto& s : test::corpus_up_to(9)) {
    CAPTURE(s.name());
    auto normals = enumerate_normal_subsemigroups(s);
    auto esl = idempotent_semilattice(s);

    for (const auto& n : normals)
      for (const auto& eps : enumerate_congruences(esl)) {
        if (!is_congruence_pair(s, n, eps).ok) continue;
        Partition alpha = congruence_from_pair(s, n, eps);
        CHECK(kernel(s, alpha) == n);
        CHECK(trace(s, alpha) == eps);
      }
  }
}

TEST_CASE("Mitsch: idempotent-separating pairs are exactly the E-centralizing kernels") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    for (const auto& n : enumerate_normal_subsemigroups(s)) {
      bool commutes_with_e = true;
      for (int a : n.members())
        for (int e : s.idempotents())
          commutes_with_e &= s.product(a, e) == s.product(e, a);
      CHECK(is_congruence_pair(s, n, trace_identity(s)).ok == commutes_with_e);
    }
  }
}

TEST_CASE("below H iff trace is zero, over all enumerated congruences") {
  for (const auto& s : test::corpus_up_to(9)) {
    CAPTURE(s.name());
    auto h = green_relations(s).h;
    for (const auto& alpha : enumerate_congruences(s))
      CHECK(alpha.refines(h) == trace(s, alpha).is_identity());
  }
}

TEST_CASE("quotient congruence lattice matches the interval above alpha") {
  for (const auto* name : {"brandt_t2", "z4"}) {
    InverseSemigroup s = trivial_semigroup();
    for (auto& m : standard_corpus())
      if (m.name() == name) s = std::move(m);
    CAPTURE(name);
    auto congs = enumerate_congruences(s);
    for (const auto& alpha : congs) {
      auto q = quotient(s, alpha);
      std::size_t above = 0;
      for (const auto& beta : congs)
        if (alpha.refines(beta)) ++above;
      CHECK(enumerate_congruences(q.algebra).size() == above);
    }
  }
}
