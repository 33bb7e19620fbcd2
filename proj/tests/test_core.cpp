#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isw/constructions.hpp"
#include "isw/conjugation.hpp"
#include "isw/errors.hpp"
#include "isw/inverse_semigroup.hpp"
#include "isw/partial_bijection.hpp"

#include "test_util.hpp"

using namespace isw;

TEST_CASE("one-element table is the trivial group") {
  auto s = InverseSemigroup::from_cayley_table(CayleyTable{1, {0}});
  CHECK(s.order() == 1);
  CHECK(s.idempotents() == std::vector<int>{0});
  CHECK(is_group(s));
}

TEST_CASE("2-chain semilattice validates with identity inversion") {
  auto s = chain_semilattice(2);
  CHECK(s.idempotents().size() == 2);
  for (int x = 0; x < 2; ++x) CHECK(s.inverse(x) == x);
}

TEST_CASE("brandt table round-trips through from_cayley_table") {
  auto b2 = brandt(trivial_semigroup(), 2);
  auto again = InverseSemigroup::from_cayley_table(CayleyTable{b2.order(), b2.raw_table()});
  CHECK(again.order() == b2.order());
  CHECK(again.raw_table() == b2.raw_table());
  CHECK(again.idempotents() == b2.idempotents());
}

TEST_CASE("validation errors carry witnesses") {
  SUBCASE("not associative") {
    // x*y = y except 1*1 = 0 breaks (1*1)*1 = 0*1 = 1 vs 1*(1*1) = 1*0 = 0
    CayleyTable t{2, {0, 1, 0, 0}};
    CHECK_THROWS_AS(InverseSemigroup::from_cayley_table(t), not_associative);
  }
  SUBCASE("not regular") {
    CayleyTable t{2, {0, 0, 0, 0}}; // null semigroup: 1 has no inverse
    try {
      InverseSemigroup::from_cayley_table(t);
      FAIL("expected not_regular");
    } catch (const not_regular& e) {
      CHECK(e.witness() == std::vector<int>{1});
    }
  }
  SUBCASE("idempotents do not commute") {
    CayleyTable t{2, {0, 0, 1, 1}}; // left-zero band
    try {
      InverseSemigroup::from_cayley_table(t);
      FAIL("expected idempotents_do_not_commute");
    } catch (const idempotents_do_not_commute& e) {
      CHECK(e.witness().size() == 2);
    }
  }
  SUBCASE("entry out of range") {
    CHECK_THROWS_AS(InverseSemigroup::from_cayley_table(CayleyTable{1, {3}}), invalid_table);
  }
}

TEST_CASE("inverse semigroup axioms hold on the whole corpus") {
  for (const auto& s : standard_corpus()) {
    CAPTURE(s.name());
    for (int x = 0; x < s.order(); ++x) {
      const int xi = s.inverse(x);
      CHECK(s.product(s.product(x, xi), x) == x);
      CHECK(s.product(s.product(xi, x), xi) == xi);
      CHECK(s.inverse(xi) == x);
      for (int y = 0; y < s.order(); ++y)
        CHECK(s.inverse(s.product(x, y)) == s.product(s.inverse(y), s.inverse(x)));
    }
    for (int e : s.idempotents())
      for (int f : s.idempotents()) {
        CHECK(s.is_idempotent(s.product(e, f)));
        CHECK(s.product(e, f) == s.product(f, e));
      }
  }
}

TEST_CASE("partial bijection closure of all charts on 2 points is IS(2)") {
  auto gens = all_partial_bijections(2);
  CHECK(gens.size() == test::count_injective_partial_maps(2));
  auto g = close_partial_bijections(gens);
  CHECK(g.algebra.order() == 7);
}

TEST_CASE("single full cycle generates a group; empty map generates a point") {
  auto cycle = PartialBijection::from_image({1, 0});
  auto g = close_partial_bijections({cycle});
  CHECK(g.algebra.order() == 2);
  CHECK(is_group(g.algebra));

  auto z = close_partial_bijections({PartialBijection(2)});
  CHECK(z.algebra.order() == 1);
}

TEST_CASE("closure rejects an empty generator set") {
  CHECK_THROWS_AS(close_partial_bijections({}), empty_generator_set);
}

TEST_CASE("embedding is a multiplicative isomorphism onto its image") {
  auto g = symmetric_inverse_monoid(2);
  const auto& s = g.algebra;
  for (int x = 0; x < s.order(); ++x) {
    CHECK(g.embedding[x].inverse() == g.embedding[s.inverse(x)]);
    for (int y = 0; y < s.order(); ++y)
      CHECK(g.embedding[x].compose(g.embedding[y]) == g.embedding[s.product(x, y)]);
  }
  for (int x = 0; x < s.order(); ++x)
    for (int y = x + 1; y < s.order(); ++y) CHECK(!(g.embedding[x] == g.embedding[y]));
}

TEST_CASE("IS(n) orders match the direct enumeration of injective partial maps") {
  CHECK(symmetric_inverse_monoid(1).algebra.order() == test::count_injective_partial_maps(1));
  CHECK(symmetric_inverse_monoid(1).algebra.order() == 2);
  CHECK(symmetric_inverse_monoid(2).algebra.order() == test::count_injective_partial_maps(2));
  CHECK(symmetric_inverse_monoid(2).algebra.order() == 7);
  CHECK(symmetric_inverse_monoid(3).algebra.order() == test::count_injective_partial_maps(3));
  CHECK(symmetric_inverse_monoid(3).algebra.order() == 34);
  CHECK_THROWS_AS(symmetric_inverse_monoid(5), degree_too_large);
  CHECK_THROWS_AS(symmetric_inverse_monoid(0), degree_too_large);
}

TEST_CASE("closure element order is deterministic") {
  auto a = symmetric_inverse_monoid(3);
  auto b = symmetric_inverse_monoid(3);
  CHECK(a.algebra.raw_table() == b.algebra.raw_table());
  for (std::size_t i = 0; i < a.embedding.size(); ++i) CHECK(a.embedding[i] == b.embedding[i]);
}

TEST_CASE("brandt semigroups") {
  auto b2 = brandt(trivial_semigroup(), 2);
  CHECK(b2.order() == 5);
  CHECK(b2.idempotents().size() == 3);

  CHECK(brandt(trivial_semigroup(), 1).order() == 2);

  auto bz = brandt(cyclic_group(2), 2);
  CHECK(bz.order() == 2 * 2 * 2 + 1);
  CHECK_THROWS_AS(brandt(chain_semilattice(2), 2), not_a_group);
}

TEST_CASE("strong semilattices of groups") {
  SUBCASE("identity-linked Z2 chain is commutative Clifford of order 4") {
    auto s = strong_semilattice_of_groups(chain_semilattice(2),
                                          {cyclic_group(2), cyclic_group(2)},
                                          {{{0, 1}, {0, 1}}});
    CHECK(s.order() == 4);
    CHECK(is_clifford(s));
    CHECK(is_commutative(s));
  }
  SUBCASE("S3 over trivial is a noncommutative Clifford semigroup of order 7") {
    auto s = strong_semilattice_of_groups(chain_semilattice(2),
                                          {symmetric_group(3), trivial_semigroup()},
                                          {{{0, 1}, {0, 0, 0, 0, 0, 0}}});
    CHECK(s.order() == 7);
    CHECK(is_clifford(s));
    CHECK(!is_commutative(s));
    CHECK(classical_center(s) == metacenter(s));
  }
  SUBCASE("one-point lattice returns the group itself") {
    auto s = strong_semilattice_of_groups(trivial_semigroup(), {symmetric_group(3)}, {});
    CHECK(s.raw_table() == symmetric_group(3).raw_table());
  }
  SUBCASE("non-composing links are rejected") {
    // 3-chain with Z2 components; the long edge contradicts the two short ones
    std::map<std::pair<int, int>, std::vector<int>> links{
        {{0, 1}, {0, 1}}, {{1, 2}, {0, 1}}, {{0, 2}, {0, 0}}};
    CHECK_THROWS_AS(strong_semilattice_of_groups(
                        chain_semilattice(3),
                        {cyclic_group(2), cyclic_group(2), cyclic_group(2)}, links),
                    links_not_functorial);
  }
}

TEST_CASE("direct products") {
  auto s = symmetric_group(3);
  auto p = direct_product(trivial_semigroup(), s);
  CHECK(p.raw_table() == s.raw_table());

  auto sq = direct_product(chain_semilattice(2), chain_semilattice(2));
  CHECK(sq.order() == 4);
  CHECK(static_cast<int>(sq.idempotents().size()) == 4);

  auto bz = direct_product(brandt(trivial_semigroup(), 2), cyclic_group(2));
  CHECK(bz.order() == 10);
  CHECK(bz.idempotents().size() == 3 * 1);
}

TEST_CASE("green relations by the equational criteria") {
  SUBCASE("groups are a single class") {
    auto g = green_relations(symmetric_group(3));
    CHECK(g.l.is_universal());
    CHECK(g.r.is_universal());
    CHECK(g.h.is_universal());
  }
  SUBCASE("semilattices are discrete") {
    auto g = green_relations(chain_semilattice(4));
    CHECK(g.l.is_identity());
    CHECK(g.h.is_identity());
  }
  SUBCASE("IS(2) H-classes are five singletons plus the unit group") {
    auto m = symmetric_inverse_monoid(2);
    auto g = green_relations(m.algebra);
    std::vector<int> sizes;
    for (const auto& b : g.h.blocks()) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 1, 1, 1, 2});
    // the two-element class is the unit group {id, (01)}
    int id = -1, swap = -1;
    for (int x = 0; x < 7; ++x) {
      if (m.embedding[x] == PartialBijection::identity(2)) id = x;
      if (m.embedding[x] == PartialBijection::from_image({1, 0})) swap = x;
    }
    CHECK(g.h.together(id, swap));
  }
}

TEST_CASE("equational green relations match the u,v-witness definition") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    auto g = green_relations(s);
    for (int a = 0; a < s.order(); ++a)
      for (int b = 0; b < s.order(); ++b) {
        CHECK(g.l.together(a, b) == test::green_l_by_witness(s, a, b));
        CHECK(g.r.together(a, b) == test::green_r_by_witness(s, a, b));
        CHECK(g.h.together(a, b) ==
              (test::green_l_by_witness(s, a, b) && test::green_r_by_witness(s, a, b)));
      }
  }
}

TEST_CASE("L is a right congruence and R is a left congruence") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    auto g = green_relations(s);
    for (int a = 0; a < s.order(); ++a)
      for (int b = 0; b < s.order(); ++b) {
        if (!g.l.together(a, b) && !g.r.together(a, b)) continue;
        for (int x = 0; x < s.order(); ++x) {
          if (g.l.together(a, b)) CHECK(g.l.together(s.product(a, x), s.product(b, x)));
          if (g.r.together(a, b)) CHECK(g.r.together(s.product(x, a), s.product(x, b)));
        }
      }
  }
}

TEST_CASE("classical centers") {
  CHECK(classical_center(cyclic_group(4)).count() == 4);
  CHECK(classical_center(chain_semilattice(3)).count() == 3);

  auto b2 = brandt(trivial_semigroup(), 2);
  // zero is the last element; brute scan below confirms it is the only one
  Subset c = classical_center(b2);
  CHECK(c.members() == std::vector<int>{b2.order() - 1});
  for (int a = 0; a < b2.order(); ++a) {
    bool commutes = true;
    for (int x = 0; x < b2.order(); ++x) commutes &= b2.product(a, x) == b2.product(x, a);
    CHECK(commutes == c.test(a));
  }

  auto s3 = symmetric_group(3);
  CHECK(classical_center(s3).count() == 1);
  CHECK(classical_center(s3).test(s3.idempotents()[0]));
}

TEST_CASE("clifford and group predicates") {
  CHECK(is_clifford(quaternion_group()));
  CHECK(is_clifford(chain_semilattice(3)));
  CHECK(!is_clifford(brandt(trivial_semigroup(), 2)));

  CHECK(is_group(trivial_semigroup()));
  CHECK(!is_group(symmetric_inverse_monoid(2).algebra));
  CHECK(symmetric_inverse_monoid(2).algebra.idempotents().size() == 4);
  CHECK(!is_group(brandt(trivial_semigroup(), 2)));
}

TEST_CASE("classical center sits inside the metacenter, corpus-wide") {
  for (const auto& s : standard_corpus()) {
    CAPTURE(s.name());
    CHECK(classical_center(s).subset_of(metacenter(s)));
  }
}
