#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isw/constructions.hpp"
#include "isw/errors.hpp"
#include "isw/json_io.hpp"
#include "isw/partial_bijection.hpp"
#include "isw/series.hpp"

#include "test_util.hpp"

using namespace isw;

TEST_CASE("semigroup serialization is byte-stable across a round trip") {
  for (const auto& s : standard_corpus()) {
    CAPTURE(s.name());
    std::string bytes = io::dump(io::semigroup_to_json(s));
    auto parsed = io::semigroup_from_json(io::json::parse(bytes));
    CHECK(parsed.order() == s.order());
    CHECK(parsed.raw_table() == s.raw_table());
    CHECK(parsed.name() == s.name());
    CHECK(io::dump(io::semigroup_to_json(parsed)) == bytes);
  }
}

TEST_CASE("keys are emitted in canonical order") {
  auto j = io::semigroup_to_json(cyclic_group(2));
  std::string bytes = io::dump(j);
  CHECK(bytes.find("\"name\"") < bytes.find("\"order\""));
  CHECK(bytes.find("\"order\"") < bytes.find("\"table\""));
}

TEST_CASE("generator format round trip builds the same closure") {
  auto gens = all_partial_bijections(2);
  auto j = io::generators_to_json(2, gens);
  auto parsed_gens = io::generators_from_json(j);
  REQUIRE(parsed_gens.size() == gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) CHECK(parsed_gens[i] == gens[i]);

  auto s = io::semigroup_from_json(j);
  CHECK(s.order() == 7);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(io::semigroup_from_json(io::json::parse("[1,2]")), parse_error);
  CHECK_THROWS_AS(io::semigroup_from_json(io::json::parse("{\"order\": 2}")), parse_error);
  CHECK_THROWS_AS(io::semigroup_from_json(io::json::parse("{\"order\": 2, \"table\": [[0]]}")),
                  parse_error);
  CHECK_THROWS_AS(
      io::semigroup_from_json(io::json::parse("{\"degree\": 2, \"generators\": [[0, 0]]}")),
      invalid_table);
  // structurally fine but algebraically invalid: left-zero band
  CHECK_THROWS_AS(
      io::semigroup_from_json(io::json::parse("{\"order\":2,\"table\":[[0,0],[1,1]]}")),
      idempotents_do_not_commute);
}

TEST_CASE("congruence block serialization uses canonical order") {
  auto z4 = cyclic_group(4);
  Partition alpha = congruence_generated(z4, {{0, 2}});
  auto j = io::congruence_to_json(alpha);
  CHECK(j.at("blocks").dump() == "[[0,2],[1,3]]");
  CHECK(io::congruence_from_json(j, 4) == alpha);

  CHECK_THROWS_AS(io::congruence_from_json(io::json::parse("{\"blocks\": [[0]]}"), 2),
                  parse_error);
  CHECK_THROWS_AS(io::congruence_from_json(io::json::parse("{\"blocks\": [[0,0],[1]]}"), 2),
                  parse_error);
}

TEST_CASE("pair serialization lists kernel members and trace blocks") {
  auto b2 = brandt(trivial_semigroup(), 2);
  auto j = io::pair_to_json(b2, b2.idempotent_set(), trace_identity(b2));
  CHECK(j.at("kernel").get<std::vector<int>>() == b2.idempotents());
  CHECK(j.at("trace_blocks").size() == b2.idempotents().size());
}

TEST_CASE("term serialization round trip") {
  auto w = malcev_words(2);
  auto j = io::term_to_json(w.lambda);
  Term t = io::term_from_json(j);
  CHECK(t.arity == w.lambda.arity);
  CHECK(t.word == w.lambda.word);
}

TEST_CASE("tolerance pairs are sorted with i <= j") {
  auto s3 = symmetric_group(3);
  auto j = io::tolerance_to_json(xi_relation(s3));
  std::pair<int, int> prev{-1, -1};
  for (const auto& cell : j.at("pairs")) {
    std::pair<int, int> cur{cell[0].get<int>(), cell[1].get<int>()};
    CHECK(cur.first <= cur.second);
    CHECK(prev < cur);
    prev = cur;
  }
}
