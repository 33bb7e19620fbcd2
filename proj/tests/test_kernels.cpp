// Differential tests: the OpenMP kernels must agree with the serial
// reference implementations exactly, witnesses included, on every corpus
// member and congruence pair that fits the budget.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isw/centrality.hpp"
#include "isw/constructions.hpp"
#include "isw/errors.hpp"
#include "isw/kernels.hpp"
#include "isw/partial_bijection.hpp"
#include "isw/series.hpp"

#include "test_util.hpp"

using namespace isw;
using kernels::Mode;

namespace {

bool same_witness(const std::optional<kernels::TcWitness>& a,
                  const std::optional<kernels::TcWitness>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

} // namespace

TEST_CASE("tc_scan: parallel kernel equals the serial reference everywhere") {
  const std::uint64_t budget = std::uint64_t(1) << 62;
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    auto congs = enumerate_congruences(s);
    for (const auto& alpha : congs)
      for (const auto& beta : congs) {
        auto serial = kernels::tc_scan(s, term_m(), alpha, beta, budget, Mode::serial);
        auto parallel = kernels::tc_scan(s, term_m(), alpha, beta, budget, Mode::parallel);
        CHECK(same_witness(serial, parallel));
      }
  }
}

TEST_CASE("tc_scan witnesses are the lexicographically least") {
  // the serial reference scans the interleaved tuple space in order, so its
  // first hit is the least witness; repeated parallel runs must match it
  auto s = symmetric_inverse_monoid(2).algebra;
  const Partition one = Partition::universal(s.order());
  auto serial = kernels::tc_scan(s, term_m(), one, one, std::uint64_t(1) << 40, Mode::serial);
  REQUIRE(serial.has_value());
  for (int run = 0; run < 5; ++run) {
    auto parallel =
        kernels::tc_scan(s, term_m(), one, one, std::uint64_t(1) << 40, Mode::parallel);
    REQUIRE(parallel.has_value());
    CHECK(parallel->interleaved() == serial->interleaved());
  }
}

TEST_CASE("tc_scan handles general terms identically in both modes") {
  // x0^-1 y x0 z with a repeated distinguished variable
  const Term t = Term::make(3, {{0, -1}, {1, 1}, {0, 1}, {2, 1}});
  for (const auto& s : test::corpus_up_to(7)) {
    CAPTURE(s.name());
    auto congs = enumerate_congruences(s);
    for (const auto& alpha : congs) {
      auto serial = kernels::tc_scan(s, t, alpha, Partition::universal(s.order()),
                                     std::uint64_t(1) << 62, Mode::serial);
      auto parallel = kernels::tc_scan(s, t, alpha, Partition::universal(s.order()),
                                       std::uint64_t(1) << 62, Mode::parallel);
      CHECK(same_witness(serial, parallel));
    }
  }
}

TEST_CASE("tc_scan budget refusal is computed upfront") {
  auto s = symmetric_inverse_monoid(2).algebra;
  const Partition one = Partition::universal(s.order());
  CHECK_THROWS_AS(kernels::tc_scan(s, term_m(), one, one, 10, Mode::parallel),
                  budget_exceeded);
  try {
    kernels::tc_scan(s, term_m(), one, one, 10, Mode::serial);
    FAIL("expected budget_exceeded");
  } catch (const budget_exceeded& e) {
    CHECK(e.limit == 10);
    CHECK(e.required == std::uint64_t(7 * 6) * (7 * 7) * (7 * 7));
  }
}

TEST_CASE("word_equality_scan: both modes agree on all malcev levels") {
  for (const auto& s : test::corpus_up_to(10)) {
    CAPTURE(s.name());
    for (int n = 0; n <= 3; ++n) {
      auto w = malcev_words(n);
      auto serial =
          kernels::word_equality_scan(s, w.lambda, w.rho, std::uint64_t(1) << 40, Mode::serial);
      auto parallel = kernels::word_equality_scan(s, w.lambda, w.rho,
                                                  std::uint64_t(1) << 40, Mode::parallel);
      CHECK(serial == parallel);
    }
  }
}

TEST_CASE("word_equality_scan on IS(3) matches across modes") {
  auto s = symmetric_inverse_monoid(3).algebra;
  auto w = malcev_words(2);
  auto serial =
      kernels::word_equality_scan(s, w.lambda, w.rho, std::uint64_t(1) << 40, Mode::serial);
  auto parallel =
      kernels::word_equality_scan(s, w.lambda, w.rho, std::uint64_t(1) << 40, Mode::parallel);
  CHECK(serial == parallel);
}

TEST_CASE("parallel runs are reproducible") {
  auto s = symmetric_inverse_monoid(3).algebra;
  auto w = malcev_words(2);
  auto first =
      kernels::word_equality_scan(s, w.lambda, w.rho, std::uint64_t(1) << 40, Mode::parallel);
  for (int run = 0; run < 3; ++run)
    CHECK(first == kernels::word_equality_scan(s, w.lambda, w.rho, std::uint64_t(1) << 40,
                                               Mode::parallel));
}
