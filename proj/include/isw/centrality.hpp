#ifndef ISW_CENTRALITY_HPP
#define ISW_CENTRALITY_HPP

#include <optional>

#include "isw/congruence.hpp"
#include "isw/conjugation.hpp"
#include "isw/kernels.hpp"
#include "isw/term.hpp"

namespace isw {

struct TcResult {
  bool holds = true;
  std::optional<kernels::TcWitness> witness;

  explicit operator bool() const { return holds; }
};

// TC(t, alpha, beta) with variable 0 of t distinguished: for a alpha b and
// u_i beta v_i, t(a,u) = t(a,v) implies t(b,u) = t(b,v).
TcResult tc_check(const InverseSemigroup& s, const Term& t, const Partition& alpha,
                  const Partition& beta, std::uint64_t budget = kernels::kDefaultBudget,
                  kernels::Mode mode = kernels::Mode::parallel);

// alpha centralizes beta iff TC(m, alpha, beta); the m-only reduction is
// validated against centralizes_bruteforce by the acceptance suite.
bool centralizes(const InverseSemigroup& s, const Partition& alpha, const Partition& beta,
                 std::uint64_t budget = kernels::kDefaultBudget,
                 kernels::Mode mode = kernels::Mode::parallel);

// Checks TC(t, alpha, beta) for every normal-form term up to the given word
// length in which variable 0 occurs exactly once and all other positions hold
// fresh variables. Since fresh positions are independent, each term's tuple
// space is scanned exactly through the reachable (prefix, suffix) product
// pairs. Serial; this is the differential oracle for the m-only reduction.
bool centralizes_bruteforce(const InverseSemigroup& s, const Partition& alpha,
                            const Partition& beta, int max_word_length,
                            std::uint64_t budget = kernels::kDefaultBudget);

// alpha centralizes alpha; cross-checked against the congruence-pair
// characterization (trace zero, commutative kernel). Disagreement throws
// characterization_mismatch.
bool is_abelian_congruence(const InverseSemigroup& s, const Partition& alpha,
                           std::uint64_t budget = kernels::kDefaultBudget,
                           kernels::Mode mode = kernels::Mode::parallel);

// alpha centralizes 1_S; cross-checked against (trace zero, kernel inside
// the metacenter).
bool is_central_congruence(const InverseSemigroup& s, const Partition& alpha,
                           std::uint64_t budget = kernels::kDefaultBudget,
                           kernels::Mode mode = kernels::Mode::parallel);

// The center congruence zeta(S), computed four ways: largest central
// congruence (when enumeration fits the guard), ker(Psi_S), ker(Phi_S) and
// H intersect xi. All routes must agree and the congruence pair must be
// (Z(S), 0_E); the common value is returned.
Partition center_congruence(const InverseSemigroup& s,
                            std::uint64_t budget = kernels::kDefaultBudget,
                            kernels::Mode mode = kernels::Mode::parallel,
                            int enumeration_guard = kDefaultEnumerationGuard);

} // namespace isw

#endif
