#ifndef ISW_CONGRUENCE_HPP
#define ISW_CONGRUENCE_HPP

#include <string>
#include <utility>
#include <vector>

#include "isw/inverse_semigroup.hpp"
#include "isw/partition.hpp"
#include "isw/subset.hpp"

namespace isw {

// Boolean check outcome with an optional witness of the violation.
struct CheckResult {
  bool ok = true;
  std::string reason;
  std::vector<int> witness;

  explicit operator bool() const { return ok; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string reason, std::vector<int> witness) {
    return {false, std::move(reason), std::move(witness)};
  }
};

inline constexpr int kDefaultEnumerationGuard = 64;

// A congruence is a Partition over the semigroup elements that is invariant
// under translations and inversion. Multiplication-invariance alone already
// implies inversion-invariance (homomorphic images of inverse semigroups are
// inverse); the check verifies both and treats a divergence as falsifying
// that lemma.
CheckResult is_congruence(const InverseSemigroup& s, const Partition& eq);

// Least congruence containing the given pairs.
Partition congruence_generated(const InverseSemigroup& s,
                               const std::vector<std::pair<int, int>>& pairs);

// Union of the alpha-classes that contain idempotents.
Subset kernel(const InverseSemigroup& s, const Partition& alpha);

// Restriction of alpha to E(S), indexed by idempotent position.
Partition trace(const InverseSemigroup& s, const Partition& alpha);

Partition trace_identity(const InverseSemigroup& s);
Partition trace_universal(const InverseSemigroup& s);

// E(S) as a semilattice in its own right, elements indexed by idempotent
// position; used to enumerate candidate traces.
InverseSemigroup idempotent_semilattice(const InverseSemigroup& s);

// Congruence of the semilattice E(S) (partition over idempotent positions)?
CheckResult is_semilattice_congruence(const InverseSemigroup& s, const Partition& eps);

// (CP1): ae in N and e eps a^-1 a imply a in N.
// (CP2): a^-1 e a eps a^-1 a e for a in N, e in E(S).
// Checks normality of N and both conditions literally, with early-exit
// witnesses; this is the trusted oracle for the characterization tests.
CheckResult is_congruence_pair(const InverseSemigroup& s, const Subset& n, const Partition& eps);

// The unique congruence with kernel N and trace eps:
// a ~ b iff a b^-1 in N and a a^-1 eps b b^-1.
// Throws invalid_pair when (N, eps) fails is_congruence_pair.
Partition congruence_from_pair(const InverseSemigroup& s, const Subset& n, const Partition& eps);

// All congruences: principal congruences closed under pairwise join, sorted
// canonically (finer first, then block signature). Contains 0_S and 1_S.
std::vector<Partition> enumerate_congruences(const InverseSemigroup& s,
                                             int guard = kDefaultEnumerationGuard);

struct QuotientResult {
  InverseSemigroup algebra;
  std::vector<int> projection; // element -> class index
};

// Quotient by a congruence; classes are indexed by minimum representative
// order and the table is revalidated from scratch.
QuotientResult quotient(const InverseSemigroup& s, const Partition& alpha);

// trace(alpha) = identity; cross-checked against alpha <= H.
bool is_idempotent_separating(const InverseSemigroup& s, const Partition& alpha);

// Image of a coarser congruence in the quotient (alpha' / alpha).
Partition project_congruence(const QuotientResult& q, const Partition& coarser);

// Pullback of a quotient congruence along the projection.
Partition preimage_congruence(const QuotientResult& q, const Partition& on_quotient);

} // namespace isw

#endif
