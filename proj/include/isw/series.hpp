#ifndef ISW_SERIES_HPP
#define ISW_SERIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "isw/centrality.hpp"
#include "isw/congruence.hpp"
#include "isw/term.hpp"
#include "isw/tolerance.hpp"

namespace isw {

// Upper central series: zeta_0 = 0_S, zeta_{i+1} = preimage of the center of
// S / zeta_i. Stored strictly ascending up to stabilization, so at(n) for any
// n is the stable value past the end.
struct CentralSeries {
  std::vector<Partition> zetas;

  const Partition& at(std::size_t n) const {
    return zetas[n < zetas.size() ? n : zetas.size() - 1];
  }
  bool reaches_universal() const { return zetas.back().is_universal(); }
  std::optional<int> nilpotency_class() const {
    for (std::size_t i = 0; i < zetas.size(); ++i)
      if (zetas[i].is_universal()) return static_cast<int>(i);
    return std::nullopt;
  }
};

CentralSeries upper_central_series(const InverseSemigroup& s,
                                   std::uint64_t budget = kernels::kDefaultBudget,
                                   kernels::Mode mode = kernels::Mode::parallel,
                                   int enumeration_guard = kDefaultEnumerationGuard);

struct NilpotenceResult {
  bool nilpotent = false;
  std::optional<int> clazz;
};

// Upper central series reaching 1_S; cross-checked against
// "group and classically nilpotent" (Theorem: nilpotent inverse semigroups
// are nilpotent groups). Disagreement throws theorem_mismatch.
NilpotenceResult is_nilpotent(const InverseSemigroup& s,
                              std::uint64_t budget = kernels::kDefaultBudget,
                              kernels::Mode mode = kernels::Mode::parallel,
                              int enumeration_guard = kDefaultEnumerationGuard);

struct SolvabilityResult {
  bool solvable = false;
  std::optional<int> length;
};

// Breadth-first search over the congruence lattice: an edge alpha -> alpha'
// exists when alpha'/alpha is abelian in S/alpha; solvable iff 1_S is
// reachable from 0_S, length = shortest chain. Cross-checked against
// "group and classically solvable".
SolvabilityResult is_solvable(const InverseSemigroup& s,
                              std::uint64_t budget = kernels::kDefaultBudget,
                              kernels::Mode mode = kernels::Mode::parallel,
                              int enumeration_guard = kDefaultEnumerationGuard);

// Ascending kernel series Z_n(S) = kernel(zeta_n(S)); KMM-nilpotent when some
// Z_n equals S.
struct KmmSeries {
  std::vector<Subset> kernels;
  bool nilpotent = false;
  std::optional<int> clazz;
};

KmmSeries kmm_kernel_series(const InverseSemigroup& s,
                            std::uint64_t budget = kernels::kDefaultBudget,
                            kernels::Mode mode = kernels::Mode::parallel,
                            int enumeration_guard = kDefaultEnumerationGuard);

inline constexpr int kDefaultMalcevGuard = 4;

// lambda_0 = a, rho_0 = b, lambda_{n+1} = lambda_n z_n rho_n,
// rho_{n+1} = rho_n z_n lambda_n, over variables a=0, b=1, z_i = i+2.
struct MalcevWord {
  int level = 0;
  Term lambda;
  Term rho;
};

MalcevWord malcev_words(int n, int guard = kDefaultMalcevGuard);

// mu_n: a related to b iff lambda_n = rho_n under every z-assignment.
// Check the tolerance axioms with is_tolerance; componentwise-product closure
// is not guaranteed (it fails for mu_2 on IS(2)).
Tolerance malcev_tolerance(const InverseSemigroup& s, int n,
                           std::uint64_t budget = kernels::kDefaultBudget,
                           kernels::Mode mode = kernels::Mode::parallel);

// mu_n is the universal relation.
bool is_malcev_nilpotent(const InverseSemigroup& s, int n,
                         std::uint64_t budget = kernels::kDefaultBudget,
                         kernels::Mode mode = kernels::Mode::parallel);

// Least n <= max_n with mu_n universal.
std::optional<int> malcev_class(const InverseSemigroup& s, int max_n,
                                std::uint64_t budget = kernels::kDefaultBudget,
                                kernels::Mode mode = kernels::Mode::parallel);

// Reflexivity, symmetry, compatibility with product and inversion.
CheckResult is_tolerance(const InverseSemigroup& s, const Tolerance& rel);

// The open problem: does zeta_n(S) = H intersect mu_n? Holds for n <= 1 by
// theorem and for n = 2 by the authors' machine verification; for n >= 3 the
// outcome is evidence, not an assertion.
struct ConjectureResult {
  bool holds = false;
  Partition zeta_n;
  Tolerance h_and_mu;
  std::optional<std::pair<int, int>> witness; // a pair in the symmetric difference
};

ConjectureResult conjecture_check(const InverseSemigroup& s, int n,
                                  std::uint64_t budget = kernels::kDefaultBudget,
                                  kernels::Mode mode = kernels::Mode::parallel,
                                  int enumeration_guard = kDefaultEnumerationGuard);

} // namespace isw

#endif
