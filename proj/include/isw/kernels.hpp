#ifndef ISW_KERNELS_HPP
#define ISW_KERNELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "isw/inverse_semigroup.hpp"
#include "isw/partition.hpp"
#include "isw/term.hpp"
#include "isw/tolerance.hpp"

// Exhaustive-scan kernels. Each scan exists in two builds: a plain serial
// reference implementation, and an OpenMP kernel that parallelizes the outer
// pair loop. Both produce identical results (including witnesses) regardless
// of schedule; the test suite compares them and bench/ measures them.
namespace isw::kernels {

enum class Mode { serial, parallel };

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Witness against TC(t, alpha, beta): a alpha b, u_i beta v_i,
// t(a,u) = t(a,v) but t(b,u) != t(b,v). Witnesses are ordered by the
// interleaved tuple (a, b, u_1, v_1, ..., u_n, v_n); scans return the least.
struct TcWitness {
  int a = 0;
  int b = 0;
  std::vector<int> u; // per variable 1..arity-1
  std::vector<int> v;

  std::vector<int> interleaved() const;
  bool operator==(const TcWitness& o) const { return a == o.a && b == o.b && u == o.u && v == o.v; }
};

// Scans the term condition TC(t, alpha, beta); nullopt means TC holds.
// Iteration space is |alpha pairs| * |beta pairs|^(used variables); when that
// exceeds the budget the scan refuses upfront (budget_exceeded) instead of
// sampling.
std::optional<TcWitness> tc_scan(const InverseSemigroup& s, const Term& t,
                                 const Partition& alpha, const Partition& beta,
                                 std::uint64_t budget = kDefaultBudget,
                                 Mode mode = Mode::parallel);

// Relation {(a,b) : lhs(a,b,z) = rhs(a,b,z) for every z-assignment}, where
// lhs/rhs share an arity with variables 0 = a, 1 = b and the rest z's.
// Requires the swap symmetry lhs(b,a,.) = rhs(a,b,.) (Mal'cev word pairs have
// it), so only unordered pairs are scanned. Budget covers pairs * |S|^z.
Tolerance word_equality_scan(const InverseSemigroup& s, const Term& lhs, const Term& rhs,
                             std::uint64_t budget = kDefaultBudget, Mode mode = Mode::parallel);

// Ordered saturated pairs of a partition: all (x, y) with x ~ y including the
// diagonal, lexicographic. This is the tuple space of one TC variable.
std::vector<std::pair<int, int>> saturated_pairs(const Partition& p);

// Ordered distinct related pairs, lexicographic.
std::vector<std::pair<int, int>> distinct_pairs(const Partition& p);

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

} // namespace isw::kernels

#endif
