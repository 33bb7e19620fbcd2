#include "isw/centrality.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "isw/errors.hpp"

namespace isw {

TcResult tc_check(const InverseSemigroup& s, const Term& t, const Partition& alpha,
                  const Partition& beta, std::uint64_t budget, kernels::Mode mode) {
  auto w = kernels::tc_scan(s, t, alpha, beta, budget, mode);
  TcResult r;
  r.holds = !w.has_value();
  r.witness = std::move(w);
  return r;
}

bool centralizes(const InverseSemigroup& s, const Partition& alpha, const Partition& beta,
                 std::uint64_t budget, kernels::Mode mode) {
  return tc_check(s, term_m(), alpha, beta, budget, mode).holds;
}

namespace {

int combine(const InverseSemigroup& s, int acc, int x) {
  return acc < 0 ? x : s.product(acc, x);
}

// Pairs (prod u_i^{e_i}, prod v_i^{e_i}) reachable from beta-related
// assignments of fresh variables with the given sign pattern. Memoized; the
// exact quantifier domain of one side of a single-occurrence term.
class ReachableProducts {
public:
  ReachableProducts(const InverseSemigroup& s, std::vector<std::pair<int, int>> beta_pairs)
      : s_(s), beta_pairs_(std::move(beta_pairs)) {}

  const std::vector<std::pair<int, int>>& get(const std::vector<int>& pattern) {
    auto it = cache_.find(pattern);
    if (it != cache_.end()) return it->second;

    std::set<std::pair<int, int>> acc;
    if (pattern.size() == 1) {
      for (auto [u, v] : beta_pairs_) {
        int uu = pattern[0] < 0 ? s_.inverse(u) : u;
        int vv = pattern[0] < 0 ? s_.inverse(v) : v;
        acc.emplace(uu, vv);
      }
    } else {
      std::vector<int> prefix(pattern.begin(), pattern.end() - 1);
      const int e = pattern.back();
      for (auto [p, q] : get(prefix))
        for (auto [u, v] : beta_pairs_) {
          int uu = e < 0 ? s_.inverse(u) : u;
          int vv = e < 0 ? s_.inverse(v) : v;
          acc.emplace(s_.product(p, uu), s_.product(q, vv));
        }
    }
    return cache_.emplace(pattern, std::vector<std::pair<int, int>>(acc.begin(), acc.end()))
        .first->second;
  }

private:
  const InverseSemigroup& s_;
  std::vector<std::pair<int, int>> beta_pairs_;
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> cache_;
};

} // namespace

bool centralizes_bruteforce(const InverseSemigroup& s, const Partition& alpha,
                            const Partition& beta, int max_word_length, std::uint64_t budget) {
  if (max_word_length < 3)
    throw error("bad_argument", "max_word_length must be at least 3", {max_word_length});

  const auto alpha_pairs = kernels::distinct_pairs(alpha);
  if (alpha_pairs.empty()) return true;
  ReachableProducts reach(s, kernels::saturated_pairs(beta));
  // one-entry stand-in for an empty side of the word
  const std::vector<std::pair<int, int>> empty_side{{-1, -1}};

  std::uint64_t spent = 0;
  std::vector<int> pattern;
  for (int k = 1; k <= max_word_length; ++k) {
    for (int j = 0; j < k; ++j) {
      for (int mask = 0; mask < (1 << k); ++mask) {
        pattern.clear();
        for (int p = 0; p < j; ++p) pattern.push_back((mask >> p) & 1 ? -1 : 1);
        const auto& pre = j == 0 ? empty_side : reach.get(pattern);
        pattern.clear();
        for (int p = j + 1; p < k; ++p) pattern.push_back((mask >> p) & 1 ? -1 : 1);
        const auto& suf = j == k - 1 ? empty_side : reach.get(pattern);
        const int eps = (mask >> j) & 1 ? -1 : 1;

        std::uint64_t cost = kernels::saturating_mul(
            alpha_pairs.size(), kernels::saturating_mul(pre.size(), suf.size()));
        if (cost > budget - spent) {
          std::uint64_t total = cost > std::numeric_limits<std::uint64_t>::max() - spent
                                    ? std::numeric_limits<std::uint64_t>::max()
                                    : spent + cost;
          throw budget_exceeded(total, budget);
        }
        spent += cost;

        for (auto [a, b] : alpha_pairs) {
          const int ax = eps < 0 ? s.inverse(a) : a;
          const int bx = eps < 0 ? s.inverse(b) : b;
          for (auto [pu, pv] : pre) {
            const int pua = combine(s, pu, ax);
            const int pva = combine(s, pv, ax);
            const int pub = combine(s, pu, bx);
            const int pvb = combine(s, pv, bx);
            for (auto [qu, qv] : suf) {
              if (combine(s, pua, qu) == combine(s, pva, qv) &&
                  combine(s, pub, qu) != combine(s, pvb, qv))
                return false;
            }
          }
        }
      }
    }
  }
  return true;
}

namespace {

bool subset_commutative(const InverseSemigroup& s, const Subset& n) {
  const auto members = n.members();
  for (int a : members)
    for (int b : members)
      if (s.product(a, b) != s.product(b, a)) return false;
  return true;
}

} // namespace

bool is_abelian_congruence(const InverseSemigroup& s, const Partition& alpha,
                           std::uint64_t budget, kernels::Mode mode) {
  const bool tc = centralizes(s, alpha, alpha, budget, mode);

  const Subset n = kernel(s, alpha);
  const bool pair_char =
      trace(s, alpha).is_identity() && static_cast<bool>(is_normal(s, n)) && subset_commutative(s, n);

  if (tc != pair_char)
    throw characterization_mismatch("abelianness: TC(m,a,a) disagrees with the pair test");
  return tc;
}

bool is_central_congruence(const InverseSemigroup& s, const Partition& alpha,
                           std::uint64_t budget, kernels::Mode mode) {
  const bool tc = centralizes(s, alpha, Partition::universal(s.order()), budget, mode);

  const Subset n = kernel(s, alpha);
  const bool pair_char = trace(s, alpha).is_identity() && n.subset_of(metacenter(s));

  if (tc != pair_char)
    throw characterization_mismatch("centrality: TC(m,a,1) disagrees with the pair test");
  return tc;
}

Partition center_congruence(const InverseSemigroup& s, std::uint64_t budget, kernels::Mode mode,
                            int enumeration_guard) {
  const Subset everything = Subset::full(s.order());
  Partition k_psi = ker_psi(s, everything);
  Partition k_phi = ker_phi(s, everything);
  if (k_psi != k_phi) throw characterization_mismatch("ker(Psi_S) != ker(Phi_S)");

  Tolerance h_xi = Tolerance::from_partition(green_relations(s).h) & xi_relation(s);
  if (!h_xi.is_transitive())
    throw characterization_mismatch("H intersect xi is not transitive");
  if (h_xi.to_partition() != k_psi)
    throw characterization_mismatch("H intersect xi differs from ker(Psi_S)");

  // largest central congruence over the full enumeration, when it fits
  if (s.order() <= enumeration_guard) {
    std::vector<Partition> central;
    for (const auto& c : enumerate_congruences(s, enumeration_guard))
      if (is_central_congruence(s, c, budget, mode)) central.push_back(c);
    const Partition* largest = nullptr;
    for (const auto& c : central)
      if (!largest || largest->refines(c)) largest = &c;
    if (!largest) throw characterization_mismatch("no central congruence found (0_S is central)");
    for (const auto& c : central)
      if (!c.refines(*largest))
        throw characterization_mismatch("central congruences have no maximum");
    if (*largest != k_psi)
      throw characterization_mismatch("largest central congruence differs from ker(Psi_S)");
  }

  if (kernel(s, k_psi) != metacenter(s))
    throw characterization_mismatch("center congruence kernel differs from Z(S)");
  if (!trace(s, k_psi).is_identity())
    throw characterization_mismatch("center congruence is not idempotent-separating");
  return k_psi;
}

} // namespace isw
