#ifndef ISW_CONJUGATION_HPP
#define ISW_CONJUGATION_HPP

#include <vector>

#include "isw/congruence.hpp"
#include "isw/inverse_semigroup.hpp"
#include "isw/tolerance.hpp"

namespace isw {

// Normal inverse subsemigroup: full (contains E(S)), closed under product,
// inversion and conjugation g^-1 N g <= N.
CheckResult is_normal(const InverseSemigroup& s, const Subset& n);

// Least normal inverse subsemigroup containing x.
Subset normal_closure(const InverseSemigroup& s, const Subset& x);

// All normal inverse subsemigroups, sorted by (size, member list). Found by
// closing E(S) and repeatedly adjoining single elements; every member of the
// closure system is reachable that way.
std::vector<Subset> enumerate_normal_subsemigroups(const InverseSemigroup& s,
                                                   int guard = kDefaultEnumerationGuard);

// psi_g restricted to N: a -> g a g^-1. Total on N, lands in N.
struct TotalConjugationMap {
  Subset domain;          // = N
  std::vector<int> image; // indexed by element, -1 off N

  bool operator==(const TotalConjugationMap& o) const {
    return domain == o.domain && image == o.image;
  }
};

// phi_g : g^-1 N g -> g N g^-1, x -> g x g^-1. Equality is domain equality
// plus pointwise agreement (equality in IS(S)).
struct PartialAutomorphism {
  Subset domain;
  std::vector<int> image; // -1 off domain

  bool operator==(const PartialAutomorphism& o) const {
    return domain == o.domain && image == o.image;
  }

  // Composition in PAut: (this after inner)(x) = this(inner(x)), domain
  // restricted accordingly.
  PartialAutomorphism after(const PartialAutomorphism& inner) const;
};

// g X g^-1 as a set.
Subset conjugate_set(const InverseSemigroup& s, int g, const Subset& x);

TotalConjugationMap psi(const InverseSemigroup& s, const Subset& n, int g);

// Computes phi_g and asserts it is a partial automorphism whose domain obeys
// g^-1 N g = (g^-1 g) N (g^-1 g); violations throw theorem_mismatch.
PartialAutomorphism phi(const InverseSemigroup& s, const Subset& n, int g);

// ker(Psi_N): g ~ h iff psi_g = psi_h pointwise on N. Validated congruence.
Partition ker_psi(const InverseSemigroup& s, const Subset& n);

// ker(Phi_N): g ~ h iff phi_g and phi_h have equal domains and mappings.
Partition ker_phi(const InverseSemigroup& s, const Subset& n);

// Z_S(N) = {g : g g^-1 a g = g a g^-1 g for all a in N}.
Subset z_of(const InverseSemigroup& s, const Subset& n);

// Z(S) = Z_S(S), the metacenter.
Subset metacenter(const InverseSemigroup& s);

// xi = {(a,b) : a x b = b x a for all x}. Symmetric and compatible but not
// transitive in general, hence returned as a Tolerance.
Tolerance xi_relation(const InverseSemigroup& s);

} // namespace isw

#endif
