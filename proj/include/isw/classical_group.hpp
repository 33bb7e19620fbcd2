#ifndef ISW_CLASSICAL_GROUP_HPP
#define ISW_CLASSICAL_GROUP_HPP

#include <optional>

#include "isw/inverse_semigroup.hpp"

namespace isw {

// Classical group-theory deciders on Cayley tables, working with element
// subsets only (no congruence machinery). These are the independent side of
// the solvable/nilpotent cross-checks.

// Ascending central series of subgroups Z_0 = {e},
// Z_{i+1} = {g : all commutators [g,x] lie in Z_i}; class when it reaches G.
std::optional<int> group_nilpotency_class(const InverseSemigroup& g);

// Derived series G >= [G,G] >= ...; length when it reaches {e}.
std::optional<int> group_derived_length(const InverseSemigroup& g);

} // namespace isw

#endif
