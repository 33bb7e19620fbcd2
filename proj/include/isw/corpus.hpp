#ifndef ISW_CORPUS_HPP
#define ISW_CORPUS_HPP

#include <vector>

#include "isw/inverse_semigroup.hpp"

namespace isw {

// The standard example family used by the CLI corpus command and the whole
// test suite: trivial, chains 2-4, Z2, Z4, S3, D4, Q8, Brandt semigroups over
// the trivial group and Z2, IS(1..3), a commutative and a mixed-class strong
// semilattice of groups, and two direct products. Deterministic order and
// naming.
std::vector<InverseSemigroup> standard_corpus();

} // namespace isw

#endif
