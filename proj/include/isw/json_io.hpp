#ifndef ISW_JSON_IO_HPP
#define ISW_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "isw/inverse_semigroup.hpp"
#include "isw/partial_bijection.hpp"
#include "isw/partition.hpp"
#include "isw/term.hpp"
#include "isw/tolerance.hpp"

// Serialization. Keys are emitted in a fixed canonical order and dumps are
// byte-stable: parsing an emitted document and dumping it again reproduces
// the bytes.
namespace isw::io {

using json = nlohmann::ordered_json;

// {"name": ..., "order": n, "table": [[...], ...]}; name omitted when empty.
json semigroup_to_json(const InverseSemigroup& s);

// Accepts the Cayley-table format above or the partial-bijection generator
// format {"degree": n, "generators": [[img_or_null, ...], ...]}. Structural
// problems throw parse_error; algebraic validation failures propagate from
// from_cayley_table.
InverseSemigroup semigroup_from_json(const json& j);

json generators_to_json(int degree, const std::vector<PartialBijection>& gens);
std::vector<PartialBijection> generators_from_json(const json& j);

// {"blocks": [[i, ...], ...]} in canonical block order.
json congruence_to_json(const Partition& p);
Partition congruence_from_json(const json& j, int order);

// {"kernel": [i, ...], "trace_blocks": [[e, ...], ...]} with trace blocks
// listing idempotent elements of S.
json pair_to_json(const InverseSemigroup& s, const Subset& n, const Partition& eps);

// {"arity": n, "word": [[var, exp], ...]}.
json term_to_json(const Term& t);
Term term_from_json(const json& j);

// {"pairs": [[i, j], ...]} with i <= j.
json tolerance_to_json(const Tolerance& t);

std::string dump(const json& j);

json parse_file(const std::string& path); // I/O and syntax errors -> parse_error
void write_file(const std::string& path, const json& j);

} // namespace isw::io

#endif
