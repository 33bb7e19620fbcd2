#include "isw/json_io.hpp"

#include <fstream>

#include "isw/errors.hpp"

namespace isw::io {

json semigroup_to_json(const InverseSemigroup& s) {
  json j;
  if (!s.name().empty()) j["name"] = s.name();
  j["order"] = s.order();
  json rows = json::array();
  for (int a = 0; a < s.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < s.order(); ++b) row.push_back(s.product(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

InverseSemigroup semigroup_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("expected a JSON object");

  auto name_of = [](const json& obj) -> std::string {
    if (!obj.contains("name")) return "";
    if (!obj.at("name").is_string()) throw parse_error("\"name\" must be a string");
    return obj.at("name").get<std::string>();
  };

  if (j.contains("degree") || j.contains("generators")) {
    auto gens = generators_from_json(j);
    auto built = close_partial_bijections(gens);
    std::string name = name_of(j);
    return name.empty() ? std::move(built.algebra) : built.algebra.with_name(name);
  }

  if (!j.contains("order") || !j.contains("table"))
    throw parse_error("semigroup object needs \"order\" and \"table\"");
  if (!j.at("order").is_number_integer()) throw parse_error("\"order\" must be an integer");
  const int n = j.at("order").get<int>();
  if (n <= 0) throw parse_error("\"order\" must be positive");
  const json& rows = j.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw parse_error("\"table\" must be an order x order array");

  CayleyTable table;
  table.order = n;
  table.product.reserve(static_cast<std::size_t>(n) * n);
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw parse_error("\"table\" must be an order x order array");
    for (const json& cell : row) {
      if (!cell.is_number_integer()) throw parse_error("table entries must be integers");
      table.product.push_back(cell.get<int>());
    }
  }
  return InverseSemigroup::from_cayley_table(std::move(table), name_of(j));
}

json generators_to_json(int degree, const std::vector<PartialBijection>& gens) {
  json j;
  j["degree"] = degree;
  json arr = json::array();
  for (const auto& g : gens) {
    json img = json::array();
    for (int v : g.image()) {
      if (v == PartialBijection::kUndefined)
        img.push_back(nullptr);
      else
        img.push_back(v);
    }
    arr.push_back(std::move(img));
  }
  j["generators"] = std::move(arr);
  return j;
}

std::vector<PartialBijection> generators_from_json(const json& j) {
  if (!j.contains("degree") || !j.at("degree").is_number_integer())
    throw parse_error("generator object needs an integer \"degree\"");
  const int degree = j.at("degree").get<int>();
  if (degree < 0) throw parse_error("\"degree\" must be nonnegative");
  if (!j.contains("generators") || !j.at("generators").is_array())
    throw parse_error("generator object needs a \"generators\" array");

  std::vector<PartialBijection> gens;
  for (const json& img : j.at("generators")) {
    if (!img.is_array() || static_cast<int>(img.size()) != degree)
      throw parse_error("each generator must be an image array of length degree");
    std::vector<int> image;
    for (const json& cell : img) {
      if (cell.is_null())
        image.push_back(PartialBijection::kUndefined);
      else if (cell.is_number_integer())
        image.push_back(cell.get<int>());
      else
        throw parse_error("generator entries must be integers or null");
    }
    gens.push_back(PartialBijection::from_image(std::move(image)));
  }
  return gens;
}

json congruence_to_json(const Partition& p) {
  json j;
  json blocks = json::array();
  for (const auto& b : p.blocks()) blocks.push_back(b);
  j["blocks"] = std::move(blocks);
  return j;
}

Partition congruence_from_json(const json& j, int order) {
  if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array())
    throw parse_error("congruence object needs a \"blocks\" array");
  std::vector<int> ids(order, -1);
  int label = 0;
  for (const json& block : j.at("blocks")) {
    if (!block.is_array()) throw parse_error("blocks must be arrays");
    for (const json& cell : block) {
      int x = cell.get<int>();
      if (x < 0 || x >= order) throw parse_error("block element out of range");
      if (ids[x] != -1) throw parse_error("element repeated across blocks");
      ids[x] = label;
    }
    ++label;
  }
  for (int x = 0; x < order; ++x)
    if (ids[x] < 0) throw parse_error("blocks do not cover the element set");
  return Partition::from_assignment(std::move(ids));
}

json pair_to_json(const InverseSemigroup& s, const Subset& n, const Partition& eps) {
  json j;
  j["kernel"] = n.members();
  json blocks = json::array();
  for (const auto& b : eps.blocks()) {
    json block = json::array();
    for (int pos : b) block.push_back(s.idempotents()[pos]);
    blocks.push_back(std::move(block));
  }
  j["trace_blocks"] = std::move(blocks);
  return j;
}

json term_to_json(const Term& t) {
  json j;
  j["arity"] = t.arity;
  json word = json::array();
  for (auto [v, e] : t.word) word.push_back(json::array({v, e}));
  j["word"] = std::move(word);
  return j;
}

Term term_from_json(const json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("word"))
    throw parse_error("term object needs \"arity\" and \"word\"");
  std::vector<std::pair<int, int>> word;
  for (const json& letter : j.at("word")) {
    if (!letter.is_array() || letter.size() != 2)
      throw parse_error("word letters must be [variable, exponent] pairs");
    word.emplace_back(letter[0].get<int>(), letter[1].get<int>());
  }
  return Term::make(j.at("arity").get<int>(), std::move(word));
}

json tolerance_to_json(const Tolerance& t) {
  json j;
  json pairs = json::array();
  for (auto [a, b] : t.pairs()) pairs.push_back(json::array({a, b}));
  j["pairs"] = std::move(pairs);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write " + path);
  out << dump(j);
  if (!out) throw parse_error("write failed for " + path);
}

} // namespace isw::io
