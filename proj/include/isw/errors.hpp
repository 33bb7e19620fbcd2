#ifndef ISW_ERRORS_HPP
#define ISW_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isw {

// Base class for all library errors. `code()` is a stable machine-readable
// identifier (used verbatim in CLI witness output); `witness()` carries the
// offending elements, whose meaning depends on the code.
class error : public std::runtime_error {
public:
  error(std::string code, const std::string& msg, std::vector<int> witness = {})
      : std::runtime_error(msg), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

private:
  std::string code_;
  std::vector<int> witness_;
};

struct parse_error : error {
  explicit parse_error(const std::string& msg) : error("parse_error", msg) {}
};

struct not_associative : error {
  not_associative(int a, int b, int c)
      : error("not_associative",
              "(a*b)*c != a*(b*c) for (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")",
              {a, b, c}) {}
};

struct not_regular : error {
  explicit not_regular(int x)
      : error("not_regular", "element " + std::to_string(x) + " has no inverse", {x}) {}
};

struct idempotents_do_not_commute : error {
  idempotents_do_not_commute(int e, int f)
      : error("idempotents_do_not_commute",
              "idempotents " + std::to_string(e) + " and " + std::to_string(f) +
                  " do not commute",
              {e, f}) {}
};

struct invalid_table : error {
  explicit invalid_table(const std::string& msg) : error("invalid_table", msg) {}
};

struct empty_generator_set : error {
  empty_generator_set() : error("empty_generator_set", "no generators given") {}
};

struct degree_too_large : error {
  explicit degree_too_large(int n)
      : error("degree_too_large", "degree " + std::to_string(n) + " exceeds guard", {n}) {}
};

struct not_a_group : error {
  not_a_group() : error("not_a_group", "argument must be a group (single idempotent)") {}
};

struct links_not_functorial : error {
  links_not_functorial(int e, int f, int g)
      : error("links_not_functorial",
              "linking maps do not compose along " + std::to_string(e) + " >= " +
                  std::to_string(f) + " >= " + std::to_string(g),
              {e, f, g}) {}
};

struct invalid_pair : error {
  explicit invalid_pair(std::vector<int> witness)
      : error("invalid_pair", "(N, eps) is not a congruence pair", std::move(witness)) {}
};

struct order_too_large : error {
  order_too_large(int order, int guard)
      : error("order_too_large",
              "order " + std::to_string(order) + " exceeds guard " + std::to_string(guard),
              {order, guard}) {}
};

struct arity_mismatch : error {
  arity_mismatch(int expected, int got)
      : error("arity_mismatch",
              "term arity " + std::to_string(expected) + ", assignment length " +
                  std::to_string(got),
              {expected, got}) {}
};

struct level_too_large : error {
  level_too_large(int n, int guard)
      : error("level_too_large",
              "Mal'cev level " + std::to_string(n) + " exceeds guard " + std::to_string(guard),
              {n, guard}) {}
};

struct budget_exceeded : error {
  budget_exceeded(std::uint64_t required, std::uint64_t limit)
      : error("budget_exceeded",
              "scan needs " + std::to_string(required) + " iterations, budget is " +
                  std::to_string(limit)),
        required(required), limit(limit) {}
  std::uint64_t required;
  std::uint64_t limit;
};

// Raised when two routes that a theorem makes equal disagree. Firing means
// either the implementation or the theorem is wrong; it is never caught
// internally.
struct theorem_mismatch : error {
  explicit theorem_mismatch(const std::string& what, std::vector<int> witness = {})
      : error("theorem_mismatch", what, std::move(witness)) {}
};

struct characterization_mismatch : error {
  explicit characterization_mismatch(const std::string& what, std::vector<int> witness = {})
      : error("characterization_mismatch", what, std::move(witness)) {}
};

} // namespace isw

#endif
