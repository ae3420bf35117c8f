#pragma once

// A small language for set expressions and laws.
//
//   law  := expr rel expr
//   rel  := "==" | "<="                 ("<=" is ⊆)
//   expr := name "(" expr {"," expr} ")" | var | "empty" | "X"
//   var  := single uppercase letter other than X
//
// `name` is union, inter, diff (binary), compl (unary) or any operator alias
// (unary). Free variables are universally quantified.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idealtop/laws.hpp"
#include "idealtop/operators.hpp"

namespace idealtop::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expr {
  enum class Kind { Var, Empty, Universe, Union, Inter, Diff, Compl, Apply };
  Kind kind = Kind::Empty;
  char var = 0;                     ///< Kind::Var
  std::string alias;                ///< Kind::Apply, as written
  std::optional<Operator> op;       ///< Kind::Apply
  std::vector<Expr> args;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.var == b.var && a.alias == b.alias && a.args == b.args;
  }
};

struct LawAst {
  Expr lhs;
  Relation relation = Relation::Eq;
  Expr rhs;
  /// Variables of both sides in first-occurrence order.
  std::vector<char> free_vars;

  friend bool operator==(const LawAst&, const LawAst&) = default;
};

[[nodiscard]] Expr parse_expr(std::string_view text);
[[nodiscard]] LawAst parse_law(std::string_view text);

[[nodiscard]] std::string to_string(const Expr& e);
[[nodiscard]] std::string to_string(const LawAst& law);

/// Variable values keyed by letter.
class Bindings {
 public:
  void set(char var, Subset value) { values_[index(var)] = value; }
  [[nodiscard]] std::optional<Subset> get(char var) const { return values_[index(var)]; }

 private:
  static std::size_t index(char var) {
    if (var < 'A' || var > 'Z') throw EvalError(std::string("invalid variable name '") + var + "'");
    return static_cast<std::size_t>(var - 'A');
  }
  std::array<std::optional<Subset>, 26> values_{};
};

/// Direct structural evaluation. Throws EvalError on an unbound variable.
[[nodiscard]] Subset eval_expr(const Space& space, const Bindings& bindings, const Expr& expr);

struct CheckOptions {
  int max_vars = 3;
};

struct LawScan {
  Verdict verdict;
  std::uint64_t assignments = 0;  ///< assignments evaluated before stopping
};

/// Evaluates the law for every assignment of its free variables, the first
/// variable varying slowest, each over subsets in increasing bit order.
/// Throws EvalError when the law has more free variables than allowed.
[[nodiscard]] LawScan scan_law(const Space& space, const LawAst& law, const CheckOptions& options = {});
[[nodiscard]] inline Verdict check_law(const Space& space, const LawAst& law, const CheckOptions& options = {}) {
  return scan_law(space, law, options).verdict;
}

/// Re-evaluates a Violated verdict with eval_expr and confirms the sides differ
/// as reported.
[[nodiscard]] bool revalidate(const Space& space, const LawAst& law, const Verdict& verdict);

/// DSL texts equivalent to a registry law (kuratowski:<op> gives four, in axiom
/// order). Empty for family predicates, which have no pointwise form.
[[nodiscard]] std::vector<std::string> transliterate(std::string_view law_name);

}  // namespace idealtop::dsl
