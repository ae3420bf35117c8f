#include "idealtop/dsl.hpp"

#include <cctype>
#include <map>

namespace idealtop::dsl {

namespace {

Expr leaf(Expr::Kind kind) {
  Expr e;
  e.kind = kind;
  return e;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == ':'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr expr() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end()) throw ParseError("expected an expression, found end of input", pos_);
    if (!ident_start(peek())) throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    std::string name;
    while (!at_end() && ident_char(peek())) name += text_[pos_++];
    skip_ws();
    if (!at_end() && peek() == '(') return call(name, start);

    if (name == "empty") return leaf(Expr::Kind::Empty);
    if (name == "X") return leaf(Expr::Kind::Universe);
    if (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))) {
      Expr e = leaf(Expr::Kind::Var);
      e.var = name[0];
      return e;
    }
    throw ParseError("'" + name + "' is not a variable; operators need an argument list", start);
  }

  LawAst law() {
    LawAst out;
    out.lhs = expr();
    skip_ws();
    if (text_.substr(pos_).starts_with("==")) {
      out.relation = Relation::Eq;
    } else if (text_.substr(pos_).starts_with("<=")) {
      out.relation = Relation::SubsetEq;
    } else {
      throw ParseError("expected '==' or '<='", pos_);
    }
    pos_ += 2;
    out.rhs = expr();
    finish();
    collect_vars(out.lhs, out.free_vars);
    collect_vars(out.rhs, out.free_vars);
    return out;
  }

  void finish() {
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  Expr call(const std::string& name, std::size_t start) {
    Expr e;
    std::size_t arity = 1;
    if (name == "union") {
      e.kind = Expr::Kind::Union, arity = 2;
    } else if (name == "inter") {
      e.kind = Expr::Kind::Inter, arity = 2;
    } else if (name == "diff") {
      e.kind = Expr::Kind::Diff, arity = 2;
    } else if (name == "compl") {
      e.kind = Expr::Kind::Compl;
    } else {
      e.op = resolve_operator(name);
      if (!e.op) throw ParseError("unknown operator '" + name + "'", start);
      e.kind = Expr::Kind::Apply;
      e.alias = name;
    }
    ++pos_;  // '('
    e.args.push_back(expr());
    for (;;) {
      skip_ws();
      if (at_end()) throw ParseError("expected ',' or ')', found end of input", pos_);
      if (peek() == ')') {
        ++pos_;
        break;
      }
      if (peek() != ',') throw ParseError("expected ',' or ')'", pos_);
      ++pos_;
      e.args.push_back(expr());
    }
    if (e.args.size() != arity)
      throw ParseError("'" + name + "' takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") +
                           ", got " + std::to_string(e.args.size()),
                       start);
    return e;
  }

  static void collect_vars(const Expr& e, std::vector<char>& vars) {
    if (e.kind == Expr::Kind::Var) {
      for (char v : vars)
        if (v == e.var) return;
      vars.push_back(e.var);
      return;
    }
    for (const Expr& a : e.args) collect_vars(a, vars);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) {
  Parser p{text};
  Expr e = p.expr();
  p.finish();
  return e;
}

LawAst parse_law(std::string_view text) { return Parser{text}.law(); }

std::string to_string(const Expr& e) {
  auto call = [&](std::string_view name) {
    std::string out(name);
    out += '(';
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i) out += ',';
      out += to_string(e.args[i]);
    }
    return out + ')';
  };
  switch (e.kind) {
    case Expr::Kind::Var: return std::string(1, e.var);
    case Expr::Kind::Empty: return "empty";
    case Expr::Kind::Universe: return "X";
    case Expr::Kind::Union: return call("union");
    case Expr::Kind::Inter: return call("inter");
    case Expr::Kind::Diff: return call("diff");
    case Expr::Kind::Compl: return call("compl");
    case Expr::Kind::Apply: return call(e.alias);
  }
  return {};
}

std::string to_string(const LawAst& law) {
  return to_string(law.lhs) + (law.relation == Relation::Eq ? " == " : " <= ") + to_string(law.rhs);
}

Subset eval_expr(const Space& space, const Bindings& bindings, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Var: {
      auto v = bindings.get(e.var);
      if (!v) throw EvalError(std::string("unbound variable ") + e.var);
      space.ground().require(*v);
      return *v;
    }
    case Expr::Kind::Empty: return Subset{};
    case Expr::Kind::Universe: return space.universe();
    case Expr::Kind::Union:
      return eval_expr(space, bindings, e.args[0]) | eval_expr(space, bindings, e.args[1]);
    case Expr::Kind::Inter:
      return eval_expr(space, bindings, e.args[0]) & eval_expr(space, bindings, e.args[1]);
    case Expr::Kind::Diff:
      return eval_expr(space, bindings, e.args[0]) - eval_expr(space, bindings, e.args[1]);
    case Expr::Kind::Compl: return space.complement(eval_expr(space, bindings, e.args[0]));
    case Expr::Kind::Apply: return e.op->apply(space, eval_expr(space, bindings, e.args[0]));
  }
  return {};
}

namespace {

using Table = std::array<Subset, kMaxSubsets>;

// Expression with every operator application replaced by a lookup table.
class CompiledExpr {
 public:
  CompiledExpr(const Space& space, const Expr& e, const std::vector<char>& vars,
               std::map<std::string, std::size_t>& table_index, std::vector<Table>& tables)
      : kind_(e.kind) {
    if (e.kind == Expr::Kind::Var) {
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == e.var) slot_ = i;
    }
    if (e.kind == Expr::Kind::Apply) {
      const std::string key = e.op->name();
      auto it = table_index.find(key);
      if (it == table_index.end()) {
        Table t{};
        for (int a = 0; a < space.ground().subset_count(); ++a)
          t[a] = e.op->apply(space, Subset{static_cast<std::uint32_t>(a)});
        tables.push_back(t);
        it = table_index.emplace(key, tables.size() - 1).first;
      }
      table_ = it->second;
    }
    for (const Expr& a : e.args) args_.emplace_back(space, a, vars, table_index, tables);
  }

  [[nodiscard]] Subset eval(std::span<const Subset> values, Subset universe, const std::vector<Table>& tables) const {
    switch (kind_) {
      case Expr::Kind::Var: return values[slot_];
      case Expr::Kind::Empty: return Subset{};
      case Expr::Kind::Universe: return universe;
      case Expr::Kind::Union: return args_[0].eval(values, universe, tables) | args_[1].eval(values, universe, tables);
      case Expr::Kind::Inter: return args_[0].eval(values, universe, tables) & args_[1].eval(values, universe, tables);
      case Expr::Kind::Diff: return args_[0].eval(values, universe, tables) - args_[1].eval(values, universe, tables);
      case Expr::Kind::Compl: return universe - args_[0].eval(values, universe, tables);
      case Expr::Kind::Apply: return tables[table_][args_[0].eval(values, universe, tables).bits()];
    }
    return {};
  }

 private:
  Expr::Kind kind_;
  std::size_t slot_ = 0;
  std::size_t table_ = 0;
  std::vector<CompiledExpr> args_;
};

bool violates(Relation rel, Subset lhs, Subset rhs) {
  return rel == Relation::Eq ? lhs != rhs : !lhs.subset_of(rhs);
}

}  // namespace

LawScan scan_law(const Space& space, const LawAst& law, const CheckOptions& options) {
  const auto& vars = law.free_vars;
  if (static_cast<int>(vars.size()) > options.max_vars)
    throw EvalError("law has " + std::to_string(vars.size()) + " free variables; the cap is " +
                    std::to_string(options.max_vars));

  std::map<std::string, std::size_t> table_index;
  std::vector<Table> tables;
  const CompiledExpr lhs{space, law.lhs, vars, table_index, tables};
  const CompiledExpr rhs{space, law.rhs, vars, table_index, tables};

  const std::uint32_t count = static_cast<std::uint32_t>(space.ground().subset_count());
  const Subset universe = space.universe();
  std::vector<Subset> values(vars.size());
  LawScan scan;
  for (;;) {
    ++scan.assignments;
    const Subset l = lhs.eval(values, universe, tables);
    const Subset r = rhs.eval(values, universe, tables);
    if (violates(law.relation, l, r)) {
      std::vector<Binding> bindings;
      for (std::size_t i = 0; i < vars.size(); ++i) bindings.push_back({std::string(1, vars[i]), values[i]});
      scan.verdict = Verdict::violated(std::move(bindings), law.relation, l, r);
      return scan;
    }
    // Odometer: the last variable varies fastest.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (values[i].bits() + 1 < count) {
        values[i] = Subset{values[i].bits() + 1};
        break;
      }
      values[i] = Subset{};
      if (i == 0) return scan;
    }
    if (vars.empty()) return scan;
  }
}

bool revalidate(const Space& space, const LawAst& law, const Verdict& verdict) {
  if (verdict.holds()) return false;
  Bindings b;
  for (const auto& binding : verdict.bindings) {
    if (binding.name.size() != 1) return false;
    b.set(binding.name[0], binding.value);
  }
  for (char v : law.free_vars)
    if (!b.get(v)) return false;
  const Subset l = eval_expr(space, b, law.lhs);
  const Subset r = eval_expr(space, b, law.rhs);
  return l == verdict.lhs && r == verdict.rhs && violates(law.relation, l, r);
}

std::vector<std::string> transliterate(std::string_view law_name) {
  const auto colon = law_name.find(':');
  if (colon == std::string_view::npos) return {};
  const auto kind = law_name.substr(0, colon);
  const auto spec = parse_local_fn(law_name.substr(colon + 1));
  if (!spec) return {};
  const std::string f = spec->name();
  const std::string psi = Operator::psi(*spec).name();
  const std::string c = "clstar:" + f;
  if (kind == "additivity") return {f + "(union(A,B)) == union(" + f + "(A)," + f + "(B))"};
  if (kind == "diff-law") return {"diff(" + f + "(A)," + f + "(B)) == diff(" + f + "(diff(A,B))," + f + "(B))"};
  if (kind == "psi-cap") return {psi + "(inter(A,B)) == inter(" + psi + "(A)," + psi + "(B))"};
  if (kind == "psi-cup") return {psi + "(union(A,B)) == union(" + psi + "(A)," + psi + "(B))"};
  if (kind == "kuratowski")
    return {c + "(empty) == empty", "A <= " + c + "(A)", c + "(" + c + "(A)) == " + c + "(A)",
            c + "(union(A,B)) == union(" + c + "(A)," + c + "(B))"};
  return {};
}

}  // namespace idealtop::dsl
