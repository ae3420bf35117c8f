#include "idealtop/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "idealtop/corpus.hpp"
#include "idealtop/dsl.hpp"
#include "idealtop/json_io.hpp"
#include "idealtop/laws.hpp"
#include "idealtop/operators.hpp"
#include "idealtop/search.hpp"

namespace idealtop::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Space load_space(const std::string& path) {
  try {
    return parse_space(read_file(path));
  } catch (const SpaceError& e) {
    throw SpaceError(path + ": " + e.what());
  }
}

// "A=w1,w3", "A={w1,w3}" or "A=" for the empty set.
dsl::Bindings parse_bindings(const std::vector<std::string>& specs, const GroundSet& ground) {
  dsl::Bindings b;
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    if (eq != 1 || spec[0] < 'A' || spec[0] > 'Z' || spec[0] == 'X')
      throw UsageError("binding '" + spec + "' must look like A=w1,w3");
    std::string rest = spec.substr(2);
    if (rest.starts_with('{') && rest.ends_with('}')) rest = rest.substr(1, rest.size() - 2);
    std::vector<std::string> labels;
    std::stringstream ss(rest);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) labels.push_back(item);
    b.set(spec[0], ground.subset_of_labels(labels));
  }
  return b;
}

nlohmann::ordered_json verdict_json(const Verdict& v, const GroundSet& g, const std::string& law) {
  nlohmann::ordered_json j;
  j["law"] = law;
  j["status"] = status_name(v.status);
  if (!v.holds()) {
    nlohmann::ordered_json bindings = nlohmann::ordered_json::object();
    for (const auto& b : v.bindings) bindings[b.name] = g.labels_of(b.value);
    j["bindings"] = bindings;
    j["lhs"] = g.labels_of(v.lhs);
    j["rhs"] = g.labels_of(v.rhs);
    j["relation"] = v.relation == Relation::Eq ? "==" : "<=";
    if (!v.detail.empty()) j["detail"] = v.detail;
  }
  return j;
}

Verdict check_one(const Space& space, const std::string& text, int max_vars) {
  if (auto named = find_law(text)) return named->check(space);
  return dsl::check_law(space, dsl::parse_law(text), {max_vars});
}

struct Options {
  std::vector<std::string> spaces;
  bool json = false;
  bool raw = false;
  std::uint64_t seed = 0;

  std::string expr;
  std::vector<std::string> binds;
  std::string law;
  std::string laws_file;
  std::string kind;
  int points = 3;
  std::string mode = "exhaustive";
  std::uint64_t budget_spaces = 0;
  std::uint64_t budget_assignments = 0;
  bool all_minimal = false;
  unsigned threads = 1;
  bool iso_reduce = false;
  int max_subbase = 2;
  int max_vars = 3;
  std::string only;
  std::string corpus_file;
};

const Space& single_space(const Options& o, std::optional<Space>& holder) {
  if (o.spaces.size() != 1) throw UsageError("exactly one --space FILE is required");
  holder.emplace(load_space(o.spaces.front()));
  return *holder;
}

int cmd_eval(const Options& o, std::ostream& out) {
  std::optional<Space> holder;
  const Space& space = single_space(o, holder);
  if (o.expr.empty()) throw UsageError("eval needs an expression");
  const auto expr = dsl::parse_expr(o.expr);
  const auto bindings = parse_bindings(o.binds, space.ground());
  const Subset value = dsl::eval_expr(space, bindings, expr);
  if (o.json) {
    nlohmann::ordered_json j;
    j["expr"] = o.expr;
    j["value"] = space.ground().labels_of(value);
    j["bits"] = value.bits();
    out << j.dump() << "\n";
  } else if (o.raw) {
    out << value.bits() << "\n";
  } else {
    out << space.ground().format(value) << "\n";
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::optional<Space> holder;
  const Space& space = single_space(o, holder);
  std::vector<std::string> laws;
  if (!o.law.empty()) laws.push_back(o.law);
  if (!o.laws_file.empty()) {
    std::stringstream ss(read_file(o.laws_file));
    for (std::string line; std::getline(ss, line);) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      laws.push_back(line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
    }
  }
  if (laws.empty()) throw UsageError("check needs --law TEXT or --laws FILE");

  // Parse everything first so a malformed law is a usage error, not a partial run.
  for (const auto& text : laws)
    if (!find_law(text)) (void)dsl::parse_law(text);

  bool all_hold = true;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& text : laws) {
    const Verdict v = check_one(space, text, o.max_vars);
    all_hold = all_hold && v.holds();
    if (o.json) {
      results.push_back(verdict_json(v, space.ground(), text));
    } else {
      if (laws.size() > 1) out << text << ": ";
      out << format_verdict(v, space.ground());
    }
  }
  if (o.json) out << (results.size() == 1 ? results[0] : results).dump(2) << "\n";
  return all_hold ? kOk : kViolated;
}

int cmd_families(const Options& o, std::ostream& out) {
  std::optional<Space> holder;
  const Space& space = single_space(o, holder);
  Family family;
  if (o.kind.starts_with("eta:")) {
    auto spec = parse_local_fn(o.kind.substr(4));
    if (!spec) throw UsageError("unknown local function '" + o.kind.substr(4) + "'");
    family = psi_fix_family(space, *spec);
  } else {
    auto k = parse_kind(o.kind);
    if (!k) throw UsageError("unknown kind '" + o.kind + "' (open, semi, pre, b, beta, eta:<op>)");
    family = kopen_family(space, *k);
  }
  if (o.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Subset s : family) arr.push_back(space.ground().labels_of(s));
    out << arr.dump() << "\n";
    return kOk;
  }
  for (Subset s : family) {
    if (o.raw)
      out << s.bits() << "\n";
    else
      out << space.ground().format(s) << "\n";
  }
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.law.empty()) throw UsageError("search needs --law TEXT");
  SearchMode mode;
  if (o.mode == "exhaustive")
    mode = SearchMode::Exhaustive;
  else if (o.mode == "subbase" || o.mode == "subbase-generated")
    mode = SearchMode::SubbaseGenerated;
  else if (o.mode == "user" || o.mode == "user-spaces")
    mode = SearchMode::UserSpaces;
  else
    throw UsageError("unknown mode '" + o.mode + "' (exhaustive, subbase, user)");

  SearchTask task = SearchTask::for_law(o.law, o.points, mode);
  if (mode == SearchMode::UserSpaces) {
    if (o.spaces.empty()) throw UsageError("user mode needs at least one --space FILE");
    for (const auto& path : o.spaces) task.user_spaces.push_back(load_space(path));
    task.n = task.user_spaces.front().size();
  } else if (mode == SearchMode::Exhaustive && (o.points < 1 || o.points > 4)) {
    throw UsageError("exhaustive mode supports 1 to 4 points");
  } else if (o.points < 1 || o.points > kMaxPoints) {
    throw UsageError("--points must be between 1 and 8");
  }
  if (o.budget_spaces) task.budget.max_spaces = o.budget_spaces;
  if (o.budget_assignments) task.budget.max_assignments = o.budget_assignments;
  task.want = o.all_minimal ? Want::AllMinimal : Want::First;
  task.threads = o.threads;
  task.iso_reduce = o.iso_reduce;
  task.max_subbase_size = o.max_subbase;
  task.check.max_vars = o.max_vars;

  const SearchResult result = run_search(task);
  out << search_report(task, result).dump(2) << "\n";
  switch (result.status) {
    case SearchStatus::LawCertified: return kOk;
    case SearchStatus::CounterexampleFound: return kViolated;
    case SearchStatus::BudgetExhausted: return kBudget;
  }
  return kUsage;
}

int cmd_repro(const Options& o, std::ostream& out) {
  std::vector<corpus::Entry> entries =
      o.corpus_file.empty() ? corpus::embedded() : corpus::load(read_file(o.corpus_file));
  if (!o.only.empty()) {
    std::erase_if(entries, [&](const corpus::Entry& e) { return e.id != o.only; });
    if (entries.empty()) throw UsageError("no such entry: " + o.only);
  }
  bool all_pass = true;
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const auto& entry : entries) {
    const auto outcome = corpus::run_entry(entry);
    all_pass = all_pass && outcome.pass();
    if (o.json) {
      nlohmann::ordered_json j;
      j["id"] = outcome.id;
      j["citation"] = outcome.citation;
      j["pass"] = outcome.pass();
      auto& checks = j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : outcome.checks)
        checks.push_back({{"check", c.description}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}});
      report.push_back(std::move(j));
      continue;
    }
    out << (outcome.pass() ? "PASS " : "FAIL ") << outcome.id << "  " << outcome.citation << " ("
        << outcome.checks.size() << " checks)\n";
    for (const auto& c : outcome.checks)
      if (!c.pass) out << "  FAIL " << c.description << "\n    expected: " << c.expected << "\n    got:      " << c.got << "\n";
  }
  if (o.json) out << report.dump(2) << "\n";
  return all_pass ? kOk : kViolated;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Workbench for finite ideal topological spaces and their local functions", "idealtop"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--space", o.spaces, "Space document (JSON); repeat for search --mode user");
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--raw", o.raw, "Print subsets as bitmasks");
  app.add_option("--seed", o.seed, "Reserved; deterministic modes ignore it");

  auto* eval = app.add_subcommand("eval", "Evaluate a set expression");
  eval->add_option("expr,--expr", o.expr, "Expression, e.g. xibeta(A)");
  eval->add_option("--bind", o.binds, "Variable binding, e.g. A=w1,w3");

  auto* check = app.add_subcommand("check", "Check a law over all assignments");
  check->add_option("law,--law", o.law, "DSL law or registry name (additivity:sstar, ...)");
  check->add_option("--laws", o.laws_file, "File with one law per line, # comments");
  check->add_option("--max-vars", o.max_vars, "Free-variable cap")->capture_default_str();

  auto* families = app.add_subcommand("families", "Print a generalized-open family");
  families->add_option("kind,--kind", o.kind, "open, semi, pre, b, beta, or eta:<op>")->required();

  auto* search = app.add_subcommand("search", "Search small spaces for a counterexample");
  search->add_option("law,--law", o.law, "DSL law");
  search->add_option("--points,-n", o.points, "Number of points")->capture_default_str();
  search->add_option("--mode", o.mode, "exhaustive, subbase, user")->capture_default_str();
  search->add_option("--budget-spaces", o.budget_spaces, "Stop after this many spaces (0 = unlimited)");
  search->add_option("--budget-assignments", o.budget_assignments,
                     "Stop after this many assignments (0 = unlimited)");
  search->add_flag("--all-minimal", o.all_minimal, "Report every counterexample of minimal size");
  search->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  search->add_flag("--iso-reduce", o.iso_reduce, "Scan one labeling per isomorphism class");
  search->add_option("--max-subbase", o.max_subbase, "Subbase size for --mode subbase")->capture_default_str();
  search->add_option("--max-vars", o.max_vars, "Free-variable cap")->capture_default_str();

  auto* repro = app.add_subcommand("repro", "Replay the worked-example corpus");
  repro->add_option("--only", o.only, "Run a single entry by id");
  repro->add_option("--corpus", o.corpus_file, "Use a corpus file instead of the built-in one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*check) return cmd_check(o, out);
    if (*families) return cmd_families(o, out);
    if (*search) return cmd_search(o, out);
    if (*repro) return cmd_repro(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace idealtop::cli
