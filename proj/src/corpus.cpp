#include "idealtop/corpus.hpp"

#include <algorithm>

#include "corpus_data.hpp"
#include "idealtop/dsl.hpp"
#include "idealtop/json_io.hpp"
#include "idealtop/laws.hpp"
#include "idealtop/operators.hpp"

namespace idealtop::corpus {

using nlohmann::json;

std::vector<Entry> load(std::string_view corpus_json) {
  try {
    const json doc = json::parse(corpus_json);
    std::vector<Entry> out;
    for (const json& e : doc.at("entries")) {
      Entry entry;
      entry.id = e.at("id").get<std::string>();
      entry.citation = e.value("citation", "");
      entry.space_document = e.at("space");
      for (const json& c : e.at("checks")) entry.checks.push_back(c);
      out.push_back(std::move(entry));
    }
    return out;
  } catch (const json::exception& ex) {
    throw SpaceError(std::string("malformed corpus: ") + ex.what());
  }
}

std::string_view embedded_text() { return kEmbeddedCorpus; }

const std::vector<Entry>& embedded() {
  static const std::vector<Entry> entries = load(kEmbeddedCorpus);
  return entries;
}

bool EntryOutcome::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });
}

namespace {

Subset labels(const GroundSet& g, const json& arr) { return g.subset_of_labels(arr.get<std::vector<std::string>>()); }

dsl::Bindings read_bindings(const GroundSet& g, const json& obj, std::string& text) {
  dsl::Bindings b;
  for (const auto& [name, value] : obj.items()) {
    if (name.size() != 1) throw SpaceError("binding names must be single letters, got '" + name + "'");
    const Subset s = labels(g, value);
    b.set(name[0], s);
    if (!text.empty()) text += ", ";
    text += name + " = " + g.format(s);
  }
  return b;
}

std::string format_family(const GroundSet& g, const Family& f) {
  std::string out = "{";
  bool first = true;
  for (Subset s : f) {
    if (!first) out += ", ";
    out += g.format(s);
    first = false;
  }
  return out + "}";
}

Family read_family(const GroundSet& g, const json& arr) {
  std::vector<Subset> members;
  for (const json& s : arr) members.push_back(labels(g, s));
  return Family{std::move(members)};
}

std::string format_witness(const GroundSet& g, const std::vector<Binding>& bindings) {
  std::string out;
  for (const auto& b : bindings) {
    if (!out.empty()) out += ", ";
    out += b.name + " = " + g.format(b.value);
  }
  return out;
}

CheckOutcome run_check(const Space& space, const json& c) {
  const GroundSet& g = space.ground();
  const std::string type = c.at("type").get<std::string>();
  CheckOutcome out;

  if (type == "eval") {
    std::string bound;
    const auto b = read_bindings(g, c.value("bindings", json::object()), bound);
    const std::string expr = c.at("expr").get<std::string>();
    const Subset got = dsl::eval_expr(space, b, dsl::parse_expr(expr));
    const Subset want = labels(g, c.at("expected"));
    out.description = expr + (bound.empty() ? "" : " with " + bound);
    out.expected = g.format(want);
    out.got = g.format(got);
    out.pass = got == want;
  } else if (type == "instance") {
    std::string bound;
    const auto b = read_bindings(g, c.value("bindings", json::object()), bound);
    const std::string text = c.at("law").get<std::string>();
    const auto law = dsl::parse_law(text);
    const Subset l = dsl::eval_expr(space, b, law.lhs), r = dsl::eval_expr(space, b, law.rhs);
    const bool holds = law.relation == Relation::Eq ? l == r : l.subset_of(r);
    const bool want = c.at("holds").get<bool>();
    out.description = text + " with " + bound;
    out.expected = want ? "holds" : "fails";
    out.got = std::string(holds ? "holds" : "fails") + " (lhs " + g.format(l) + ", rhs " + g.format(r) + ")";
    out.pass = holds == want;
  } else if (type == "law") {
    const std::string text = c.at("law").get<std::string>();
    Verdict v;
    bool witness_ok = true;
    if (auto named = find_law(text)) {
      v = named->check(space);
      witness_ok = v.holds() || revalidate(space, text, v);
    } else {
      const auto law = dsl::parse_law(text);
      v = dsl::check_law(space, law);
      witness_ok = v.holds() || dsl::revalidate(space, law, v);
    }
    const std::string want_status = c.at("status").get<std::string>();
    out.description = text;
    out.expected = want_status;
    out.got = std::string(status_name(v.status));
    out.pass = out.got == want_status && witness_ok;
    if (c.contains("first_witness")) {
      std::vector<Binding> want;
      for (const auto& [name, value] : c["first_witness"].items()) want.push_back({name, labels(g, value)});
      out.expected += " at " + format_witness(g, want);
      out.pass = out.pass && v.bindings == want;
    }
    if (!v.holds()) out.got += " at " + format_witness(g, v.bindings);
  } else if (type == "family") {
    const std::string kind = c.at("kind").get<std::string>();
    Family got;
    if (kind.starts_with("eta:")) {
      auto spec = parse_local_fn(kind.substr(4));
      if (!spec) throw SpaceError("unknown operator in family kind '" + kind + "'");
      got = psi_fix_family(space, *spec);
    } else {
      auto k = parse_kind(kind);
      if (!k) throw SpaceError("unknown family kind '" + kind + "'");
      got = kopen_family(space, *k);
    }
    const Family want = read_family(g, c.at("expected"));
    out.description = "family " + kind + " (" + std::to_string(want.size()) + " members)";
    out.expected = format_family(g, want);
    out.got = format_family(g, got);
    out.pass = got == want;
  } else if (type == "nbhd-closures") {
    const auto nbhd = parse_kind(c.at("nbhd").get<std::string>());
    const auto cl = parse_kind(c.at("closure").get<std::string>());
    const auto point = g.index_of(c.at("point").get<std::string>());
    if (!nbhd || !cl || !point) throw SpaceError("bad nbhd-closures check");
    std::vector<Subset> closures;
    for (Subset u : space.neighborhoods(*nbhd, *point)) closures.push_back(kclosure(space, *cl, u));
    const Family got{std::move(closures)};
    const Family want = read_family(g, c.at("expected"));
    out.description = std::string(kind_name(*cl)) + "-closures of " + std::string(kind_name(*nbhd)) +
                      "-open sets containing " + g.labels()[*point];
    out.expected = format_family(g, want);
    out.got = format_family(g, got);
    out.pass = got == want;
  } else if (type == "star-topology") {
    const auto spec = parse_local_fn(c.at("op").get<std::string>());
    if (!spec) throw SpaceError("unknown operator in star-topology check");
    const auto st = star_topology(space, *spec);
    const bool want = c.at("refused").get<bool>();
    out.description = "topology induced by clstar:" + spec->name();
    out.expected = want ? "refused" : "built";
    out.got = st.refused() ? "refused" : "built";
    if (auto f = st.kuratowski.first_failure()) out.got += " (" + std::string(f->first) + " fails)";
    out.pass = st.refused() == want;
  } else {
    throw SpaceError("unknown check type '" + type + "'");
  }
  return out;
}

}  // namespace

EntryOutcome run_entry(const Entry& entry) {
  EntryOutcome outcome{entry.id, entry.citation, {}};
  std::optional<Space> space;
  try {
    space.emplace(space_from_json(entry.space_document));
  } catch (const std::exception& e) {
    outcome.checks.push_back({false, "space document", "valid space", e.what()});
    return outcome;
  }
  for (const json& c : entry.checks) {
    try {
      outcome.checks.push_back(run_check(*space, c));
    } catch (const std::exception& e) {
      outcome.checks.push_back({false, c.dump(), "check runs", std::string("error: ") + e.what()});
    }
  }
  return outcome;
}

}  // namespace idealtop::corpus
