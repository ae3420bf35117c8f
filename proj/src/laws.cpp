#include "idealtop/laws.hpp"

#include <array>

namespace idealtop {

std::string_view status_name(Status s) { return s == Status::Holds ? "Holds" : "Violated"; }

std::optional<Subset> Verdict::binding(std::string_view name) const {
  for (const auto& b : bindings)
    if (b.name == name) return b.value;
  return std::nullopt;
}

std::string format_verdict(const Verdict& v, const GroundSet& ground) {
  if (v.holds()) return "Holds\n";
  std::string out = "Violated\n";
  for (const auto& b : v.bindings) out += "  " + b.name + " = " + ground.format(b.value) + "\n";
  out += "  lhs = " + ground.format(v.lhs) + "\n";
  out += "  rhs = " + ground.format(v.rhs) + "\n";
  out += std::string("  relation: ") + (v.relation == Relation::Eq ? "==" : "<=") + "\n";
  if (!v.detail.empty()) out += "  " + v.detail + "\n";
  return out;
}

namespace {

using Table = std::array<Subset, kMaxSubsets>;

template <typename F>
Table tabulate(const Space& space, F f) {
  Table t{};
  for (int a = 0; a < space.ground().subset_count(); ++a) t[a] = f(Subset{static_cast<std::uint32_t>(a)});
  return t;
}

Table local_table(const Space& space, const LocalFnSpec& spec) {
  return tabulate(space, [&](Subset a) { return local_function(space, spec, a); });
}

// Scans all (a, b) pairs in lexicographic order; sides(a, b) returns {lhs, rhs}.
template <typename Sides>
Verdict scan_pairs(const Space& space, Sides sides) {
  const int count = space.ground().subset_count();
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      Subset sa{static_cast<std::uint32_t>(a)}, sb{static_cast<std::uint32_t>(b)};
      auto [lhs, rhs] = sides(sa, sb);
      if (lhs != rhs) return Verdict::violated({{"A", sa}, {"B", sb}}, Relation::Eq, lhs, rhs);
    }
  }
  return {};
}

bool equal_sides(const Verdict& v, Subset lhs, Subset rhs) {
  if (v.lhs != lhs || v.rhs != rhs) return false;
  return v.relation == Relation::Eq ? lhs != rhs : !lhs.subset_of(rhs);
}

}  // namespace

Verdict check_additivity(const Space& space, const LocalFnSpec& spec) {
  const Table f = local_table(space, spec);
  return scan_pairs(space, [&](Subset a, Subset b) {
    return std::pair{f[(a | b).bits()], f[a.bits()] | f[b.bits()]};
  });
}

Verdict check_difference_law(const Space& space, const LocalFnSpec& spec) {
  const Table f = local_table(space, spec);
  return scan_pairs(space, [&](Subset a, Subset b) {
    const Subset fb = f[b.bits()];
    return std::pair{f[a.bits()] - fb, f[(a - b).bits()] - fb};
  });
}

Verdict check_psi_distributivity(const Space& space, const LocalFnSpec& spec, Connective c) {
  const Table psi = tabulate(space, [&](Subset a) { return psi_dual(space, spec, a); });
  return scan_pairs(space, [&](Subset a, Subset b) {
    if (c == Connective::Cap) return std::pair{psi[(a & b).bits()], psi[a.bits()] & psi[b.bits()]};
    return std::pair{psi[(a | b).bits()], psi[a.bits()] | psi[b.bits()]};
  });
}

std::optional<std::pair<std::string_view, const Verdict*>> KuratowskiReport::first_failure() const {
  if (!fixes_empty.holds()) return std::pair{std::string_view("fixes-empty"), &fixes_empty};
  if (!extensive.holds()) return std::pair{std::string_view("extensive"), &extensive};
  if (!idempotent.holds()) return std::pair{std::string_view("idempotent"), &idempotent};
  if (!additive.holds()) return std::pair{std::string_view("additive"), &additive};
  return std::nullopt;
}

KuratowskiReport check_kuratowski(const Space& space, const LocalFnSpec& spec) {
  const Table c = tabulate(space, [&](Subset a) { return cl_star(space, spec, a); });
  const int count = space.ground().subset_count();
  KuratowskiReport r;

  if (!c[0].empty()) r.fixes_empty = Verdict::violated({}, Relation::Eq, c[0], Subset{}, "fixes-empty");

  for (int a = 0; a < count; ++a) {
    Subset s{static_cast<std::uint32_t>(a)};
    if (!s.subset_of(c[a])) {
      r.extensive = Verdict::violated({{"A", s}}, Relation::SubsetEq, s, c[a], "extensive");
      break;
    }
  }

  for (int a = 0; a < count; ++a) {
    const Subset once = c[a], twice = c[once.bits()];
    if (twice != once) {
      std::string detail = "idempotent: ";
      if (once.subset_of(twice))
        detail += "cl*(cl*(A)) strictly contains cl*(A)";
      else if (twice.subset_of(once))
        detail += "cl*(cl*(A)) strictly inside cl*(A)";
      else
        detail += "cl*(cl*(A)) and cl*(A) are incomparable";
      r.idempotent =
          Verdict::violated({{"A", Subset{static_cast<std::uint32_t>(a)}}}, Relation::Eq, twice, once, detail);
      break;
    }
  }

  Verdict add = scan_pairs(space, [&](Subset a, Subset b) {
    return std::pair{c[(a | b).bits()], c[a.bits()] | c[b.bits()]};
  });
  if (!add.holds()) add.detail = "additive";
  r.additive = add;
  return r;
}

StarTopology star_topology(const Space& space, const LocalFnSpec& spec) {
  StarTopology out{std::nullopt, check_kuratowski(space, spec)};
  if (!out.kuratowski.all_hold()) return out;
  std::vector<Subset> open;
  for (int a = 0; a < space.ground().subset_count(); ++a) {
    Subset s{static_cast<std::uint32_t>(a)};
    const Subset closed = space.complement(s);
    if (cl_star(space, spec, closed) == closed) open.push_back(s);
  }
  // Throws if a Kuratowski operator somehow failed to induce a topology.
  out.topology.emplace(Family{std::move(open)}, space.ground());
  return out;
}

Verdict check_family_is_topology(const Family& family, const GroundSet& ground) {
  using K = FamilyViolation::Kind;
  const auto r = validate_topology(family, ground);
  if (r.holds()) return {};
  const FamilyViolation& v = *r.violation;
  switch (v.kind) {
    case K::MissingEmpty: return Verdict::violated({}, Relation::Eq, v.missing, v.missing, "empty set missing");
    case K::MissingUniverse:
      return Verdict::violated({}, Relation::Eq, v.missing, v.missing, "whole space missing");
    case K::NotUnionClosed:
      return Verdict::violated({{"A", v.first}, {"B", v.second}}, Relation::Eq, v.missing, v.missing,
                               "union: A ∪ B is not a member");
    case K::NotIntersectionClosed:
    case K::NotHereditary:
      break;
  }
  return Verdict::violated({{"A", v.first}, {"B", v.second}}, Relation::Eq, v.missing, v.missing,
                           "intersection: A ∩ B is not a member");
}

Verdict check_family_intersection_closed(const Family& family) {
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!family.contains(m[i] & m[j]))
        return Verdict::violated({{"A", m[i]}, {"B", m[j]}}, Relation::Eq, m[i] & m[j], m[i] & m[j],
                                 "intersection: A ∩ B is not a member");
  return {};
}

namespace {

struct LawName {
  std::string_view kind;
  std::string_view arg;
};

std::optional<LawName> split_law_name(std::string_view name) {
  auto colon = name.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return LawName{name.substr(0, colon), name.substr(colon + 1)};
}

constexpr std::array<std::string_view, 6> kSpecLawKinds = {"additivity", "diff-law", "psi-cap",
                                                           "psi-cup",    "kuratowski", "eta-topology"};

Verdict first_kuratowski_failure(const Space& space, const LocalFnSpec& spec) {
  const auto report = check_kuratowski(space, spec);
  if (auto f = report.first_failure()) return *f->second;
  return {};
}

}  // namespace

std::optional<Law> find_law(std::string_view name) {
  auto parts = split_law_name(name);
  if (!parts) return std::nullopt;
  const std::string full(name);
  if (parts->kind == "family-cap-closed") {
    auto kind = parse_kind(parts->arg);
    if (!kind) return std::nullopt;
    const OpenKind k = *kind;
    return Law{full, 2, [k](const Space& s) { return check_family_intersection_closed(kopen_family(s, k)); }};
  }
  auto spec_opt = parse_local_fn(parts->arg);
  if (!spec_opt) return std::nullopt;
  const LocalFnSpec spec = *spec_opt;
  if (parts->kind == "additivity")
    return Law{full, 2, [spec](const Space& s) { return check_additivity(s, spec); }};
  if (parts->kind == "diff-law")
    return Law{full, 2, [spec](const Space& s) { return check_difference_law(s, spec); }};
  if (parts->kind == "psi-cap")
    return Law{full, 2, [spec](const Space& s) { return check_psi_distributivity(s, spec, Connective::Cap); }};
  if (parts->kind == "psi-cup")
    return Law{full, 2, [spec](const Space& s) { return check_psi_distributivity(s, spec, Connective::Cup); }};
  if (parts->kind == "kuratowski")
    return Law{full, 2, [spec](const Space& s) { return first_kuratowski_failure(s, spec); }};
  if (parts->kind == "eta-topology")
    return Law{full, 2, [spec](const Space& s) {
                 return check_family_is_topology(psi_fix_family(s, spec), s.ground());
               }};
  return std::nullopt;
}

std::vector<std::string> registered_law_names() {
  std::vector<std::string> out;
  for (auto kind : kSpecLawKinds)
    for (const auto& spec : specs::kNamed) out.push_back(std::string(kind) + ":" + spec.name());
  for (OpenKind k : kAllKinds) out.push_back("family-cap-closed:" + std::string(kind_name(k)));
  return out;
}

bool revalidate(const Space& space, std::string_view law_name, const Verdict& v) {
  if (v.holds()) return false;
  auto parts = split_law_name(law_name);
  if (!parts) return false;
  const auto A = v.binding("A"), B = v.binding("B");

  auto family_gap = [&](const Family& family) {
    if (!A || !B) {
      if (v.detail == "empty set missing") return !family.contains(Subset{});
      if (v.detail == "whole space missing") return !family.contains(space.universe());
      return false;
    }
    if (!family.contains(*A) || !family.contains(*B)) return false;
    const Subset combined = v.detail.starts_with("union") ? (*A | *B) : (*A & *B);
    return combined == v.lhs && !family.contains(combined);
  };

  if (parts->kind == "family-cap-closed") {
    auto k = parse_kind(parts->arg);
    return k && A && B && family_gap(kopen_family(space, *k));
  }
  auto spec = parse_local_fn(parts->arg);
  if (!spec) return false;
  auto f = [&](Subset x) { return local_function(space, *spec, x); };
  auto psi = [&](Subset x) { return psi_dual(space, *spec, x); };
  auto cs = [&](Subset x) { return cl_star(space, *spec, x); };

  if (parts->kind == "eta-topology") return family_gap(psi_fix_family(space, *spec));
  if (parts->kind == "kuratowski") {
    if (v.detail == "fixes-empty") return equal_sides(v, cs(Subset{}), Subset{});
    if (v.detail == "extensive") return A && equal_sides(v, *A, cs(*A));
    if (v.detail.starts_with("idempotent")) return A && equal_sides(v, cs(cs(*A)), cs(*A));
    if (v.detail == "additive") return A && B && equal_sides(v, cs(*A | *B), cs(*A) | cs(*B));
    return false;
  }
  if (!A || !B) return false;
  if (parts->kind == "additivity") return equal_sides(v, f(*A | *B), f(*A) | f(*B));
  if (parts->kind == "diff-law") return equal_sides(v, f(*A) - f(*B), f(*A - *B) - f(*B));
  if (parts->kind == "psi-cap") return equal_sides(v, psi(*A & *B), psi(*A) & psi(*B));
  if (parts->kind == "psi-cup") return equal_sides(v, psi(*A | *B), psi(*A) | psi(*B));
  return false;
}

}  // namespace idealtop
