#include "idealtop/operators.hpp"

#include <utility>

namespace idealtop {

namespace {

constexpr std::pair<std::string_view, LocalFnSpec> kLocalAliases[] = {
    {"star", specs::kStar},   {"sstar", specs::kSemiStar}, {"pstar", specs::kPreStar}, {"bstar", specs::kBStar},
    {"betastar", specs::kBetaStar}, {"G", specs::kGamma},   {"g", specs::kSmallGamma},  {"xis", specs::kXiSemi},
    {"xip", specs::kXiPre},   {"xib", specs::kXiB},        {"xibeta", specs::kXiBeta},
};

constexpr std::pair<std::string_view, LocalFnSpec> kPsiAliases[] = {
    {"psi", specs::kStar},       {"psis", specs::kSemiStar}, {"psip", specs::kPreStar},
    {"psib", specs::kBStar},     {"psibetastar", specs::kBetaStar}, {"psiG", specs::kGamma},
    {"psig", specs::kSmallGamma}, {"psixis", specs::kXiSemi}, {"psixip", specs::kXiPre},
    {"psixib", specs::kXiB},     {"psixibeta", specs::kXiBeta},
};

constexpr std::pair<std::string_view, OpenKind> kClosureAliases[] = {
    {"scl", OpenKind::Semi}, {"pcl", OpenKind::Pre}, {"bcl", OpenKind::B}, {"betacl", OpenKind::Beta}};

}  // namespace

std::string LocalFnSpec::name() const {
  for (const auto& [alias, spec] : kLocalAliases)
    if (spec == *this) return std::string(alias);
  if (is_plain()) return "star:" + std::string(kind_name(nbhd));
  return "xi:" + std::string(kind_name(nbhd)) + ":" + std::string(kind_name(*closure));
}

std::optional<LocalFnSpec> parse_local_fn(std::string_view alias) {
  for (const auto& [name, spec] : kLocalAliases)
    if (name == alias) return spec;
  if (alias.starts_with("star:")) {
    if (auto k = parse_kind(alias.substr(5))) return LocalFnSpec::plain(*k);
    return std::nullopt;
  }
  if (alias.starts_with("xi:")) {
    auto rest = alias.substr(3);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    auto n = parse_kind(rest.substr(0, colon));
    auto c = parse_kind(rest.substr(colon + 1));
    if (n && c) return LocalFnSpec::closure_style(*n, *c);
  }
  return std::nullopt;
}

namespace compute {

std::array<Subset, kMaxSubsets> interior_table(const Family& topology, const GroundSet& ground) {
  std::array<Subset, kMaxSubsets> table{};
  for (int a = 0; a < ground.subset_count(); ++a) {
    Subset target{static_cast<std::uint32_t>(a)};
    Subset acc;
    for (Subset u : topology)
      if (u.subset_of(target)) acc |= u;
    table[a] = acc;
  }
  return table;
}

Family kopen_family(const Family& topology, const GroundSet& ground, OpenKind kind) {
  if (kind == OpenKind::Open) return topology;
  const auto interior = interior_table(topology, ground);
  auto in = [&](Subset a) { return interior[a.bits()]; };
  auto cl = [&](Subset a) { return ground.complement(interior[ground.complement(a).bits()]); };
  std::vector<Subset> members;
  for (int bits = 0; bits < ground.subset_count(); ++bits) {
    Subset a{static_cast<std::uint32_t>(bits)};
    Subset bound;
    switch (kind) {
      case OpenKind::Semi: bound = cl(in(a)); break;
      case OpenKind::Pre: bound = in(cl(a)); break;
      case OpenKind::B: bound = in(cl(a)) | cl(in(a)); break;
      case OpenKind::Beta: bound = cl(in(cl(a))); break;
      case OpenKind::Open: break;
    }
    if (a.subset_of(bound)) members.push_back(a);
  }
  return Family{std::move(members)};
}

}  // namespace compute

Subset interior(const Space& space, Subset a) {
  space.ground().require(a);
  return space.cached_interior(a);
}

Subset closure(const Space& space, Subset a) {
  space.ground().require(a);
  return space.complement(space.cached_interior(space.complement(a)));
}

Subset derived_set(const Space& space, Subset a) {
  space.ground().require(a);
  Subset out;
  for (int z = 0; z < space.size(); ++z) {
    const Subset others = a - Subset::singleton(z);
    bool limit = true;
    for (Subset u : space.neighborhoods(OpenKind::Open, z)) {
      if (!u.meets(others)) {
        limit = false;
        break;
      }
    }
    if (limit) out |= Subset::singleton(z);
  }
  return out;
}

const Family& kopen_family(const Space& space, OpenKind kind) { return space.cached_family(kind); }

Subset kclosure(const Space& space, OpenKind kind, Subset a) {
  space.ground().require(a);
  return space.cached_kclosure(kind, a);
}

Subset local_function(const Space& space, const LocalFnSpec& spec, Subset a) {
  space.ground().require(a);
  Subset out;
  for (int z = 0; z < space.size(); ++z) {
    bool member = true;
    for (Subset u : space.neighborhoods(spec.nbhd, z)) {
      const Subset v = spec.closure ? space.cached_kclosure(*spec.closure, u) : u;
      if (space.in_ideal(v & a)) {
        member = false;
        break;
      }
    }
    if (member) out |= Subset::singleton(z);
  }
  return out;
}

Subset psi_dual(const Space& space, const LocalFnSpec& spec, Subset a) {
  return space.complement(local_function(space, spec, space.complement(a)));
}

Subset cl_star(const Space& space, const LocalFnSpec& spec, Subset a) { return a | local_function(space, spec, a); }

Family psi_fix_family(const Space& space, const LocalFnSpec& spec) {
  std::vector<Subset> members;
  for (int bits = 0; bits < space.ground().subset_count(); ++bits) {
    Subset a{static_cast<std::uint32_t>(bits)};
    if (a.subset_of(psi_dual(space, spec, a))) members.push_back(a);
  }
  return Family{std::move(members)};
}

Subset Operator::apply(const Space& space, Subset a) const {
  Subset v;
  switch (base_) {
    case Base::Interior: v = interior(space, a); break;
    case Base::Closure: v = closure(space, a); break;
    case Base::Derived: v = derived_set(space, a); break;
    case Base::KClosure: v = kclosure(space, kind_, a); break;
    case Base::Local: v = local_function(space, spec_, a); break;
    case Base::Psi: v = psi_dual(space, spec_, a); break;
  }
  return cl_star_ ? (a | v) : v;
}

std::string Operator::name() const {
  std::string base;
  switch (base_) {
    case Base::Interior: base = "int"; break;
    case Base::Closure: base = "cl"; break;
    case Base::Derived: base = "der"; break;
    case Base::KClosure:
      base = kind_ == OpenKind::Open ? "cl" : "";
      for (const auto& [alias, k] : kClosureAliases)
        if (k == kind_) base = alias;
      break;
    case Base::Local: base = spec_.name(); break;
    case Base::Psi:
      base = "psi:" + spec_.name();
      for (const auto& [alias, s] : kPsiAliases)
        if (s == spec_) base = alias;
      break;
  }
  return cl_star_ ? "clstar:" + base : base;
}

std::optional<Operator> resolve_operator(std::string_view alias) {
  if (alias.starts_with("clstar:")) {
    auto inner = resolve_operator(alias.substr(7));
    if (!inner || inner->is_cl_star()) return std::nullopt;
    return inner->with_cl_star();
  }
  if (alias == "int") return Operator::interior_op();
  if (alias == "cl") return Operator::closure_op();
  if (alias == "der") return Operator::derived_op();
  for (const auto& [name, k] : kClosureAliases)
    if (name == alias) return Operator::kclosure_op(k);
  for (const auto& [name, spec] : kPsiAliases)
    if (name == alias) return Operator::psi(spec);
  if (alias.starts_with("psi:")) {
    if (auto s = parse_local_fn(alias.substr(4))) return Operator::psi(*s);
    return std::nullopt;
  }
  if (auto s = parse_local_fn(alias)) return Operator::local(*s);
  return std::nullopt;
}

std::vector<std::string> operator_aliases() {
  std::vector<std::string> out = {"int", "cl", "der"};
  for (const auto& [name, _] : kClosureAliases) out.emplace_back(name);
  for (const auto& [name, _] : kLocalAliases) out.emplace_back(name);
  for (const auto& [name, _] : kPsiAliases) out.emplace_back(name);
  return out;
}

}  // namespace idealtop
