#include "idealtop/space.hpp"

#include <json.hpp>

#include "idealtop/json_io.hpp"
#include "idealtop/operators.hpp"

namespace idealtop {

namespace {

void require_members(const Family& family, const GroundSet& ground) {
  for (Subset s : family) ground.require(s);
}

}  // namespace

std::string describe(const FamilyViolation& v, const GroundSet& ground) {
  using K = FamilyViolation::Kind;
  switch (v.kind) {
    case K::MissingEmpty: return "missing the empty set";
    case K::MissingUniverse: return "missing the whole space " + ground.format(v.missing);
    case K::NotUnionClosed:
      return "not closed under union: (" + ground.format(v.first) + "," + ground.format(v.second) + ") gives " +
             ground.format(v.missing);
    case K::NotIntersectionClosed:
      return "not closed under intersection: (" + ground.format(v.first) + "," + ground.format(v.second) +
             ") gives " + ground.format(v.missing);
    case K::NotHereditary:
      return "not hereditary: " + ground.format(v.first) + " is a member but its subset " +
             ground.format(v.second) + " is not";
  }
  return {};
}

ValidationResult validate_topology(const Family& family, const GroundSet& ground) {
  using K = FamilyViolation::Kind;
  require_members(family, ground);
  if (!family.contains(Subset{})) return {FamilyViolation{K::MissingEmpty, {}, {}, Subset{}}};
  if (!family.contains(ground.universe()))
    return {FamilyViolation{K::MissingUniverse, {}, {}, ground.universe()}};
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!family.contains(m[i] | m[j])) return {FamilyViolation{K::NotUnionClosed, m[i], m[j], m[i] | m[j]}};
      if (!family.contains(m[i] & m[j]))
        return {FamilyViolation{K::NotIntersectionClosed, m[i], m[j], m[i] & m[j]}};
    }
  }
  return {};
}

ValidationResult validate_ideal(const Family& family, const GroundSet& ground) {
  using K = FamilyViolation::Kind;
  require_members(family, ground);
  if (!family.contains(Subset{})) return {FamilyViolation{K::MissingEmpty, {}, {}, Subset{}}};
  for (Subset b : family) {
    // Submasks of b in increasing order.
    for (std::uint32_t s = 0; s < b.bits(); ++s) {
      Subset sub{s};
      if (sub.subset_of(b) && !family.contains(sub)) return {FamilyViolation{K::NotHereditary, b, sub, sub}};
    }
  }
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!family.contains(m[i] | m[j])) return {FamilyViolation{K::NotUnionClosed, m[i], m[j], m[i] | m[j]}};
  return {};
}

Topology::Topology(Family family, const GroundSet& ground) : family_(std::move(family)) {
  if (auto r = validate_topology(family_, ground); !r.holds())
    throw SpaceError("topology " + describe(*r.violation, ground));
}

Ideal::Ideal(Family family, const GroundSet& ground) : family_(std::move(family)) {
  if (auto r = validate_ideal(family_, ground); !r.holds())
    throw SpaceError("ideal " + describe(*r.violation, ground));
}

namespace {

// Adds a op b for every pair until nothing new appears.
template <typename Op>
void close_pairwise(FamilyMask& mask, int count, Op op) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < count; ++a) {
      if (!mask.test(a)) continue;
      for (int b = a + 1; b < count; ++b) {
        if (!mask.test(b)) continue;
        auto c = op(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        if (!mask.test(c)) {
          mask.set(c);
          grew = true;
        }
      }
    }
  }
}

}  // namespace

Topology generate_topology(const Family& subbase, const GroundSet& ground) {
  require_members(subbase, ground);
  const int count = ground.subset_count();
  FamilyMask mask = subbase.mask();
  // The empty intersection is X; the empty union is ∅.
  mask.set(ground.universe().bits());
  close_pairwise(mask, count, [](std::uint32_t a, std::uint32_t b) { return a & b; });
  close_pairwise(mask, count, [](std::uint32_t a, std::uint32_t b) { return a | b; });
  mask.set(0);
  return Topology{Family::from_mask(mask, count), ground};
}

Ideal generate_ideal(const Family& generators, const GroundSet& ground) {
  require_members(generators, ground);
  Subset top;
  for (Subset g : generators) top |= g;
  std::vector<Subset> members;
  // Every subset of the union of all generators.
  for (std::uint32_t s = top.bits();; s = (s - 1) & top.bits()) {
    members.push_back(Subset{s});
    if (s == 0) break;
  }
  return Ideal{Family{std::move(members)}, ground};
}

Space::Space(GroundSet ground, Topology topology, Ideal ideal)
    : ground_(std::move(ground)), topology_(std::move(topology)), ideal_(std::move(ideal)) {
  // Re-validate against this ground set; the members may have been checked against another.
  if (auto r = validate_topology(topology_.family(), ground_); !r.holds())
    throw SpaceError("topology " + describe(*r.violation, ground_));
  if (auto r = validate_ideal(ideal_.family(), ground_); !r.holds())
    throw SpaceError("ideal " + describe(*r.violation, ground_));
  interior_ = compute::interior_table(topology_.family(), ground_);
  const int count = ground_.subset_count();
  for (OpenKind k : kAllKinds) {
    const int ki = kind_index(k);
    families_[ki] = compute::kopen_family(topology_.family(), ground_, k);
    for (int p = 0; p < ground_.size(); ++p)
      for (Subset u : families_[ki])
        if (u.contains(p)) neighborhoods_[ki][p].push_back(u);
    for (int a = 0; a < count; ++a) {
      Subset target{static_cast<std::uint32_t>(a)};
      Subset acc = ground_.universe();
      for (Subset u : families_[ki]) {
        Subset closed = ground_.complement(u);
        if (target.subset_of(closed)) acc &= closed;
      }
      kclosure_[ki][a] = acc;
    }
  }
}

namespace {

using nlohmann::json;

Family read_family(const json& doc, const char* key, const GroundSet& ground) {
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw SpaceError(std::string("\"") + key + "\" must be an array of arrays of point labels");
  std::vector<Subset> members;
  for (const json& set : arr) {
    if (!set.is_array())
      throw SpaceError(std::string("\"") + key + "\" must be an array of arrays of point labels");
    std::vector<std::string> labels;
    for (const json& l : set) {
      if (!l.is_string()) throw SpaceError(std::string("point labels in \"") + key + "\" must be strings");
      labels.push_back(l.get<std::string>());
    }
    members.push_back(ground.subset_of_labels(labels));
  }
  return Family{std::move(members)};
}

}  // namespace

namespace {

Space space_from_json_unchecked(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SpaceError("space document must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw SpaceError("space document needs \"points\": an array of strings");
  std::vector<std::string> labels;
  for (const json& p : doc["points"]) {
    if (!p.is_string()) throw SpaceError("\"points\" entries must be strings");
    labels.push_back(p.get<std::string>());
  }
  GroundSet ground{std::move(labels)};

  const bool has_top = doc.contains("topology"), has_sub = doc.contains("topology_subbase");
  if (has_top == has_sub) throw SpaceError("space document needs exactly one of \"topology\" or \"topology_subbase\"");
  const bool has_ideal = doc.contains("ideal"), has_gen = doc.contains("ideal_generators");
  if (has_ideal == has_gen) throw SpaceError("space document needs exactly one of \"ideal\" or \"ideal_generators\"");
  for (const auto& [key, _] : doc.items()) {
    if (key != "points" && key != "topology" && key != "topology_subbase" && key != "ideal" &&
        key != "ideal_generators")
      throw SpaceError("unknown key \"" + key + "\" in space document");
  }

  Topology topology = has_top ? Topology{read_family(doc, "topology", ground), ground}
                              : generate_topology(read_family(doc, "topology_subbase", ground), ground);
  Ideal ideal = has_ideal ? Ideal{read_family(doc, "ideal", ground), ground}
                          : generate_ideal(read_family(doc, "ideal_generators", ground), ground);
  return Space{std::move(ground), std::move(topology), std::move(ideal)};
}

}  // namespace

Space space_from_json(const nlohmann::json& doc) {
  try {
    return space_from_json_unchecked(doc);
  } catch (const nlohmann::json::exception& e) {
    throw SpaceError(std::string("malformed space document: ") + e.what());
  }
}

nlohmann::ordered_json space_to_json(const Space& space) {
  nlohmann::ordered_json doc;
  doc["points"] = space.ground().labels();
  auto family = [&](const Family& f) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Subset s : f) arr.push_back(space.ground().labels_of(s));
    return arr;
  };
  doc["topology"] = family(space.topology().family());
  doc["ideal"] = family(space.ideal().family());
  return doc;
}

Space parse_space(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SpaceError(std::string("malformed space document: ") + e.what());
  }
  return space_from_json(doc);
}

std::string serialize_space(const Space& space) { return space_to_json(space).dump(2) + "\n"; }

}  // namespace idealtop
