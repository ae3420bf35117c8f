#pragma once

// Topologies, ideals and the ideal topological space container.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idealtop/open_kind.hpp"
#include "idealtop/subset.hpp"

namespace idealtop {

/// Why a family fails the topology or ideal axioms.
struct FamilyViolation {
  enum class Kind { MissingEmpty, MissingUniverse, NotUnionClosed, NotIntersectionClosed, NotHereditary };
  Kind kind;
  /// Offending pair. For NotHereditary, `first` is the member and `second` its missing subset.
  Subset first;
  Subset second;
  /// The set that should be in the family but is not.
  Subset missing;
};

struct ValidationResult {
  std::optional<FamilyViolation> violation;
  [[nodiscard]] bool holds() const { return !violation.has_value(); }
};

[[nodiscard]] std::string describe(const FamilyViolation& v, const GroundSet& ground);

/// Checks ∅, X and pairwise ∪/∩ closure. Reports the first violating pair, pairs
/// ordered by (first, second) bit value with first < second; ∪ is tested before ∩.
[[nodiscard]] ValidationResult validate_topology(const Family& family, const GroundSet& ground);

/// Checks ∅, heredity and pairwise ∪ closure, in that order.
[[nodiscard]] ValidationResult validate_ideal(const Family& family, const GroundSet& ground);

class Topology {
 public:
  /// Throws SpaceError describing the first axiom violation.
  Topology(Family family, const GroundSet& ground);
  [[nodiscard]] const Family& family() const { return family_; }
  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  Family family_;
};

class Ideal {
 public:
  /// Throws SpaceError describing the first axiom violation.
  Ideal(Family family, const GroundSet& ground);
  [[nodiscard]] const Family& family() const { return family_; }
  [[nodiscard]] bool contains(Subset a) const { return family_.contains(a); }
  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  Family family_;
};

/// Smallest topology containing the subbase.
[[nodiscard]] Topology generate_topology(const Family& subbase, const GroundSet& ground);
/// Smallest ideal containing the generators.
[[nodiscard]] Ideal generate_ideal(const Family& generators, const GroundSet& ground);

/// An ideal topological space with every generalized-open family and closure
/// table computed once at construction. Immutable afterwards.
class Space {
 public:
  Space(GroundSet ground, Topology topology, Ideal ideal);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const Topology& topology() const { return topology_; }
  [[nodiscard]] const Ideal& ideal() const { return ideal_; }
  [[nodiscard]] int size() const { return ground_.size(); }
  [[nodiscard]] Subset universe() const { return ground_.universe(); }
  [[nodiscard]] Subset complement(Subset a) const { return ground_.complement(a); }
  [[nodiscard]] bool in_ideal(Subset a) const { return ideal_.contains(a); }

  [[nodiscard]] Subset cached_interior(Subset a) const { return interior_[a.bits()]; }
  [[nodiscard]] const Family& cached_family(OpenKind k) const { return families_[kind_index(k)]; }
  [[nodiscard]] Subset cached_kclosure(OpenKind k, Subset a) const { return kclosure_[kind_index(k)][a.bits()]; }
  /// Members of the kind's family that contain the point.
  [[nodiscard]] std::span<const Subset> neighborhoods(OpenKind k, int point) const {
    return neighborhoods_[kind_index(k)][point];
  }

  friend bool operator==(const Space& a, const Space& b) {
    return a.ground_ == b.ground_ && a.topology_ == b.topology_ && a.ideal_ == b.ideal_;
  }

 private:
  GroundSet ground_;
  Topology topology_;
  Ideal ideal_;
  std::array<Subset, kMaxSubsets> interior_{};
  std::array<Family, 5> families_;
  std::array<std::array<Subset, kMaxSubsets>, 5> kclosure_{};
  std::array<std::array<std::vector<Subset>, kMaxPoints>, 5> neighborhoods_;
};

/// Parses a space document (JSON). Throws SpaceError on schema, label or axiom errors.
[[nodiscard]] Space parse_space(std::string_view document);
/// Writes "points", "topology" and "ideal" as full families.
[[nodiscard]] std::string serialize_space(const Space& space);

}  // namespace idealtop
