#pragma once

// Checkable algebraic laws over a space. Every law quantifies over all subset
// pairs (2^n × 2^n) and reports the lexicographically first violation, pairs
// ordered by the first variable's bit value and then the second's.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealtop/operators.hpp"
#include "idealtop/space.hpp"

namespace idealtop {

enum class Relation { Eq, SubsetEq };
enum class Status { Holds, Violated };

[[nodiscard]] std::string_view status_name(Status s);

struct Binding {
  std::string name;
  Subset value;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// Holds, or Violated with the bindings and both evaluated sides.
struct Verdict {
  Status status = Status::Holds;
  std::vector<Binding> bindings;
  Relation relation = Relation::Eq;
  Subset lhs;
  Subset rhs;
  std::string detail;

  [[nodiscard]] bool holds() const { return status == Status::Holds; }
  [[nodiscard]] std::optional<Subset> binding(std::string_view name) const;

  static Verdict violated(std::vector<Binding> bindings, Relation rel, Subset lhs, Subset rhs,
                          std::string detail = {}) {
    return Verdict{Status::Violated, std::move(bindings), rel, lhs, rhs, std::move(detail)};
  }

  /// Compares status, bindings and sides; `detail` is descriptive only.
  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.status == b.status && a.bindings == b.bindings && a.relation == b.relation && a.lhs == b.lhs &&
           a.rhs == b.rhs;
  }
};

/// Multi-line human-readable form with labels.
[[nodiscard]] std::string format_verdict(const Verdict& v, const GroundSet& ground);

/// f(A ∪ B) == f(A) ∪ f(B).
[[nodiscard]] Verdict check_additivity(const Space& space, const LocalFnSpec& spec);
/// f(A) ∖ f(B) == f(A ∖ B) ∖ f(B).
[[nodiscard]] Verdict check_difference_law(const Space& space, const LocalFnSpec& spec);

enum class Connective { Cap, Cup };
/// ψ_f(A ∩ B) == ψ_f(A) ∩ ψ_f(B), or the same with ∪.
[[nodiscard]] Verdict check_psi_distributivity(const Space& space, const LocalFnSpec& spec, Connective c);

struct KuratowskiReport {
  Verdict fixes_empty;   ///< cl*(∅) == ∅
  Verdict extensive;     ///< A ⊆ cl*(A)
  Verdict idempotent;    ///< cl*(cl*(A)) == cl*(A)
  Verdict additive;      ///< cl*(A ∪ B) == cl*(A) ∪ cl*(B)

  [[nodiscard]] bool all_hold() const {
    return fixes_empty.holds() && extensive.holds() && idempotent.holds() && additive.holds();
  }
  /// First failing axiom in the order above, with its name.
  [[nodiscard]] std::optional<std::pair<std::string_view, const Verdict*>> first_failure() const;
};

/// The four Kuratowski axioms for a ↦ a ∪ f(a).
[[nodiscard]] KuratowskiReport check_kuratowski(const Space& space, const LocalFnSpec& spec);

/// The topology induced by a ↦ a ∪ f(a), or a refusal when that operator is
/// not a Kuratowski closure.
struct StarTopology {
  std::optional<Topology> topology;
  KuratowskiReport kuratowski;
  [[nodiscard]] bool refused() const { return !topology.has_value(); }
};

[[nodiscard]] StarTopology star_topology(const Space& space, const LocalFnSpec& spec);

/// Topology axioms as a verdict. A violated pair is bound to A and B; lhs is
/// the missing combination and detail names the operation.
[[nodiscard]] Verdict check_family_is_topology(const Family& family, const GroundSet& ground);
[[nodiscard]] Verdict check_family_intersection_closed(const Family& family);

/// A law from the registry:
///   additivity:<op>  diff-law:<op>  psi-cap:<op>  psi-cup:<op>  kuratowski:<op>
///   eta-topology:<op>  family-cap-closed:<kind>
/// where <op> is a local-function alias and <kind> an open kind.
struct Law {
  std::string name;
  int arity = 0;
  std::function<Verdict(const Space&)> check;
};

[[nodiscard]] std::optional<Law> find_law(std::string_view name);

/// Registry names for every law kind and every named local function.
[[nodiscard]] std::vector<std::string> registered_law_names();

/// Recomputes the violation a verdict claims, straight from the operators.
/// False for a Holds verdict or a witness that does not reproduce.
[[nodiscard]] bool revalidate(const Space& space, std::string_view law_name, const Verdict& verdict);

}  // namespace idealtop
