#pragma once

// Set-valued operators on an ideal topological space: interior, closure and
// derived set, the generalized-open families and their closures, local
// functions of both shapes, their ψ-duals, Cl*-style operators, and the
// families they induce.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealtop/open_kind.hpp"
#include "idealtop/space.hpp"

namespace idealtop {

/// A local-function-style operator.
///
/// Plain (no `closure`): z is in f(A) iff every `nbhd`-open U containing z
/// has U ∩ A outside the ideal.
///
/// Closure style: the neighbourhood U is first replaced by its `closure`-kind
/// closure before intersecting with A.
struct LocalFnSpec {
  OpenKind nbhd = OpenKind::Open;
  std::optional<OpenKind> closure;

  static constexpr LocalFnSpec plain(OpenKind k) { return {k, std::nullopt}; }
  static constexpr LocalFnSpec closure_style(OpenKind nbhd, OpenKind cl) { return {nbhd, cl}; }

  [[nodiscard]] bool is_plain() const { return !closure.has_value(); }
  /// Alias used by the DSL and CLI: "star", "sstar", ..., "G", "g", "xis", ...,
  /// or "xi:<nbhd>:<cl>" for combinations without a named alias.
  [[nodiscard]] std::string name() const;

  friend bool operator==(const LocalFnSpec&, const LocalFnSpec&) = default;
};

namespace specs {
inline constexpr LocalFnSpec kStar = LocalFnSpec::plain(OpenKind::Open);
inline constexpr LocalFnSpec kSemiStar = LocalFnSpec::plain(OpenKind::Semi);
inline constexpr LocalFnSpec kPreStar = LocalFnSpec::plain(OpenKind::Pre);
inline constexpr LocalFnSpec kBStar = LocalFnSpec::plain(OpenKind::B);
inline constexpr LocalFnSpec kBetaStar = LocalFnSpec::plain(OpenKind::Beta);
inline constexpr LocalFnSpec kGamma = LocalFnSpec::closure_style(OpenKind::Open, OpenKind::Open);
inline constexpr LocalFnSpec kSmallGamma = LocalFnSpec::closure_style(OpenKind::Open, OpenKind::Semi);
inline constexpr LocalFnSpec kXiSemi = LocalFnSpec::closure_style(OpenKind::Semi, OpenKind::Semi);
inline constexpr LocalFnSpec kXiPre = LocalFnSpec::closure_style(OpenKind::Pre, OpenKind::Pre);
inline constexpr LocalFnSpec kXiB = LocalFnSpec::closure_style(OpenKind::B, OpenKind::B);
inline constexpr LocalFnSpec kXiBeta = LocalFnSpec::closure_style(OpenKind::Beta, OpenKind::Beta);

/// The eleven named operators.
inline constexpr std::array<LocalFnSpec, 11> kNamed = {kStar,  kSemiStar,   kPreStar, kBStar,  kBetaStar, kGamma,
                                                       kSmallGamma, kXiSemi, kXiPre,  kXiB, kXiBeta};
}  // namespace specs

/// Resolves a local-function alias ("sstar", "xibeta", "xi:pre:semi", "star:b", ...).
[[nodiscard]] std::optional<LocalFnSpec> parse_local_fn(std::string_view alias);

[[nodiscard]] Subset interior(const Space& space, Subset a);
[[nodiscard]] Subset closure(const Space& space, Subset a);
[[nodiscard]] Subset derived_set(const Space& space, Subset a);
[[nodiscard]] const Family& kopen_family(const Space& space, OpenKind kind);
/// Intersection of all kind-closed supersets of a.
[[nodiscard]] Subset kclosure(const Space& space, OpenKind kind, Subset a);
[[nodiscard]] Subset local_function(const Space& space, const LocalFnSpec& spec, Subset a);
/// X \ f(X \ a).
[[nodiscard]] Subset psi_dual(const Space& space, const LocalFnSpec& spec, Subset a);
/// a ∪ f(a).
[[nodiscard]] Subset cl_star(const Space& space, const LocalFnSpec& spec, Subset a);
/// {a : a ⊆ ψ_f(a)}.
[[nodiscard]] Family psi_fix_family(const Space& space, const LocalFnSpec& spec);

/// Interior table and generalized-open families computed from the topology
/// alone. Space uses these to fill its caches; exposed for cache cross-checks.
namespace compute {
[[nodiscard]] std::array<Subset, kMaxSubsets> interior_table(const Family& topology, const GroundSet& ground);
[[nodiscard]] Family kopen_family(const Family& topology, const GroundSet& ground, OpenKind kind);
}  // namespace compute

/// Any unary operator reachable by alias from the DSL or CLI.
///
///   int cl der                     interior, closure, derived set
///   scl pcl bcl betacl             generalized closures
///   star sstar pstar bstar betastar G g xis xip xib xibeta  local functions
///   psi psis psip psib psibetastar psiG psig psixis psixip psixib psixibeta  ψ-duals
///   psi:<local>                    ψ-dual of any local-function alias
///   clstar:<op>                    a ∪ op(a)
class Operator {
 public:
  enum class Base { Interior, Closure, Derived, KClosure, Local, Psi };

  static Operator interior_op() { return Operator{Base::Interior}; }
  static Operator closure_op() { return Operator{Base::Closure}; }
  static Operator derived_op() { return Operator{Base::Derived}; }
  static Operator kclosure_op(OpenKind k) { return Operator{Base::KClosure, k}; }
  static Operator local(LocalFnSpec s) { return Operator{Base::Local, OpenKind::Open, s}; }
  static Operator psi(LocalFnSpec s) { return Operator{Base::Psi, OpenKind::Open, s}; }
  [[nodiscard]] Operator with_cl_star() const {
    Operator o = *this;
    o.cl_star_ = true;
    return o;
  }

  [[nodiscard]] Subset apply(const Space& space, Subset a) const;
  [[nodiscard]] std::string name() const;

  [[nodiscard]] Base base() const { return base_; }
  [[nodiscard]] OpenKind kind() const { return kind_; }
  [[nodiscard]] const LocalFnSpec& spec() const { return spec_; }
  [[nodiscard]] bool is_cl_star() const { return cl_star_; }

  friend bool operator==(const Operator&, const Operator&) = default;

 private:
  explicit Operator(Base b, OpenKind k = OpenKind::Open, LocalFnSpec s = {}) : base_(b), kind_(k), spec_(s) {}

  Base base_;
  OpenKind kind_;
  LocalFnSpec spec_;
  bool cl_star_ = false;
};

[[nodiscard]] std::optional<Operator> resolve_operator(std::string_view alias);
/// Every fixed alias in the table (generic "psi:", "xi:", "star:" and "clstar:" forms excluded).
[[nodiscard]] std::vector<std::string> operator_aliases();

}  // namespace idealtop
