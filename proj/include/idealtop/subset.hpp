#pragma once

// Subsets of a small ground set as bit words, and canonical families of them.

#include <bit>
#include <bitset>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace idealtop {

inline constexpr int kMaxPoints = 8;
inline constexpr int kMaxSubsets = 1 << kMaxPoints;

/// A subset of the ground set: bit i is set iff point i is a member.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int point) { return Subset{1u << point}; }

  [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool contains(int point) const { return (bits_ >> point) & 1u; }
  [[nodiscard]] constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool meets(Subset other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits_ | b.bits_}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits_ & b.bits_}; }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits_ & ~b.bits_}; }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

class SpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered, distinct point labels. 1 <= n <= 8.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  /// Points labelled w1..wn.
  static GroundSet standard(int n);

  [[nodiscard]] int size() const { return static_cast<int>(labels_.size()); }
  [[nodiscard]] int subset_count() const { return 1 << size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] Subset universe() const { return Subset{(1u << size()) - 1u}; }
  [[nodiscard]] Subset complement(Subset a) const { return universe() - a; }
  [[nodiscard]] bool in_range(Subset a) const { return a.subset_of(universe()); }

  /// Throws SpaceError when a has bits beyond the ground set.
  void require(Subset a) const;

  /// Label lookup. "w3" is accepted for a point declared as "ϖ3".
  [[nodiscard]] std::optional<int> index_of(std::string_view label) const;
  /// Throws SpaceError naming the label when unknown.
  [[nodiscard]] Subset subset_of_labels(std::span<const std::string> labels) const;
  [[nodiscard]] std::vector<std::string> labels_of(Subset a) const;
  /// "{w1,w3}"; empty set prints "{}".
  [[nodiscard]] std::string format(Subset a) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

using FamilyMask = std::bitset<kMaxSubsets>;

/// Canonical collection of subsets: strictly increasing by bit value.
class Family {
 public:
  Family() = default;
  explicit Family(std::vector<Subset> members);
  static Family from_mask(const FamilyMask& mask, int subset_count = kMaxSubsets);

  [[nodiscard]] const std::vector<Subset>& members() const { return members_; }
  [[nodiscard]] const FamilyMask& mask() const { return mask_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool contains(Subset a) const { return a.bits() < kMaxSubsets && mask_.test(a.bits()); }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  friend bool operator==(const Family& a, const Family& b) { return a.members_ == b.members_; }

 private:
  std::vector<Subset> members_;
  FamilyMask mask_;
};

/// Orders families by their membership mask read as a 256-bit unsigned integer.
[[nodiscard]] std::strong_ordering compare_encoding(const Family& a, const Family& b);

}  // namespace idealtop
