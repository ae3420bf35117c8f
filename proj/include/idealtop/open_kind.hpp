#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace idealtop {

/// Generalized-open set families: open, semi-open, preopen, b-open, beta-open.
enum class OpenKind { Open, Semi, Pre, B, Beta };

inline constexpr std::array<OpenKind, 5> kAllKinds = {OpenKind::Open, OpenKind::Semi, OpenKind::Pre,
                                                      OpenKind::B, OpenKind::Beta};

constexpr int kind_index(OpenKind k) { return static_cast<int>(k); }

constexpr std::string_view kind_name(OpenKind k) {
  switch (k) {
    case OpenKind::Open: return "open";
    case OpenKind::Semi: return "semi";
    case OpenKind::Pre: return "pre";
    case OpenKind::B: return "b";
    case OpenKind::Beta: return "beta";
  }
  return "?";
}

constexpr std::optional<OpenKind> parse_kind(std::string_view s) {
  for (OpenKind k : kAllKinds)
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

}  // namespace idealtop
