#include "idealtop/subset.hpp"

#include <algorithm>
#include <set>

namespace idealtop {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > static_cast<std::size_t>(kMaxPoints))
    throw SpaceError("ground set must have between 1 and 8 points, got " + std::to_string(labels_.size()));
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw SpaceError("point labels must be non-empty");
    if (!seen.insert(l).second) throw SpaceError("duplicate point label '" + l + "'");
  }
}

GroundSet GroundSet::standard(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("w" + std::to_string(i));
  return GroundSet{std::move(labels)};
}

void GroundSet::require(Subset a) const {
  if (!in_range(a))
    throw SpaceError("subset " + std::to_string(a.bits()) + " exceeds a ground set of " + std::to_string(size()) +
                     " points");
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  // ASCII spelling of the ϖ glyph.
  static constexpr std::string_view kVarpi = "\xCF\x96";
  if (label.starts_with('w')) {
    std::string alt = std::string(kVarpi) + std::string(label.substr(1));
    for (int i = 0; i < size(); ++i)
      if (labels_[i] == alt) return i;
  }
  return std::nullopt;
}

Subset GroundSet::subset_of_labels(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw SpaceError("unknown point label '" + l + "'");
    s |= Subset::singleton(*i);
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset a) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (a.contains(i)) out.push_back(labels_[i]);
  return out;
}

std::string GroundSet::format(Subset a) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!a.contains(i)) continue;
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  }
  out += '}';
  return out;
}

Family::Family(std::vector<Subset> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Subset s : members_) {
    if (s.bits() >= static_cast<std::uint32_t>(kMaxSubsets))
      throw SpaceError("subset " + std::to_string(s.bits()) + " exceeds the 8-point limit");
    mask_.set(s.bits());
  }
}

Family Family::from_mask(const FamilyMask& mask, int subset_count) {
  Family f;
  for (int b = 0; b < subset_count; ++b)
    if (mask.test(b)) f.members_.push_back(Subset{static_cast<std::uint32_t>(b)});
  f.mask_ = mask;
  return f;
}

std::strong_ordering compare_encoding(const Family& a, const Family& b) {
  // The highest differing subset decides, as for big integers.
  const auto& x = a.members();
  const auto& y = b.members();
  auto i = x.rbegin();
  auto j = y.rbegin();
  for (; i != x.rend() && j != y.rend(); ++i, ++j)
    if (*i != *j) return *i <=> *j;
  if (i == x.rend() && j == y.rend()) return std::strong_ordering::equal;
  return i == x.rend() ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace idealtop
