#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "idealtop/search.hpp"
#include "idealtop/space.hpp"
#include "oracle.hpp"

namespace support {

using idealtop::Family;
using idealtop::GroundSet;
using idealtop::Space;
using idealtop::Subset;

inline std::string source_path(const std::string& rel) { return std::string(IDEALTOP_SOURCE_DIR) + "/" + rel; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Space corpus_space(const std::string& id) {
  return idealtop::parse_space(read_text(source_path("corpus/spaces/" + id + ".json")));
}

inline const std::vector<std::string>& corpus_ids() {
  static const std::vector<std::string> ids = {"ex-3.3-1", "ex-3.3-2", "ex-3.6", "ex-3.7", "ex-3.8", "ex-3.10",
                                               "ex-4.2",   "ex-4.3",   "ex-4.4", "ex-4.7", "ex-4.8"};
  return ids;
}

/// The two distinct spaces behind the corpus.
inline std::vector<Space> corpus_spaces() { return {corpus_space("ex-3.3-1"), corpus_space("ex-3.3-2")}; }

/// Subset from 1-based point numbers: S({1,3}) = {w1,w3}.
inline Subset S(std::initializer_list<int> points) {
  Subset out;
  for (int p : points) out |= Subset::singleton(p - 1);
  return out;
}

inline Family F(std::initializer_list<Subset> members) { return Family{std::vector<Subset>(members)}; }

inline Space make_space(int n, const Family& topology, const Family& ideal) {
  const GroundSet g = GroundSet::standard(n);
  return Space{g, idealtop::Topology{topology, g}, idealtop::Ideal{ideal, g}};
}

inline oracle::Space to_oracle(const Space& s) {
  oracle::Space o;
  o.n = s.size();
  for (Subset u : s.topology().family()) o.open.push_back(u.bits());
  for (Subset u : s.ideal().family()) o.ideal.push_back(u.bits());
  return o;
}

/// Every space on n points, n <= 3.
inline std::vector<Space> all_spaces(int n) {
  std::vector<Space> out;
  const GroundSet g = GroundSet::standard(n);
  const auto ideals = idealtop::enumerate_ideals(n);
  for (const auto& t : idealtop::enumerate_topologies(n))
    for (const auto& i : ideals) out.emplace_back(g, t, i);
  return out;
}

/// All spaces with n <= 3 plus the corpus spaces.
inline const std::vector<Space>& property_spaces() {
  static const std::vector<Space> spaces = [] {
    std::vector<Space> out;
    for (int n = 1; n <= 3; ++n)
      for (auto& s : all_spaces(n)) out.push_back(std::move(s));
    for (auto& s : corpus_spaces()) out.push_back(std::move(s));
    return out;
  }();
  return spaces;
}

}  // namespace support
