#pragma once

// Enumeration of small ideal topological spaces and counterexample search.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "idealtop/dsl.hpp"
#include "idealtop/space.hpp"

namespace idealtop {

/// Every topology on n points (n <= 4), ascending by membership mask.
/// Throws std::invalid_argument for larger n.
[[nodiscard]] std::vector<Topology> enumerate_topologies(int n);

/// Every ideal on n points (n <= 8), ascending by membership mask.
[[nodiscard]] std::vector<Ideal> enumerate_ideals(int n);

/// Topologies generated from every subbase of at most `max_subbase_size`
/// proper non-empty subsets, in generation order, duplicates dropped.
[[nodiscard]] std::vector<Topology> subbase_topologies(int n, int max_subbase_size);

enum class SearchMode { Exhaustive, SubbaseGenerated, UserSpaces };
enum class Want { First, AllMinimal };
enum class SearchStatus { CounterexampleFound, LawCertified, BudgetExhausted };

[[nodiscard]] std::string_view mode_name(SearchMode m);
[[nodiscard]] std::string_view status_name(SearchStatus s);

struct Budget {
  std::uint64_t max_spaces = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_assignments = std::numeric_limits<std::uint64_t>::max();
};

struct SearchTask {
  std::string law_text;
  dsl::LawAst law;
  int n = 3;
  SearchMode mode = SearchMode::Exhaustive;
  Budget budget;
  Want want = Want::First;
  std::vector<Space> user_spaces;  ///< SearchMode::UserSpaces
  int max_subbase_size = 2;        ///< SearchMode::SubbaseGenerated
  bool iso_reduce = false;         ///< scan one representative per relabeling class
  unsigned threads = 1;            ///< 0 = hardware concurrency
  dsl::CheckOptions check;

  /// Parses the law and fills `law_text` and `law`.
  static SearchTask for_law(std::string_view text, int n, SearchMode mode = SearchMode::Exhaustive);
};

struct Witness {
  Space space;
  Verdict verdict;
};

struct SearchStats {
  std::uint64_t spaces_scanned = 0;
  std::uint64_t assignments_evaluated = 0;
  std::uint64_t spaces_total = 0;  ///< size of the space stream
  bool exhaustive = false;         ///< the stream covers every space on n points
  bool budget_cut = false;
};

struct SearchResult {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::vector<Witness> witnesses;
  SearchStats stats;
};

/// Scans spaces in stream order and each space's assignments in lexicographic
/// order. The result does not depend on `task.threads`.
[[nodiscard]] SearchResult run_search(const SearchTask& task);

/// {status, law, n, mode, want, witnesses: [{space, bindings, lhs, rhs}], stats}
[[nodiscard]] nlohmann::ordered_json search_report(const SearchTask& task, const SearchResult& result);

/// True when the space is the least relabeling of itself, comparing
/// (topology encoding, ideal encoding).
[[nodiscard]] bool is_canonical_labeling(const Family& topology, const Family& ideal, int n);

}  // namespace idealtop
