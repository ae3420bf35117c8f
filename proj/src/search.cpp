#include "idealtop/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "idealtop/json_io.hpp"

namespace idealtop {

namespace {

constexpr int kMaxExhaustivePoints = 4;

void require_points(int n) {
  if (n < 1 || n > kMaxPoints) throw std::invalid_argument("point count must be between 1 and 8");
}

bool mask_is_topology(std::uint32_t mask, int count) {
  for (int a = 0; a < count; ++a) {
    if (!((mask >> a) & 1u)) continue;
    for (int b = a + 1; b < count; ++b) {
      if (!((mask >> b) & 1u)) continue;
      if (!((mask >> (a | b)) & 1u) || !((mask >> (a & b)) & 1u)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Topology> enumerate_topologies(int n) {
  require_points(n);
  if (n > kMaxExhaustivePoints)
    throw std::invalid_argument("exhaustive topology enumeration supports at most 4 points, got " +
                                std::to_string(n));
  const GroundSet ground = GroundSet::standard(n);
  const int count = 1 << n;
  const std::uint32_t required = 1u | (1u << (count - 1));
  const std::uint64_t limit = std::uint64_t{1} << count;
  std::vector<Topology> out;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    if ((mask & required) != required || !mask_is_topology(mask, count)) continue;
    FamilyMask fm;
    for (int b = 0; b < count; ++b)
      if ((mask >> b) & 1u) fm.set(b);
    out.emplace_back(Family::from_mask(fm, count), ground);
  }
  return out;
}

std::vector<Ideal> enumerate_ideals(int n) {
  require_points(n);
  // A finite ideal is the power set of the union of its members.
  const GroundSet ground = GroundSet::standard(n);
  std::vector<Ideal> out;
  for (std::uint32_t top = 0; top < static_cast<std::uint32_t>(1 << n); ++top)
    out.push_back(generate_ideal(Family{{Subset{top}}}, ground));
  return out;
}

std::vector<Topology> subbase_topologies(int n, int max_subbase_size) {
  require_points(n);
  const GroundSet ground = GroundSet::standard(n);
  const std::uint32_t full = ground.universe().bits();
  std::vector<Subset> candidates;
  for (std::uint32_t s = 1; s < full; ++s) candidates.push_back(Subset{s});

  std::vector<Topology> out;
  std::unordered_set<FamilyMask> seen;
  auto emit = [&](std::vector<Subset> subbase) {
    Topology t = generate_topology(Family{std::move(subbase)}, ground);
    if (seen.insert(t.family().mask()).second) out.push_back(std::move(t));
  };

  emit({});
  const int m = static_cast<int>(candidates.size());
  for (int k = 1; k <= max_subbase_size && k <= m; ++k) {
    // Index combinations in lexicographic order.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<Subset> subbase;
      for (int i : idx) subbase.push_back(candidates[i]);
      emit(std::move(subbase));
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::string_view mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::Exhaustive: return "exhaustive";
    case SearchMode::SubbaseGenerated: return "subbase-generated";
    case SearchMode::UserSpaces: return "user-spaces";
  }
  return "?";
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::CounterexampleFound: return "CounterexampleFound";
    case SearchStatus::LawCertified: return "LawCertified";
    case SearchStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

SearchTask SearchTask::for_law(std::string_view text, int n, SearchMode mode) {
  SearchTask t;
  t.law_text = std::string(text);
  t.law = dsl::parse_law(text);
  t.n = n;
  t.mode = mode;
  return t;
}

namespace {

Family permute_family(const Family& f, const std::vector<int>& perm) {
  std::vector<Subset> out;
  out.reserve(f.size());
  for (Subset s : f) {
    Subset p;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (s.contains(static_cast<int>(i))) p |= Subset::singleton(perm[i]);
    out.push_back(p);
  }
  return Family{std::move(out)};
}

}  // namespace

bool is_canonical_labeling(const Family& topology, const Family& ideal, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    const Family t = permute_family(topology, perm);
    auto c = compare_encoding(t, topology);
    if (c == std::strong_ordering::less) return false;
    if (c == std::strong_ordering::equal && compare_encoding(permute_family(ideal, perm), ideal) < 0) return false;
  }
  return true;
}

namespace {

// The stream of spaces a task scans, addressed by index.
class SpaceStream {
 public:
  explicit SpaceStream(const SearchTask& task) : task_(task) {
    switch (task.mode) {
      case SearchMode::Exhaustive:
        topologies_ = enumerate_topologies(task.n);
        ideals_ = enumerate_ideals(task.n);
        exhaustive_ = true;
        break;
      case SearchMode::SubbaseGenerated:
        topologies_ = subbase_topologies(task.n, task.max_subbase_size);
        ideals_ = enumerate_ideals(task.n);
        break;
      case SearchMode::UserSpaces:
        break;
    }
  }

  [[nodiscard]] std::uint64_t size() const {
    if (task_.mode == SearchMode::UserSpaces) return task_.user_spaces.size();
    return static_cast<std::uint64_t>(topologies_.size()) * ideals_.size();
  }
  [[nodiscard]] bool exhaustive() const { return exhaustive_; }

  /// Nullopt when iso reduction skips the index.
  [[nodiscard]] std::optional<Space> at(std::uint64_t i) const {
    if (task_.mode == SearchMode::UserSpaces) return task_.user_spaces[i];
    const Topology& t = topologies_[i / ideals_.size()];
    const Ideal& id = ideals_[i % ideals_.size()];
    if (task_.iso_reduce && !is_canonical_labeling(t.family(), id.family(), task_.n)) return std::nullopt;
    return Space{GroundSet::standard(task_.n), t, id};
  }

 private:
  const SearchTask& task_;
  std::vector<Topology> topologies_;
  std::vector<Ideal> ideals_;
  bool exhaustive_ = false;
};

struct Record {
  bool skipped = false;
  bool violated = false;
  Verdict verdict;
  std::uint64_t assignments = 0;
};

using MinimalKey = std::pair<std::size_t, std::size_t>;

MinimalKey minimal_key(const Space& s) { return {s.topology().family().size(), s.ideal().family().size()}; }

bool witness_less(const Witness& a, const Witness& b) {
  const auto ka = minimal_key(a.space), kb = minimal_key(b.space);
  if (ka != kb) return ka < kb;
  auto t = compare_encoding(a.space.topology().family(), b.space.topology().family());
  if (t != std::strong_ordering::equal) return t < 0;
  return compare_encoding(a.space.ideal().family(), b.space.ideal().family()) < 0;
}

}  // namespace

SearchResult run_search(const SearchTask& task) {
  require_points(task.n);
  if (static_cast<int>(task.law.free_vars.size()) > task.check.max_vars)
    throw dsl::EvalError("law has " + std::to_string(task.law.free_vars.size()) + " free variables; the cap is " +
                         std::to_string(task.check.max_vars));
  if (task.mode == SearchMode::UserSpaces && task.user_spaces.empty())
    throw std::invalid_argument("user-spaces mode needs at least one space");

  const SpaceStream stream{task};
  const std::uint64_t total = stream.size();
  unsigned threads = task.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : task.threads;

  SearchResult result;
  result.stats.spaces_total = total;
  result.stats.exhaustive = stream.exhaustive();

  std::optional<MinimalKey> best;
  bool stop = false;

  const std::uint64_t batch = std::uint64_t{64} * threads;
  std::vector<Record> records;
  for (std::uint64_t begin = 0; begin < total && !stop; begin += batch) {
    const std::uint64_t end = std::min(total, begin + batch);
    records.assign(end - begin, Record{});

    std::atomic<std::uint64_t> next{begin};
    auto work = [&] {
      for (std::uint64_t i = next++; i < end; i = next++) {
        Record& r = records[i - begin];
        auto space = stream.at(i);
        if (!space) {
          r.skipped = true;
          continue;
        }
        auto scan = dsl::scan_law(*space, task.law, task.check);
        r.violated = !scan.verdict.holds();
        r.verdict = std::move(scan.verdict);
        r.assignments = scan.assignments;
      }
    };
    if (threads == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    // Sequential merge in stream order.
    for (std::uint64_t i = begin; i < end; ++i) {
      Record& r = records[i - begin];
      if (r.skipped) continue;
      if (result.stats.spaces_scanned >= task.budget.max_spaces ||
          result.stats.assignments_evaluated >= task.budget.max_assignments) {
        result.stats.budget_cut = true;
        stop = true;
        break;
      }
      ++result.stats.spaces_scanned;
      result.stats.assignments_evaluated += r.assignments;
      if (!r.violated) continue;
      auto space = stream.at(i);
      if (task.want == Want::First) {
        result.witnesses.push_back({std::move(*space), std::move(r.verdict)});
        stop = true;
        break;
      }
      const MinimalKey key = minimal_key(*space);
      if (!best || key < *best) {
        best = key;
        result.witnesses.clear();
      }
      if (key == *best) {
        result.witnesses.push_back({std::move(*space), std::move(r.verdict)});
      }
    }
  }

  std::stable_sort(result.witnesses.begin(), result.witnesses.end(), witness_less);
  if (!result.witnesses.empty())
    result.status = SearchStatus::CounterexampleFound;
  else if (result.stats.exhaustive && !result.stats.budget_cut)
    result.status = SearchStatus::LawCertified;
  else
    result.status = SearchStatus::BudgetExhausted;
  return result;
}

nlohmann::ordered_json search_report(const SearchTask& task, const SearchResult& result) {
  nlohmann::ordered_json report;
  report["status"] = status_name(result.status);
  report["law"] = task.law_text.empty() ? dsl::to_string(task.law) : task.law_text;
  report["n"] = task.n;
  report["mode"] = mode_name(task.mode);
  report["want"] = task.want == Want::First ? "first" : "all-minimal";
  report["iso_reduce"] = task.iso_reduce;
  auto& witnesses = report["witnesses"] = nlohmann::ordered_json::array();
  for (const Witness& w : result.witnesses) {
    const GroundSet& g = w.space.ground();
    nlohmann::ordered_json item;
    item["space"] = space_to_json(w.space);
    nlohmann::ordered_json bindings = nlohmann::ordered_json::object();
    for (const auto& b : w.verdict.bindings) bindings[b.name] = g.labels_of(b.value);
    item["bindings"] = bindings;
    item["lhs"] = g.labels_of(w.verdict.lhs);
    item["rhs"] = g.labels_of(w.verdict.rhs);
    witnesses.push_back(std::move(item));
  }
  auto& stats = report["stats"];
  stats["spaces_scanned"] = result.stats.spaces_scanned;
  stats["assignments_evaluated"] = result.stats.assignments_evaluated;
  stats["spaces_total"] = result.stats.spaces_total;
  stats["exhaustive"] = result.stats.exhaustive;
  stats["budget_cut"] = result.stats.budget_cut;
  return report;
}

}  // namespace idealtop
