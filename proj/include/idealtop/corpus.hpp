#pragma once

// Worked examples with their expected outputs, and the runner that replays them.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "idealtop/space.hpp"

namespace idealtop::corpus {

/// One entry: a space plus the facts that must hold in it.
///
/// Check objects (JSON), by "type":
///   eval           expr, bindings, expected (labels)
///   instance       law, bindings, holds (bool)
///   law            law (registry name or DSL text), status, optional first_witness
///   family         kind (open kind or "eta:<op>"), expected (list of label lists)
///   nbhd-closures  nbhd, closure, point, expected: closures of the point's neighbourhoods
///   star-topology  op, refused (bool)
struct Entry {
  std::string id;
  std::string citation;
  nlohmann::json space_document;
  std::vector<nlohmann::json> checks;
};

/// Throws SpaceError on a malformed corpus document.
[[nodiscard]] std::vector<Entry> load(std::string_view corpus_json);
/// The corpus compiled into the library.
[[nodiscard]] std::string_view embedded_text();
[[nodiscard]] const std::vector<Entry>& embedded();

struct CheckOutcome {
  bool pass = false;
  std::string description;
  std::string expected;
  std::string got;
};

struct EntryOutcome {
  std::string id;
  std::string citation;
  std::vector<CheckOutcome> checks;
  [[nodiscard]] bool pass() const;
};

/// Runs every check of the entry. A check that throws counts as a failure.
[[nodiscard]] EntryOutcome run_entry(const Entry& entry);

}  // namespace idealtop::corpus
