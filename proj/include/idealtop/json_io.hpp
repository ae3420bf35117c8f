#pragma once

// JSON forms of spaces and subsets, shared by the CLI, search reports and corpus.

#include <json.hpp>

#include "idealtop/space.hpp"

namespace idealtop {

[[nodiscard]] Space space_from_json(const nlohmann::json& doc);
[[nodiscard]] nlohmann::ordered_json space_to_json(const Space& space);

}  // namespace idealtop
