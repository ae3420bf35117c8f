#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "idealtop/corpus.hpp"
#include "idealtop/json_io.hpp"
#include "support.hpp"

using namespace idealtop;

TEST_CASE("every embedded entry passes") {
  const auto& entries = corpus::embedded();
  REQUIRE(entries.size() == support::corpus_ids().size());
  for (const auto& entry : entries) {
    CAPTURE(entry.id);
    const auto outcome = corpus::run_entry(entry);
    for (const auto& c : outcome.checks) {
      CAPTURE(c.description);
      CAPTURE(c.expected);
      CAPTURE(c.got);
      CHECK(c.pass);
    }
    CHECK(outcome.pass());
  }
}

TEST_CASE("embedded corpus matches the shipped file") {
  CHECK(corpus::embedded_text() == support::read_text(support::source_path("corpus/corpus.json")));
}

TEST_CASE("each entry has exactly one standalone space file") {
  std::set<std::string> files;
  for (const auto& f : std::filesystem::directory_iterator(support::source_path("corpus/spaces")))
    files.insert(f.path().stem().string());
  std::set<std::string> ids;
  for (const auto& entry : corpus::embedded()) {
    CAPTURE(entry.id);
    CHECK(ids.insert(entry.id).second);
    CHECK(files.count(entry.id) == 1);
    CHECK(space_from_json(entry.space_document) == support::corpus_space(entry.id));
  }
  CHECK(files == ids);
}

TEST_CASE("a perturbed expectation fails") {
  auto doc = nlohmann::json::parse(corpus::embedded_text());
  auto& entry = doc["entries"][0];
  bool changed = false;
  for (auto& c : entry["checks"]) {
    if (c["type"] == "family") {
      c["expected"].erase(c["expected"].begin());
      changed = true;
      break;
    }
  }
  REQUIRE(changed);
  const auto entries = corpus::load(doc.dump());
  CHECK_FALSE(corpus::run_entry(entries[0]).pass());
  CHECK(corpus::run_entry(entries[1]).pass());
}

TEST_CASE("every check type detects a wrong expectation") {
  auto doc = nlohmann::json::parse(corpus::embedded_text());
  std::set<std::string> types;
  for (auto& e : doc["entries"]) {
    for (auto& c : e["checks"]) {
      const std::string type = c["type"];
      if (!types.insert(type).second) continue;
      nlohmann::json mutated = c;
      if (type == "eval") mutated["expected"] = nlohmann::json::array();
      if (type == "instance") mutated["holds"] = !c["holds"].get<bool>();
      if (type == "law") mutated["status"] = c["status"] == "Holds" ? "Violated" : "Holds";
      if (type == "family" || type == "nbhd-closures") mutated["expected"].erase(mutated["expected"].begin());
      if (type == "star-topology") mutated["refused"] = !c["refused"].get<bool>();
      nlohmann::json single = e;
      single["checks"] = nlohmann::json::array({mutated});
      nlohmann::json wrapper = {{"entries", nlohmann::json::array({single})}};
      CAPTURE(type);
      CHECK_FALSE(corpus::run_entry(corpus::load(wrapper.dump())[0]).pass());
    }
  }
  CHECK(types == std::set<std::string>{"eval", "instance", "law", "family", "nbhd-closures", "star-topology"});
}

TEST_CASE("a wrong first witness fails") {
  auto doc = nlohmann::json::parse(corpus::embedded_text());
  for (auto& e : doc["entries"]) {
    for (auto& c : e["checks"]) {
      if (c["type"] != "law" || !c.contains("first_witness")) continue;
      c["first_witness"]["A"] = nlohmann::json::array();
      nlohmann::json single = e;
      single["checks"] = nlohmann::json::array({c});
      CHECK_FALSE(corpus::run_entry(corpus::load(nlohmann::json{{"entries", {single}}}.dump())[0]).pass());
      return;
    }
  }
  FAIL("no law check with a first witness");
}

TEST_CASE("malformed corpora") {
  CHECK_THROWS_AS((void)corpus::load("{"), SpaceError);
  CHECK_THROWS_AS((void)corpus::load(R"({"entries": [{"id": "x"}]})"), SpaceError);
  const auto bad = corpus::load(R"({"entries": [{"id": "x", "space": {"points": []}, "checks": []}]})");
  CHECK_FALSE(corpus::run_entry(bad[0]).pass());
  const auto unknown = corpus::load(
      R"({"entries": [{"id": "x", "space": {"points": ["a"], "topology": [[],["a"]], "ideal": [[]]},
                       "checks": [{"type": "bogus"}]}]})");
  const auto outcome = corpus::run_entry(unknown[0]);
  CHECK_FALSE(outcome.pass());
  CHECK(outcome.checks[0].got.find("bogus") != std::string::npos);
}
