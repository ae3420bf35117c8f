#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "idealtop/cli.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "idealtop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = idealtop::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string space(const std::string& id) { return support::source_path("corpus/spaces/" + id + ".json"); }

const std::string kSemiAdd = "sstar(union(A,B)) == union(sstar(A),sstar(B))";
const std::string kOpenAdd = "star(union(A,B)) == union(star(A),star(B))";

}  // namespace

TEST_CASE("eval") {
  auto r = run({"--space", space("ex-3.3-2"), "eval", "xibeta(A)", "--bind", "A=w1,w3"});
  CHECK(r.code == 0);
  CHECK(r.out == "{w3}\n");

  r = run({"--space", space("ex-4.7"), "eval", "--expr", "psixis(inter(A,B))", "--bind", "A=w2,w4", "--bind",
           "B={w1,w4}"});
  CHECK(r.code == 0);
  CHECK(r.out == "{}\n");

  CHECK(run({"--space", space("ex-3.3-1"), "eval", "X"}).out == "{w1,w2,w3,w4}\n");
  CHECK(run({"--space", space("ex-3.3-1"), "--raw", "eval", "X"}).out == "15\n");
  CHECK(run({"eval", "X", "--space", space("ex-3.3-1")}).out == "{w1,w2,w3,w4}\n");
  CHECK(run({"--space", space("ex-3.3-1"), "--json", "eval", "cl(A)", "--bind", "A=w1"}).out ==
        "{\"expr\":\"cl(A)\",\"value\":[\"w1\",\"w3\",\"w4\"],\"bits\":13}\n");
}

TEST_CASE("eval errors exit 2") {
  auto r = run({"--space", space("ex-3.3-1"), "eval", "union(A B)", "--bind", "A=w1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("offset 8") != std::string::npos);
  CHECK(run({"--space", space("ex-3.3-1"), "eval", "star(A)"}).code == 2);
  CHECK(run({"--space", space("ex-3.3-1"), "eval", "star(A)", "--bind", "A=w9"}).code == 2);
  CHECK(run({"--space", space("ex-3.3-1"), "eval", "star(A)", "--bind", "a=w1"}).code == 2);
  CHECK(run({"--space", "/nonexistent.json", "eval", "X"}).code == 2);
  CHECK(run({"eval", "X"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check") {
  auto r = run({"--space", space("ex-3.3-1"), "check", kSemiAdd});
  CHECK(r.code == 1);
  CHECK(r.out.find("Violated") == 0);
  CHECK(r.out.find("A = {w1}") != std::string::npos);

  r = run({"--space", space("ex-3.3-1"), "check", kOpenAdd});
  CHECK(r.code == 0);
  CHECK(r.out.find("Holds") == 0);

  CHECK(run({"--space", space("ex-3.3-1"), "check", "star(A) ==="}).code == 2);
  CHECK(run({"--space", space("ex-3.3-2"), "check", "--law", "additivity:pstar"}).code == 1);
  CHECK(run({"--space", space("ex-3.3-2"), "check", "kuratowski:star"}).code == 0);
  CHECK(run({"--space", space("ex-3.3-2"), "check", "union(union(A,B),union(C,D)) <= X"}).code == 2);
  CHECK(run({"--space", space("ex-3.3-2"), "check", "--max-vars", "4", "union(union(A,B),union(C,D)) <= X"}).code ==
        0);
}

TEST_CASE("check --json") {
  auto r = run({"--space", space("ex-3.3-2"), "--json", "check", "additivity:pstar"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "Violated");
  CHECK(j.at("bindings").at("A") == nlohmann::json::array({"w3"}));
  CHECK(j.at("bindings").at("B") == nlohmann::json::array({"w4"}));
  CHECK(j.at("relation") == "==");
  CHECK(j.contains("lhs"));
  CHECK(j.contains("rhs"));
}

TEST_CASE("check --laws file") {
  const std::string path = std::filesystem::temp_directory_path() / "idealtop_laws_test.txt";
  {
    std::ofstream f(path);
    f << "# additivity\n" << kOpenAdd << "\n\n" << kSemiAdd << "  # fails\n";
  }
  auto r = run({"--space", space("ex-3.3-1"), "check", "--laws", path});
  CHECK(r.code == 1);
  CHECK(r.out.find(kOpenAdd + ": Holds") == 0);
  CHECK(r.out.find(kSemiAdd + ": Violated") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("families") {
  auto r = run({"--space", space("ex-3.3-1"), "families", "semi"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{}\n{w1}\n{w2}\n{w1,w2}\n{w1,w3}\n{w2,w3}\n{w1,w2,w3}\n{w1,w4}\n{w2,w4}\n{w1,w2,w4}\n{w1,w3,w4}\n"
        "{w2,w3,w4}\n{w1,w2,w3,w4}\n");
  r = run({"--space", space("ex-3.3-2"), "families", "pre"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);
  CHECK(run({"--space", space("ex-3.3-1"), "families", "open"}).out == "{}\n{w1}\n{w2}\n{w1,w2}\n{w1,w2,w3,w4}\n");
  CHECK(run({"--space", space("ex-3.10"), "families", "eta:pstar"}).out ==
        run({"--space", space("ex-3.10"), "families", "pre"}).out);
  CHECK(run({"--space", space("ex-3.3-1"), "families", "nope"}).code == 2);
}

TEST_CASE("search") {
  auto r = run({"search", kOpenAdd, "--points", "3"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("status") == "LawCertified");

  r = run({"search", kSemiAdd, "-n", "4"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "CounterexampleFound");
  CHECK(idealtop::parse_space(j.at("witnesses").at(0).at("space").dump()).size() == 4);

  CHECK(run({"search", kOpenAdd, "-n", "3", "--budget-spaces", "5"}).code == 3);
  CHECK(run({"search", kOpenAdd, "-n", "3", "--budget-assignments", "5"}).code == 3);
  CHECK(run({"search", kOpenAdd, "-n", "5"}).code == 2);
  CHECK(run({"search", kOpenAdd, "-n", "5", "--mode", "subbase", "--max-subbase", "1"}).code == 3);
  CHECK(run({"search", kOpenAdd, "--mode", "wrong"}).code == 2);
  CHECK(run({"search", "star(A) =="}).code == 2);

  r = run({"--space", space("ex-3.3-1"), "--space", space("ex-3.3-2"), "search", "additivity:x", "--mode", "user"});
  CHECK(r.code == 2);
  r = run({"--space", space("ex-3.3-1"), "--space", space("ex-3.3-2"), "search",
           "pstar(union(A,B)) == union(pstar(A),pstar(B))", "--mode", "user"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out).at("mode") == "user-spaces");
}

TEST_CASE("search output is byte-identical across runs and thread counts") {
  const std::vector<std::string> base = {"search", kSemiAdd, "-n", "3", "--all-minimal"};
  const std::string one = run(base).out;
  CHECK(run(base).out == one);
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  CHECK(run(threaded).out == one);
  threaded.back() = "0";
  CHECK(run(threaded).out == one);
  auto seeded = base;
  seeded.insert(seeded.begin(), {"--seed", "42"});
  CHECK(run(seeded).out == one);
}

TEST_CASE("repro") {
  auto r = run({"repro"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"repro", "--only", "ex-4.8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS ex-4.8", 0) == 0);

  r = run({"repro", "--only", "ex-9.9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("no such entry") != std::string::npos);

  r = run({"--json", "repro", "--only", "ex-3.6"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at(0).at("id") == "ex-3.6");
  CHECK(j.at(0).at("pass") == true);
}

TEST_CASE("repro with a perturbed corpus file") {
  auto doc = nlohmann::json::parse(support::read_text(support::source_path("corpus/corpus.json")));
  for (auto& c : doc["entries"][2]["checks"])
    if (c["type"] == "eval") c["expected"] = nlohmann::json::array({"w1"});
  const std::string path = std::filesystem::temp_directory_path() / "idealtop_corpus_test.json";
  {
    std::ofstream f(path);
    f << doc.dump();
  }
  const auto r = run({"repro", "--corpus", path});
  CHECK(r.code == 1);
  const std::string id = doc["entries"][2]["id"];
  CHECK(r.out.find("FAIL " + id) != std::string::npos);
  CHECK(r.out.find("expected: {w1}") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("labels print as declared") {
  const std::string path = std::filesystem::temp_directory_path() / "idealtop_greek_test.json";
  {
    std::ofstream f(path);
    f << R"({"points": ["ϖ1","ϖ2","ϖ3","ϖ4"], "topology_subbase": [["w1"],["w2"]], "ideal": [[],["w3"]]})";
  }
  const auto r = run({"--space", path, "eval", "cl(A)", "--bind", "A=w1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{ϖ1,ϖ3,ϖ4}\n");
  std::filesystem::remove(path);
}
