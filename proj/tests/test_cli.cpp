#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "otoric/cli.hpp"

using namespace otoric;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "otoric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name) { return std::string(OTORIC_FIXTURE_DIR) + "/" + name + ".json"; }

std::string temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("otoric_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

} // namespace

TEST_CASE("circuits text output") {
  auto r = run({"circuits", fixture_path("c8")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "e1^6*e3*e5^36*e7^6 - e2^2*e4*e6^36*e8^6\n");

  r = run({"circuits", "--fixtures", "theta"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "e1*e3^12*e6^2 - e2^2*e4^3*e5^10\n");

  r = run({"circuits", fixture_path("triangle")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
}

TEST_CASE("analyze") {
  auto r = run({"analyze", fixture_path("c8")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "cycles: 1\n"));
  CHECK(has(r.out, "det 0 balanced"));

  r = run({"analyze", fixture_path("theta")});
  CHECK(has(r.out, "cycles: 3\n"));
  CHECK(has(r.out, "(v1 v2 v3 v4) det 6 unbalanced"));
  CHECK(has(r.out, "(v1 v2 v3 v5) det 9 unbalanced"));
  CHECK(has(r.out, "(v1 v4 v3 v5) det 3 unbalanced"));
  CHECK(has(r.out, "sinks: v3\n"));
  CHECK(has(r.out, "leaves: none\n"));
}

TEST_CASE("input errors exit 2") {
  const auto zero = temp_file("zero.json", R"({"vertices": [{"id": "a", "weight": 0}], "edges": []})");
  auto r = run({"circuits", zero});
  CHECK(r.code == kExitInputError);
  CHECK(has(r.err, "ValidationError"));

  const auto bad = temp_file("bad.json", "{\"vertices\": [");
  r = run({"analyze", bad});
  CHECK(r.code == kExitInputError);
  CHECK(has(r.err, "ParseError"));

  CHECK(run({"analyze", "/nonexistent/graph.json"}).code == kExitInputError);
  CHECK(run({"analyze", "--fixtures", "nope"}).code == kExitInputError);
  CHECK(run({"analyze", fixture_path("c8"), "--format", "yaml"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
}

TEST_CASE("verify") {
  auto r = run({"verify", fixture_path("theta")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "primitivity: pass"));
  CHECK(has(r.out, "oracle_equivalence: pass"));
  CHECK(run({"verify", fixture_path("c8")}).code == kExitOk);
  CHECK(run({"verify", "--fixtures", "dumbbell"}).code == kExitOk);

  const auto good = temp_file("good.json", R"([["1", "-2", "12", "-3", "-10", "2"]])");
  CHECK(run({"verify", fixture_path("theta"), "--expect", good}).code == kExitOk);
  const auto flipped = temp_file("flipped.json", R"({"vectors": [[-1, 2, -12, 3, 10, -2]]})");
  CHECK(run({"verify", fixture_path("theta"), "--expect", flipped}).code == kExitOk);

  const auto wrong = temp_file("wrong.json", R"([["1", "-2", "12", "-3", "-10", "3"]])");
  r = run({"verify", fixture_path("theta"), "--expect", wrong});
  CHECK(r.code == kExitVerifyFailed);
  CHECK(has(r.out, "expected_vectors: fail"));

  // c8 has an entry of 36, beyond a bound of 10
  r = run({"verify", fixture_path("c8"), "--bound", "10"});
  CHECK(r.code == kExitBudgetExceeded);
  CHECK(has(r.err, "BudgetExceeded"));
  CHECK(run({"verify", fixture_path("c8"), "--max-support", "3"}).code == kExitBudgetExceeded);
}

TEST_CASE("betti") {
  auto r = run({"betti", fixture_path("bowtie")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "mu: 1\n"));
  CHECK(has(r.out, "betti: 1 1\n"));

  r = run({"betti", fixture_path("three-unbalanced")});
  CHECK(r.code == kExitOutOfClass);
  CHECK(has(r.out, "in_class: no"));

  r = run({"betti", fixture_path("triangle"), "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["results"]["zero_ideal"] == true);
  CHECK(doc["results"]["betti"] == nlohmann::json::array({"1"}));
}

TEST_CASE("oracle-compare") {
  auto r = run({"oracle-compare", fixture_path("theta"), "--bound", "15"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "all_equal: yes"));

  // the Graver set is cut off by the bound; formula and brute force still agree
  r = run({"oracle-compare", fixture_path("theta"), "--bound", "5"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "all_equal: no"));
}

TEST_CASE("json report shape") {
  const auto r = run({"circuits", fixture_path("c8"), "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  for (const char* k : {"command", "input", "results", "timing", "warnings", "exit_code"}) CHECK(doc.contains(k));
  CHECK(doc["command"] == "circuits");
  CHECK(doc["input"]["sha256"] == "e4bc6bbc42cfccd44f86566ee9a5ab34e0e93d14be3f2d62557fc5963ffc2619");
  const auto& v = doc["results"]["circuits"][0]["vector"];
  REQUIRE(v.size() == 8);
  for (const auto& x : v) CHECK(x.is_string());
  CHECK(v[4] == "36");
  CHECK(v[5] == "-36");
}

TEST_CASE("text output is deterministic") {
  for (const char* cmd : {"analyze", "circuits", "verify", "betti"}) {
    const auto a = run({cmd, fixture_path("dumbbell"), "--jobs", "1"});
    const auto b = run({cmd, fixture_path("dumbbell"), "--jobs", "4"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("list fixtures and help") {
  auto r = run({"--list-fixtures"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "c8\n"));
  CHECK(run({"--help"}).code == kExitOk);
}
