#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "../support/process.hpp"

using nlohmann::json;

namespace {

const std::string kBin = LATTICECOUNT_BIN;
const std::string kData = LATTICE_TEST_DATA;

testproc::Result cli(const std::string& args) { return testproc::run(testproc::quote(kBin) + " " + args); }

std::string data(const std::string& f) { return testproc::quote(kData + "/" + f); }

}  // namespace

TEST_CASE("verify") {
  auto r = cli("verify " + data("segment.json") + " --modulus 2");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["t"] == 2);
  CHECK(j["count"] == 3);
  CHECK(j["euler_characteristic"] == 1);
  CHECK(j["verdict"] == "pass");
  CHECK(j["plan"]["t"] == 2);

  r = cli("verify " + data("l_hexomino.json") + " --modulus 2");
  CHECK(r.exit_code == 0);
  j = json::parse(r.out);
  CHECK(j["t"] == 4);
  CHECK(j["count"] == 125);
  CHECK(j["lemma1"].size() == 6);

  r = cli("verify " + data("hollow_triangle.json") + " --modulus 2 --kernel scalar");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["count"] == 12);
}

TEST_CASE("count and its methods") {
  for (const char* method : {"enumeration", "additive", "additive-enumeration"}) {
    const auto r = cli("count " + data("square.json") + " --dilate 4 --method " + method);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["count"] == 25);
  }
  const auto r = cli("count - --dilate 3 < " + data("unit_triangle.json"));
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["count"] == 10);
}

TEST_CASE("ehrhart and hstar") {
  auto r = cli("ehrhart " + data("unit_triangle.json") + " --simplex 0");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["coefficients"] == json::array({"1", "3/2", "1/2"}));

  r = cli("hstar " + data("square.json"));
  CHECK(r.exit_code == 0);
  j = json::parse(r.out);
  CHECK(j["h"] == json::array({1, 1, 0}));
  CHECK(j["expansion_holds"] == true);

  CHECK(cli("hstar " + data("square.json") + " --simplex 7").exit_code == 2);
}

TEST_CASE("tmin, gen and probe") {
  auto r = cli("tmin --dim 2 --modulus 6");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["t"] == 12);

  r = cli("gen --dim 2 --grid 2 --keep 1/1 --seed 0");
  CHECK(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["maximal_simplices"].size() == 8);
  CHECK(doc.size() == 3);

  r = cli("probe " + data("segment.json") + " --modulus 2 --tmax 4");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  std::vector<bool> holds;
  for (const auto& row : j["rows"]) holds.push_back(row["holds"].get<bool>());
  CHECK(holds == std::vector<bool>{false, true, false, true});
}

TEST_CASE("fuzz is byte-identical across runs") {
  const std::string args = "fuzz --dim 2 --grid 2 --modulus 6 --trials 15 --seed 42";
  const auto a = cli(args);
  const auto b = cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(cli(args + " --jobs 4").out == a.out);
  CHECK(cli(args + " --kernel scalar").out == a.out);
  CHECK(json::parse(a.out)["passed"] == 15);
}

TEST_CASE("exit codes for bad input and resources") {
  auto r = cli("verify " + data("overlapping.json") + " --modulus 2");
  CHECK(r.exit_code == 2);
  auto j = json::parse(r.out);
  CHECK(j["error"] == "validation");
  CHECK(j["message"].get<std::string>().find("{0,1,3}") != std::string::npos);

  r = cli("verify /nonexistent/file.json --modulus 2");
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out)["error"] == "parse");

  r = testproc::run("printf '{}' | " + testproc::quote(kBin) + " verify - --modulus 2");
  CHECK(r.exit_code == 2);

  CHECK(cli("verify " + data("segment.json") + " --modulus 1").exit_code == 2);
  CHECK(cli("frobnicate").exit_code == 2);
  CHECK(cli("gen --dim 2 --grid 1 --keep 3/2 --seed 0").exit_code == 2);

  r = cli("count " + data("square.json") + " --dilate 100 --envelope 1000");
  CHECK(r.exit_code == 3);
  CHECK(json::parse(r.out)["error"] == "resource");
  // The additive route needs no enumeration at the target dilation.
  r = cli("count " + data("square.json") + " --dilate 100 --envelope 1000 --method additive");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["count"] == 101 * 101);
}
