#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lattice/document.hpp>
#include <lattice/error.hpp>
#include <lattice/pipeline.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

using namespace lattice;

namespace {

std::string read_data(const std::string& file) {
  std::ifstream in(std::string(LATTICE_TEST_DATA) + "/" + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplicialComplex load(const std::string& file) { return load_complex(parse_document(read_data(file))); }

std::vector<bool> holds(const std::vector<ProbeRow>& rows) {
  std::vector<bool> out;
  for (const auto& r : rows) out.push_back(r.holds);
  return out;
}

}  // namespace

TEST_CASE("parse_document rejects malformed input") {
  CHECK_THROWS_AS(parse_document("not json"), ParseError);
  CHECK_THROWS_AS(parse_document("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"ambient_dim":1,"vertices":[[0]]})"), ParseError);
  CHECK_THROWS_AS(
      parse_document(R"({"ambient_dim":1,"vertices":[[0]],"maximal_simplices":[[0]],"x":1})"),
      ParseError);
  CHECK_THROWS_AS(parse_document(R"({"ambient_dim":-1,"vertices":[],"maximal_simplices":[]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_document(R"({"ambient_dim":1,"vertices":[[0.5]],"maximal_simplices":[[0]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_document(R"({"ambient_dim":1,"vertices":[[9007199254740992]],"maximal_simplices":[[0]]})"),
      ParseError);
  CHECK_NOTHROW(
      parse_document(R"({"ambient_dim":1,"vertices":[[9007199254740991]],"maximal_simplices":[[0]]})"));
  CHECK_THROWS_AS(parse_document(R"({"ambient_dim":2,"vertices":[[0]],"maximal_simplices":[[0]]})"),
                  ParseError);
}

TEST_CASE("load_complex") {
  SUBCASE("segment") {
    const auto c = load_complex(
        parse_document(R"({"ambient_dim":1,"vertices":[[0],[1]],"maximal_simplices":[[0,1]]})"));
    CHECK(euler_characteristic(c) == 1);
    CHECK(f_vector(c) == std::vector<std::uint64_t>{2, 1});
  }
  SUBCASE("square") {
    const auto c = load("square.json");
    CHECK(euler_characteristic(c) == 1);
    CHECK(f_vector(c) == std::vector<std::uint64_t>{4, 5, 2});
  }
  SUBCASE("overlapping triangles name the pair") {
    try {
      load("overlapping.json");
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("{0,1,2}") != std::string::npos);
      CHECK(msg.find("{0,1,3}") != std::string::npos);
    }
  }
  SUBCASE("index out of range") {
    CHECK_THROWS_AS(load_complex(parse_document(
                        R"({"ambient_dim":1,"vertices":[[0],[1]],"maximal_simplices":[[0,2]]})")),
                    ParseError);
  }
  SUBCASE("dependent simplex") {
    CHECK_THROWS_AS(
        load_complex(parse_document(
            R"({"ambient_dim":2,"vertices":[[0,0],[1,1],[2,2]],"maximal_simplices":[[0,1,2]]})")),
        ValidationError);
  }
}

TEST_CASE("documents round-trip") {
  for (const char* f : {"segment.json", "square.json", "hollow_triangle.json", "l_hexomino.json",
                        "point.json", "unit_triangle.json"}) {
    const auto doc = parse_document(read_data(f));
    const auto again = to_document(load_complex(doc));
    CHECK(again.vertices == doc.vertices);
    CHECK(again.ambient_dim == doc.ambient_dim);
    auto sorted = doc.maximal_simplices;
    for (auto& s : sorted) std::sort(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    CHECK(again.maximal_simplices == sorted);
    CHECK(parse_document(serialize(again)) == again);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto c = generate_complex(2, 2, Rational(1, 2), seed);
    const auto doc = to_document(c);
    CHECK(to_document(load_complex(parse_document(serialize(doc)))) == doc);
  }
}

TEST_CASE("run_verify examples") {
  const auto seg = run_verify(load("segment.json"), 2);
  CHECK(seg.plan.t == 2);
  CHECK(seg.chi == 1);
  CHECK(seg.count == 3);
  CHECK(seg.verdict);
  CHECK(seg.all_pass());

  const auto sq = run_verify(load("square.json"), 2);
  CHECK(sq.plan.t == 4);
  CHECK(sq.count == 25);
  CHECK(sq.all_pass());
  CHECK(sq.lemma.size() == 2);

  const auto hollow = run_verify(load("hollow_triangle.json"), 2);
  CHECK(hollow.plan.t == 4);
  CHECK(hollow.chi == 0);
  CHECK(hollow.count == 12);
  CHECK(hollow.count_residue == 0);
  CHECK(hollow.all_pass());

  const auto hex = run_verify(load("l_hexomino.json"), 2);
  CHECK(hex.plan.t == 4);
  CHECK(hex.count == 125);
  CHECK(hex.all_pass());

  const auto pt = run_verify(load("point.json"), 6);
  CHECK(pt.count == 1);
  CHECK(pt.all_pass());

  const auto json = to_json(seg);
  CHECK(json["t"] == 2);
  CHECK(json["count"] == 3);
  CHECK(json["verdict"] == "pass");
  CHECK(json["lemma1_pass"] == true);
}

TEST_CASE("run_verify falls back to the additive counter") {
  CountOptions o;
  o.envelope = 50;
  const auto r = run_verify(load("square.json"), 6, o);  // t = 12, box 169 > 50
  CHECK(r.method == CountMethod::additive);
  CHECK(r.count == 169);
  CHECK(r.all_pass());
}

TEST_CASE("verified reports are internally consistent") {
  for (std::uint64_t n : {2, 3, 4, 5, 6, 12})
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto r = run_verify(generate_complex(2, 2, Rational(1, 2), seed), n);
      CHECK(r.verdict == (r.count_residue == r.chi_residue));
      CHECK(r.verdict);
      for (const auto& l : r.lemma) CHECK(l.report.pass);
    }
}

TEST_CASE("run_fuzz examples") {
  auto fuzz = [](std::size_t dim, std::size_t grid, std::uint64_t n, std::size_t trials,
                 std::uint64_t seed) {
    FuzzConfig cfg;
    cfg.dim = dim;
    cfg.grid = grid;
    cfg.n = n;
    cfg.trials = trials;
    cfg.seed = seed;
    return run_fuzz(cfg);
  };
  const auto a = fuzz(2, 2, 2, 50, 7);
  CHECK(a.passed == 50);
  CHECK(a.failed == 0);
  const auto b = fuzz(1, 3, 5, 20, 1);
  CHECK(b.passed == 20);
  const auto c = fuzz(2, 1, 6, 10, 3);
  CHECK(c.passed == 10);
  for (const auto& t : c.trials) {
    REQUIRE(t.report);
    CHECK(t.report->plan.t == 12);
  }
  for (std::size_t i = 0; i < a.trials.size(); ++i) CHECK(a.trials[i].index == i);
}

TEST_CASE("run_fuzz is deterministic") {
  FuzzConfig cfg;
  cfg.dim = 3;
  cfg.grid = 1;
  cfg.n = 4;
  cfg.trials = 12;
  cfg.seed = 99;
  const std::string one = to_json(run_fuzz(cfg)).dump();
  CHECK(to_json(run_fuzz(cfg)).dump() == one);
  cfg.jobs = 3;
  CHECK(to_json(run_fuzz(cfg)).dump() == one);
  cfg.seed = 100;
  CHECK(to_json(run_fuzz(cfg)).dump() != one);

  const auto seeds = trial_seeds(99, 5);
  std::mt19937_64 rng(99);
  for (auto s : seeds) CHECK(s == rng());
}

TEST_CASE("run_tmin_probe") {
  const auto seg = run_tmin_probe(load("segment.json"), 2, 4);
  CHECK(holds(seg) == std::vector<bool>{false, true, false, true});
  CHECK(seg[1].count == 3);

  const auto tri = run_tmin_probe(load("unit_triangle.json"), 2, 4);
  std::vector<Integer> residues;
  for (const auto& r : tri) residues.push_back(r.count_residue);
  CHECK(residues == std::vector<Integer>{1, 0, 0, 1});
  CHECK(holds(tri) == std::vector<bool>{true, false, false, true});

  for (std::uint64_t n : {2, 3, 7})
    for (const auto& r : run_tmin_probe(load("point.json"), n, 6)) CHECK(r.holds);
}
