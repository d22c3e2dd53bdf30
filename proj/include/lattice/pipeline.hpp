#pragma once

#include <lattice/complex.hpp>
#include <lattice/counting.hpp>
#include <lattice/document.hpp>
#include <lattice/ehrhart.hpp>
#include <lattice/numtheory.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lattice {

struct SimplexLemmaCheck {
  Face face;
  Lemma1Report report;
};

struct VerificationReport {
  std::string input_id;
  std::uint64_t n = 0;
  DilationPlan plan;
  Integer chi;
  Integer count;
  CountMethod method = CountMethod::enumeration;
  Integer count_residue;  // count mod n
  Integer chi_residue;    // χ mod n
  bool verdict = false;   // count ≡ χ (mod n)
  std::vector<SimplexLemmaCheck> lemma;

  bool lemma_pass() const;
  bool all_pass() const { return verdict && lemma_pass(); }
};

// Counts t·T for t = compute_t(d, n), falling back to the additive counter when
// the enumeration box exceeds the envelope, and checks the simplex congruence on every maximal
// simplex for each prime of the plan.
VerificationReport run_verify(const SimplicialComplex& c, std::uint64_t n,
                              const CountOptions& opts = {}, std::string input_id = {});

struct FuzzConfig {
  std::size_t dim = 2;
  std::size_t grid = 2;
  std::uint64_t n = 2;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  Rational keep{1, 2};
  unsigned jobs = 1;  // concurrent trials
};

struct FuzzTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool valid = true;
  std::optional<VerificationReport> report;
  std::optional<ComplexDocument> replay;  // set on failure
  std::string error;

  bool pass() const { return valid && report && report->all_pass(); }
};

struct FuzzSummary {
  FuzzConfig config;
  std::vector<FuzzTrial> trials;  // by index
  std::size_t passed = 0;
  std::size_t failed = 0;
};

// Sub-seeds for trial i are the i-th output of mt19937_64(seed).
std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, std::size_t trials);

FuzzSummary run_fuzz(const FuzzConfig& cfg, const CountOptions& opts = {});

struct ProbeRow {
  Integer t;
  Integer count;
  Integer count_residue;
  Integer chi_residue;
  bool holds = false;
};

std::vector<ProbeRow> run_tmin_probe(const SimplicialComplex& c, std::uint64_t n,
                                     std::uint64_t t_max, const CountOptions& opts = {});

// JSON renderings. Integers that fit in int64 are numbers, others strings.
nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const DilationPlan& plan);
nlohmann::json to_json(const Lemma1Report& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const FuzzSummary& s);
nlohmann::json to_json(const std::vector<ProbeRow>& rows, std::uint64_t n, const Integer& chi);
nlohmann::json to_json(const EhrhartPolynomial& L);
nlohmann::json to_json(const HStarVector& h);
nlohmann::json to_json(const BinomialCongruenceReport& r);

}  // namespace lattice
