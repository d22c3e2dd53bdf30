#include <lattice/error.hpp>
#include <lattice/pipeline.hpp>

#include <atomic>
#include <random>
#include <thread>

namespace lattice {

using nlohmann::json;

bool VerificationReport::lemma_pass() const {
  for (const auto& l : lemma)
    if (!l.report.pass) return false;
  return true;
}

VerificationReport run_verify(const SimplicialComplex& c, std::uint64_t n,
                              const CountOptions& opts, std::string input_id) {
  VerificationReport rep;
  rep.input_id = std::move(input_id);
  rep.n = n;
  rep.plan = compute_t(std::max<std::size_t>(1, c.ambient_dim()), n);
  rep.chi = euler_characteristic(c);
  try {
    rep.count = count_complex(c, rep.plan.t, opts);
    rep.method = CountMethod::enumeration;
  } catch (const ResourceError&) {
    rep.count = count_complex_additive(c, rep.plan.t, InteriorRoute::ehrhart, opts);
    rep.method = CountMethod::additive;
  }
  const Integer modulus(static_cast<unsigned long>(n));
  rep.count_residue = mod_floor(rep.count, modulus);
  rep.chi_residue = mod_floor(rep.chi, modulus);
  rep.verdict = rep.count_residue == rep.chi_residue;

  for (const auto& f : c.maximal_faces()) {
    const Simplex s = c.simplex(f);
    for (const auto& pf : rep.plan.primes)
      rep.lemma.push_back({f, verify_lemma1(s, pf.prime, pf.beta, opts)});
  }
  return rep;
}

std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out(trials);
  for (auto& s : out) s = rng();
  return out;
}

FuzzSummary run_fuzz(const FuzzConfig& cfg, const CountOptions& opts) {
  FuzzSummary sum;
  sum.config = cfg;
  const auto seeds = trial_seeds(cfg.seed, cfg.trials);
  sum.trials.resize(cfg.trials);

  CountOptions inner = opts;
  if (cfg.jobs > 1) inner.threads = 1;

  auto run = [&](std::size_t i) {
    FuzzTrial& tr = sum.trials[i];
    tr.index = i;
    tr.seed = seeds[i];
    const SimplicialComplex c = generate_complex(cfg.dim, cfg.grid, cfg.keep, tr.seed);
    try {
      const ValidationReport v = validate(c);
      tr.valid = v.ok();
      if (!tr.valid) {
        tr.error = v.problems.empty() ? "invalid complex" : v.problems.front();
      } else {
        tr.report = run_verify(c, cfg.n, inner, "trial-" + std::to_string(i));
      }
    } catch (const std::exception& e) {
      tr.error = e.what();
    }
    if (!tr.pass()) tr.replay = to_document(c);
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.trials)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cfg.trials;) run(i);
      });
  }

  for (const auto& tr : sum.trials) (tr.pass() ? sum.passed : sum.failed)++;
  return sum;
}

std::vector<ProbeRow> run_tmin_probe(const SimplicialComplex& c, std::uint64_t n,
                                     std::uint64_t t_max, const CountOptions& opts) {
  if (n < 2) throw InputError("probe: modulus must be at least 2");
  const Integer modulus(static_cast<unsigned long>(n));
  const Integer chi_res = mod_floor(euler_characteristic(c), modulus);
  std::vector<ProbeRow> rows;
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    ProbeRow r;
    r.t = Integer(static_cast<unsigned long>(t));
    r.count = count_complex(c, r.t, opts);
    r.count_residue = mod_floor(r.count, modulus);
    r.chi_residue = chi_res;
    r.holds = r.count_residue == chi_res;
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const Integer& v) {
  if (auto x = to_int64(v)) return *x;
  return v.get_str();
}

json to_json(const DilationPlan& plan) {
  json primes = json::array();
  for (const auto& p : plan.primes)
    primes.push_back({{"p", p.prime}, {"alpha", p.alpha}, {"l", p.l}, {"beta", p.beta}});
  return {{"d", plan.d}, {"n", plan.n}, {"primes", primes}, {"t", to_json(plan.t)}};
}

json to_json(const Lemma1Report& r) {
  return {{"p", r.prime},
          {"k", r.k},
          {"l", r.l},
          {"t", to_json(r.t)},
          {"modulus", to_json(r.modulus)},
          {"count", to_json(r.count)},
          {"residue", to_json(r.residue)},
          {"route", r.route == CountRoute::enumeration ? "enumeration" : "ehrhart"},
          {"pass", r.pass}};
}

json to_json(const VerificationReport& r) {
  json lemma = json::array();
  for (const auto& l : r.lemma) {
    json j = to_json(l.report);
    j["simplex"] = l.face;
    lemma.push_back(std::move(j));
  }
  return {{"input", r.input_id},
          {"n", r.n},
          {"plan", to_json(r.plan)},
          {"t", to_json(r.plan.t)},
          {"euler_characteristic", to_json(r.chi)},
          {"count", to_json(r.count)},
          {"method", std::string(name(r.method))},
          {"count_mod_n", to_json(r.count_residue)},
          {"chi_mod_n", to_json(r.chi_residue)},
          {"verdict", r.verdict ? "pass" : "fail"},
          {"lemma1", lemma},
          {"lemma1_pass", r.lemma_pass()}};
}

json to_json(const FuzzSummary& s) {
  json trials = json::array();
  for (const auto& tr : s.trials) {
    json j = {{"index", tr.index}, {"seed", tr.seed}, {"valid", tr.valid},
              {"verdict", tr.pass() ? "pass" : "fail"}};
    if (tr.report) {
      j["t"] = to_json(tr.report->plan.t);
      j["euler_characteristic"] = to_json(tr.report->chi);
      j["count"] = to_json(tr.report->count);
      j["method"] = std::string(name(tr.report->method));
      j["lemma1_pass"] = tr.report->lemma_pass();
    }
    if (!tr.error.empty()) j["error"] = tr.error;
    if (tr.replay) j["document"] = json::parse(serialize(*tr.replay));
    trials.push_back(std::move(j));
  }
  const auto& c = s.config;
  return {{"config",
           {{"dim", c.dim}, {"grid", c.grid}, {"n", c.n}, {"trials", c.trials},
            {"seed", c.seed}, {"keep", c.keep.get_str()}}},
          {"passed", s.passed},
          {"failed", s.failed},
          {"trials", trials}};
}

json to_json(const std::vector<ProbeRow>& rows, std::uint64_t n, const Integer& chi) {
  json table = json::array();
  for (const auto& r : rows)
    table.push_back({{"t", to_json(r.t)},
                     {"count", to_json(r.count)},
                     {"count_mod_n", to_json(r.count_residue)},
                     {"chi_mod_n", to_json(r.chi_residue)},
                     {"holds", r.holds}});
  return {{"n", n}, {"euler_characteristic", to_json(chi)}, {"rows", table}};
}

json to_json(const EhrhartPolynomial& L) {
  json coeffs = json::array();
  for (const auto& c : L.coeffs) coeffs.push_back(c.get_str());
  return {{"intrinsic_dim", L.intrinsic_dim}, {"coefficients", coeffs}};
}

json to_json(const HStarVector& h) {
  json v = json::array();
  for (const auto& x : h.h) v.push_back(to_json(x));
  return {{"h", v}, {"nonnegative", h.nonnegative()}, {"leading_one", h.leading_one()},
          {"sum", to_json(h.sum())}};
}

json to_json(const BinomialCongruenceReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"i", t.i}, {"value", to_json(t.value)}, {"residue", to_json(t.residue)},
                     {"expected", to_json(t.expected)}, {"pass", t.pass}});
  return {{"d", r.d}, {"p", r.p}, {"k", r.k}, {"l", r.l}, {"t", to_json(r.t)},
          {"modulus", to_json(r.modulus)}, {"terms", terms}, {"pass", r.pass()}};
}

}  // namespace lattice
