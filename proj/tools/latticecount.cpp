// latticecount: lattice-point counts, Ehrhart data and dilation congruences for
// lattice simplicial complexes.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 input or validation
// error, 3 enumeration envelope exceeded.

#include <lattice/error.hpp>
#include <lattice/pipeline.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace lattice;
using nlohmann::json;

enum Exit : int { kPass = 0, kVerdictFailed = 1, kInputError = 2, kResourceError = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplicialComplex load_file(const std::string& path) {
  return load_complex(parse_document(read_input(path)));
}

Simplex pick_simplex(const SimplicialComplex& c, std::size_t index) {
  const auto maximal = c.maximal_faces();
  if (index >= maximal.size())
    throw InputError("--simplex " + std::to_string(index) + " out of range; complex has " +
                     std::to_string(maximal.size()) + " maximal simplices");
  return c.simplex(maximal[index]);
}

Rational parse_fraction(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("cannot parse fraction '" + s + "'");
  q.canonicalize();
  return q;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-point counting and dilation congruences for lattice simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string kernel = "auto";
  std::uint64_t envelope = kDefaultEnvelope;
  unsigned threads = 0;
  app.add_option("--kernel", kernel, "membership engine: auto|scalar|avx2|exact|reference")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "exact", "reference"}));
  app.add_option("--envelope", envelope, "maximum bounding-box points to enumerate");
  app.add_option("--threads", threads, "counting threads (0 = all cores)");

  std::string file;
  std::uint64_t dilation = 1, modulus = 2, tmax = 1, seed = 0;
  std::size_t dim = 1, grid = 1, trials = 1;
  std::optional<std::size_t> simplex_index;
  std::string keep = "1/2", method = "enumeration";
  unsigned jobs = 1;

  auto* count = app.add_subcommand("count", "count lattice points of the dilated complex");
  count->add_option("file", file, "complex document (JSON, '-' for stdin)")->required();
  count->add_option("--dilate", dilation, "dilation factor T")->required();
  count->add_option("--method", method, "enumeration|additive|additive-enumeration")
      ->check(CLI::IsMember({"enumeration", "additive", "additive-enumeration"}));

  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of a maximal simplex");
  ehrhart->add_option("file", file)->required();
  ehrhart->add_option("--simplex", simplex_index, "maximal simplex index (default: whole complex)");

  auto* hstar = app.add_subcommand("hstar", "h*-vector of a maximal simplex");
  hstar->add_option("file", file)->required();
  hstar->add_option("--simplex", simplex_index, "maximal simplex index (default: whole complex)");

  auto* tmin = app.add_subcommand("tmin", "dilation factor t for dimension D and modulus N");
  tmin->add_option("--dim", dim)->required();
  tmin->add_option("--modulus", modulus)->required();

  auto* verify = app.add_subcommand("verify", "check count(tT) ≡ χ(T) mod N");
  verify->add_option("file", file)->required();
  verify->add_option("--modulus", modulus)->required();

  auto* fuzz = app.add_subcommand("fuzz", "verify random Freudenthal subcomplexes");
  fuzz->add_option("--dim", dim)->required();
  fuzz->add_option("--grid", grid)->required();
  fuzz->add_option("--modulus", modulus)->required();
  fuzz->add_option("--trials", trials)->required();
  fuzz->add_option("--seed", seed)->required();
  fuzz->add_option("--keep", keep, "keep probability P/Q for each maximal simplex");
  fuzz->add_option("--jobs", jobs, "concurrent trials");

  auto* gen = app.add_subcommand("gen", "emit a random Freudenthal subcomplex document");
  gen->add_option("--dim", dim)->required();
  gen->add_option("--grid", grid)->required();
  gen->add_option("--keep", keep)->required();
  gen->add_option("--seed", seed)->required();

  auto* probe = app.add_subcommand("probe", "congruence table for t = 1..T");
  probe->add_option("file", file)->required();
  probe->add_option("--modulus", modulus)->required();
  probe->add_option("--tmax", tmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  CountOptions opts;
  opts.envelope = envelope;
  opts.threads = threads;
  if (kernel == "scalar") opts.engine = Engine::scalar;
  if (kernel == "avx2") opts.engine = Engine::avx2;
  if (kernel == "exact") opts.engine = Engine::exact;
  if (kernel == "reference") opts.engine = Engine::reference;

  try {
    if (*count) {
      const auto c = load_file(file);
      const Integer t(static_cast<unsigned long>(dilation));
      Integer n;
      if (method == "enumeration")
        n = count_complex(c, t, opts);
      else
        n = count_complex_additive(
            c, t, method == "additive" ? InteriorRoute::ehrhart : InteriorRoute::enumeration, opts);
      emit({{"t", to_json(t)}, {"count", to_json(n)}, {"method", method}});
      std::cerr << "count(" << dilation << "T) = " << n << '\n';
      return kPass;
    }
    if (*ehrhart) {
      const auto c = load_file(file);
      const EhrhartPolynomial L = simplex_index ? ehrhart_polynomial(pick_simplex(c, *simplex_index), opts)
                                                : ehrhart_polynomial(c, opts);
      emit(to_json(L));
      std::cerr << "degree " << L.intrinsic_dim << " Ehrhart polynomial\n";
      return kPass;
    }
    if (*hstar) {
      const auto c = load_file(file);
      const EhrhartPolynomial L = simplex_index ? ehrhart_polynomial(pick_simplex(c, *simplex_index), opts)
                                                : ehrhart_polynomial(c, opts);
      const HStarVector h = hstar_vector(L);
      json j = to_json(h);
      j["expansion_holds"] = hstar_expansion_holds(h, L);
      emit(j);
      const bool ok = j["expansion_holds"].get<bool>() &&
                      (!simplex_index || (h.nonnegative() && h.leading_one()));
      std::cerr << "h* " << (ok ? "ok" : "VIOLATION") << '\n';
      return ok ? kPass : kVerdictFailed;
    }
    if (*tmin) {
      const DilationPlan plan = compute_t(dim, modulus);
      emit(to_json(plan));
      std::cerr << "t = " << plan.t << '\n';
      return kPass;
    }
    if (*verify) {
      const auto c = load_file(file);
      const VerificationReport r = run_verify(c, modulus, opts, file);
      emit(to_json(r));
      std::cerr << "t=" << r.plan.t << " count=" << r.count << " chi=" << r.chi << " mod "
                << modulus << ": " << (r.all_pass() ? "pass" : "FAIL") << '\n';
      return r.all_pass() ? kPass : kVerdictFailed;
    }
    if (*fuzz) {
      FuzzConfig cfg;
      cfg.dim = dim;
      cfg.grid = grid;
      cfg.n = modulus;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.keep = parse_fraction(keep);
      cfg.jobs = jobs;
      const FuzzSummary s = run_fuzz(cfg, opts);
      emit(to_json(s));
      std::cerr << s.passed << "/" << s.trials.size() << " trials pass\n";
      return s.failed == 0 ? kPass : kVerdictFailed;
    }
    if (*gen) {
      const auto c = generate_complex(dim, grid, parse_fraction(keep), seed);
      std::cout << serialize(to_document(c)) << '\n';
      std::cerr << "generated " << c.maximal_faces().size() << " maximal simplices, chi = "
                << euler_characteristic(c) << '\n';
      return kPass;
    }
    if (*probe) {
      const auto c = load_file(file);
      const auto rows = run_tmin_probe(c, modulus, tmax, opts);
      emit(to_json(rows, modulus, euler_characteristic(c)));
      for (const auto& r : rows)
        std::cerr << "t=" << r.t << " count=" << r.count << (r.holds ? " holds" : "") << '\n';
      return kPass;
    }
  } catch (const ParseError& e) {
    emit({{"error", "parse"}, {"message", e.what()}});
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    emit({{"error", "validation"}, {"message", e.what()}});
    std::cerr << "validation error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    emit({{"error", "input"}, {"message", e.what()}});
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    emit({{"error", "resource"}, {"message", e.what()}});
    std::cerr << "resource error: " << e.what() << '\n';
    return kResourceError;
  } catch (const ConsistencyError& e) {
    emit({{"error", "consistency"}, {"message", e.what()}});
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kVerdictFailed;
  }
  return kInputError;
}
