#include <lattice/ehrhart.hpp>
#include <lattice/error.hpp>
#include <lattice/numtheory.hpp>

#include <string>

namespace lattice {
namespace {

EhrhartPolynomial interpolate(const std::vector<std::pair<Integer, Integer>>& samples,
                              std::size_t degree) {
  const std::size_t n = degree + 1;
  RationalMatrix vander(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational power = 1;
    for (std::size_t j = 0; j < n; ++j) {
      vander[i][j] = power;
      power *= samples[i].first;
    }
    rhs[i] = samples[i].second;
  }
  auto coeffs = solve_full_column_rank(std::move(vander), std::move(rhs));
  if (!coeffs) throw ConsistencyError("interpolation: singular Vandermonde system");
  return {std::move(*coeffs), degree};
}

void check_against(const EhrhartPolynomial& L, const Integer& t, const Integer& count,
                   const char* what) {
  if (evaluate(L, t) != count)
    throw ConsistencyError(std::string(what) + ": interpolated polynomial gives " +
                           evaluate(L, t).get_str() + " at t=" + t.get_str() +
                           " but enumeration counts " + count.get_str());
}

}  // namespace

bool HStarVector::nonnegative() const {
  for (const auto& v : h)
    if (v < 0) return false;
  return true;
}

Integer HStarVector::sum() const {
  Integer s = 0;
  for (const auto& v : h) s += v;
  return s;
}

Rational evaluate(const EhrhartPolynomial& L, const Integer& t) {
  Rational acc = 0;
  for (auto it = L.coeffs.rbegin(); it != L.coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Integer interior_count(const EhrhartPolynomial& L, const Integer& t) {
  Rational v = evaluate(L, -t);
  if (L.intrinsic_dim % 2) v = -v;
  if (!is_integral(v))
    throw ConsistencyError("reciprocity: L(-t) is not an integer at t=" + t.get_str());
  return v.get_num();
}

EhrhartPolynomial ehrhart_polynomial(const Simplex& s, const CountOptions& opts) {
  const std::size_t m = s.intrinsic_dim();
  std::vector<std::pair<Integer, Integer>> samples;
  samples.emplace_back(0, 1);
  for (std::size_t t = 1; t <= m; ++t) {
    const Integer tt(static_cast<unsigned long>(t));
    samples.emplace_back(tt, count_simplex(s, tt, opts));
  }
  EhrhartPolynomial L = interpolate(samples, m);
  for (std::size_t t = m + 1; t <= 2 * m + 2; ++t) {
    const Integer tt(static_cast<unsigned long>(t));
    check_against(L, tt, count_simplex(s, tt, opts), "ehrhart_polynomial");
  }
  return L;
}

EhrhartPolynomial ehrhart_polynomial(const SimplicialComplex& c, const CountOptions& opts) {
  if (c.empty()) return {{Rational(0)}, 0};
  const auto m = static_cast<std::size_t>(c.dimension());
  std::vector<std::pair<Integer, Integer>> samples;
  for (std::size_t t = 1; t <= m + 1; ++t) {
    const Integer tt(static_cast<unsigned long>(t));
    samples.emplace_back(tt, count_complex(c, tt, opts));
  }
  EhrhartPolynomial L = interpolate(samples, m);
  for (std::size_t t = m + 2; t <= 2 * m + 2; ++t) {
    const Integer tt(static_cast<unsigned long>(t));
    check_against(L, tt, count_complex(c, tt, opts), "complex ehrhart_polynomial");
  }
  return L;
}

HStarVector hstar_vector(const EhrhartPolynomial& L) {
  const std::size_t m = L.intrinsic_dim;
  HStarVector out;
  out.h.reserve(m + 1);
  // At t = j only the terms i <= j are nonzero, and the i = j term is C(m, m) = 1.
  for (std::size_t j = 0; j <= m; ++j) {
    const Integer t(static_cast<unsigned long>(j));
    Rational value = evaluate(L, t);
    for (std::size_t i = 0; i < j; ++i)
      value -= out.h[i] * binomial(t + Integer(static_cast<unsigned long>(m - i)), m);
    if (!is_integral(value))
      throw ConsistencyError("hstar_vector: h_" + std::to_string(j) + " = " + value.get_str() +
                             " is not an integer");
    out.h.push_back(value.get_num());
  }
  return out;
}

bool hstar_expansion_holds(const HStarVector& h, const EhrhartPolynomial& L) {
  const std::size_t m = L.intrinsic_dim;
  if (h.h.size() != m + 1) return false;
  for (std::size_t j = 0; j <= 2 * m; ++j) {
    const Integer t(static_cast<unsigned long>(j));
    Rational sum = 0;
    for (std::size_t i = 0; i <= m; ++i)
      sum += h.h[i] * binomial(t + Integer(static_cast<unsigned long>(m - i)), m);
    if (sum != evaluate(L, t)) return false;
  }
  return true;
}

Lemma1Report verify_lemma1(const Simplex& s, std::uint64_t p, unsigned k,
                           const CountOptions& opts) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
  Lemma1Report rep;
  rep.prime = p;
  rep.k = k;
  rep.l = floor_log(p, s.intrinsic_dim());
  if (k <= rep.l)
    throw InputError("verify_lemma1: need k > floor(log_p m) = " + std::to_string(rep.l));
  const Integer prime(static_cast<unsigned long>(p));
  rep.t = pow_ui(prime, k);
  rep.modulus = pow_ui(prime, k - rep.l);
  if (bounding_box_points(s, rep.t) <= Integer(static_cast<unsigned long>(opts.envelope))) {
    rep.count = count_simplex(s, rep.t, opts);
    rep.route = CountRoute::enumeration;
  } else {
    const Rational v = evaluate(ehrhart_polynomial(s, opts), rep.t);
    rep.count = v.get_num();
    rep.route = CountRoute::ehrhart;
  }
  rep.residue = mod_floor(rep.count, rep.modulus);
  rep.pass = rep.residue == mod_floor(Integer(1), rep.modulus);
  return rep;
}

}  // namespace lattice
