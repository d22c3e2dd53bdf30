#include <lattice/error.hpp>
#include <lattice/numtheory.hpp>

#include <string>

namespace lattice {
namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
}

}  // namespace

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& f : factors) v *= pow_ui(Integer(static_cast<unsigned long>(f.prime)), f.exponent);
  return v;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

unsigned floor_log(std::uint64_t p, std::uint64_t d) {
  if (p < 2) throw InputError("floor_log: base must be at least 2");
  unsigned l = 0;
  // p^(l+1) <= d, written to avoid overflow.
  for (std::uint64_t power = 1; power <= d / p; power *= p) ++l;
  return l;
}

Factorization factorize(std::uint64_t n) {
  if (n < 2) throw InputError("factorize: n must be at least 2");
  if (n > kMaxModulus) throw InputError("factorize: n exceeds 10^12");
  Factorization out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    PrimePower pp{q, 0};
    while (n % q == 0) {
      n /= q;
      ++pp.exponent;
    }
    out.factors.push_back(pp);
  }
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

DilationPlan compute_t(std::uint64_t d, std::uint64_t n) {
  if (d < 1) throw InputError("compute_t: dimension must be at least 1");
  DilationPlan plan;
  plan.d = d;
  plan.n = n;
  plan.t = 1;
  for (const auto& [p, alpha] : factorize(n).factors) {
    DilationFactor f{p, alpha, floor_log(p, d), 0};
    f.beta = f.alpha + f.l;
    plan.t *= pow_ui(Integer(static_cast<unsigned long>(p)), f.beta);
    plan.primes.push_back(f);
  }
  return plan;
}

Integer binomial(const Integer& a, std::uint64_t b) {
  Integer num = 1;
  Integer den = 1;
  for (std::uint64_t j = 0; j < b; ++j) {
    num *= a - Integer(static_cast<unsigned long>(j));
    den *= Integer(static_cast<unsigned long>(j + 1));
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

unsigned padic_valuation(const Integer& m, std::uint64_t p) {
  if (m == 0) throw InputError("padic_valuation: valuation of 0 is infinite");
  require_prime(p);
  const Integer prime(static_cast<unsigned long>(p));
  Integer v = abs(m);
  unsigned alpha = 0;
  while (mpz_divisible_p(v.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prime.get_mpz_t());
    ++alpha;
  }
  return alpha;
}

unsigned kummer_carries(const Integer& a, const Integer& b, std::uint64_t p) {
  if (a < 0 || b < 0) throw InputError("kummer_carries: arguments must be nonnegative");
  require_prime(p);
  const Integer prime(static_cast<unsigned long>(p));
  Integer x = a, y = b;
  unsigned carries = 0;
  Integer carry = 0;
  while (x > 0 || y > 0 || carry > 0) {
    Integer dx, dy;
    mpz_fdiv_qr(x.get_mpz_t(), dx.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
    mpz_fdiv_qr(y.get_mpz_t(), dy.get_mpz_t(), y.get_mpz_t(), prime.get_mpz_t());
    const Integer digit_sum = dx + dy + carry;
    if (digit_sum >= prime) {
      carry = 1;
      ++carries;
    } else {
      carry = 0;
    }
  }
  return carries;
}

bool congruence_shift_check(std::uint64_t m, std::uint64_t p, unsigned k, std::uint64_t d) {
  require_prime(p);
  if (d < 1 || m < 1 || m > d) throw InputError("congruence_shift_check: need 1 <= m <= d");
  const unsigned l = floor_log(p, d);
  if (k <= l) throw InputError("congruence_shift_check: need k > floor(log_p d)");
  const Integer prime(static_cast<unsigned long>(p));
  const Integer mm(static_cast<unsigned long>(m));
  const Integer pa = pow_ui(prime, padic_valuation(mm, p));
  const Integer modulus = pow_ui(prime, k - l);
  const Integer shifted = (mm + pow_ui(prime, k)) / pa;
  const Integer plain = mm / pa;
  return mod_floor(shifted - plain, modulus) == 0;
}

bool BinomialCongruenceReport::pass() const {
  for (const auto& t : terms)
    if (!t.pass) return false;
  return !terms.empty();
}

BinomialCongruenceReport verify_binomial_congruences(std::uint64_t d, std::uint64_t p,
                                                     unsigned k) {
  require_prime(p);
  if (d < 1) throw InputError("verify_binomial_congruences: d must be at least 1");
  BinomialCongruenceReport rep;
  rep.d = d;
  rep.p = p;
  rep.k = k;
  rep.l = floor_log(p, d);
  if (k <= rep.l) throw InputError("verify_binomial_congruences: need k > floor(log_p d)");
  const Integer prime(static_cast<unsigned long>(p));
  rep.t = pow_ui(prime, k);
  rep.modulus = pow_ui(prime, k - rep.l);
  for (std::uint64_t i = 0; i <= d; ++i) {
    BinomialCongruence term;
    term.i = i;
    term.value = binomial(rep.t + Integer(static_cast<unsigned long>(d - i)), d);
    term.residue = mod_floor(term.value, rep.modulus);
    term.expected = mod_floor(Integer(i == 0 ? 1 : 0), rep.modulus);
    term.pass = term.residue == term.expected;
    rep.terms.push_back(std::move(term));
  }
  return rep;
}

Congruence crt_combine(const std::vector<Congruence>& residues) {
  Congruence acc{0, 1};
  for (const auto& c : residues) {
    if (c.modulus < 1) throw InputError("crt_combine: moduli must be positive");
    if (c.residue < 0 || c.residue >= c.modulus)
      throw InputError("crt_combine: residue outside [0, modulus)");
    Integer g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), acc.modulus.get_mpz_t(),
               c.modulus.get_mpz_t());
    if (g != 1) throw InputError("crt_combine: moduli are not pairwise coprime");
    // acc.residue + acc.modulus * s * (c.residue - acc.residue) solves both.
    const Integer next_mod = acc.modulus * c.modulus;
    acc.residue = mod_floor(acc.residue + acc.modulus * s * (c.residue - acc.residue), next_mod);
    acc.modulus = next_mod;
  }
  return acc;
}

}  // namespace lattice
