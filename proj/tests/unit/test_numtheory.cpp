#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lattice/error.hpp>
#include <lattice/numtheory.hpp>

#include "../support/oracle.hpp"

#include <random>

using namespace lattice;

namespace {

using PP = std::vector<PrimePower>;

}  // namespace

TEST_CASE("is_prime and floor_log") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(999'999'999'989ULL));

  CHECK(floor_log(2, 1) == 0);
  CHECK(floor_log(2, 2) == 1);
  CHECK(floor_log(2, 3) == 1);
  CHECK(floor_log(2, 4) == 2);
  CHECK(floor_log(3, 2) == 0);
  CHECK(floor_log(3, 9) == 2);
  CHECK(floor_log(5, 0) == 0);
  // Exact at every power boundary.
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::uint64_t q = 1;
    for (unsigned e = 0; q <= (std::uint64_t{1} << 62) / p; ++e, q *= p) {
      CHECK(floor_log(p, q) == e);
      if (q > 1) CHECK(floor_log(p, q - 1) == e - 1);
    }
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(12).factors == PP{{2, 2}, {3, 1}});
  CHECK(factorize(2).factors == PP{{2, 1}});
  CHECK(factorize(360).factors == PP{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(999'999'999'989ULL).factors == PP{{999'999'999'989ULL, 1}});
  CHECK(factorize(kMaxModulus).factors == PP{{2, 12}, {5, 12}});
  CHECK_THROWS_AS(factorize(1), InputError);
  CHECK_THROWS_AS(factorize(0), InputError);
  CHECK_THROWS_AS(factorize(kMaxModulus + 1), InputError);
  for (std::uint64_t n = 2; n < 2000; ++n) {
    const auto f = factorize(n);
    CHECK(f.value() == n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(is_prime(f.factors[i].prime));
      if (i) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
    }
  }
}

TEST_CASE("compute_t") {
  CHECK(compute_t(1, 2).t == 2);
  CHECK(compute_t(2, 2).t == 4);
  CHECK(compute_t(2, 6).t == 12);
  CHECK(compute_t(3, 12).t == 72);  // 2^(2+1) · 3^(1+1)
  const auto plan = compute_t(2, 6);
  REQUIRE(plan.primes.size() == 2);
  CHECK(plan.primes[0].prime == 2);
  CHECK(plan.primes[0].alpha == 1);
  CHECK(plan.primes[0].l == 1);
  CHECK(plan.primes[0].beta == 2);
  CHECK(plan.primes[1].prime == 3);
  CHECK(plan.primes[1].l == 0);
  CHECK(plan.primes[1].beta == 1);
  CHECK_THROWS_AS(compute_t(2, 1), InputError);
}

TEST_CASE("dilation plans satisfy the per-prime congruences") {
  for (std::uint64_t d = 1; d <= 6; ++d)
    for (std::uint64_t n = 2; n <= 40; ++n) {
      const auto plan = compute_t(d, n);
      Integer prod = 1;
      Integer nn = 1;
      for (const auto& f : plan.primes) {
        CHECK(f.beta == f.alpha + f.l);
        CHECK(f.l == floor_log(f.prime, d));
        prod *= pow_ui(Integer(static_cast<unsigned long>(f.prime)), f.beta);
        nn *= pow_ui(Integer(static_cast<unsigned long>(f.prime)), f.alpha);
        const auto rep = verify_binomial_congruences(d, f.prime, f.beta);
        CHECK(rep.pass());
        CHECK(rep.modulus == pow_ui(Integer(static_cast<unsigned long>(f.prime)), f.alpha));
      }
      CHECK(prod == plan.t);
      CHECK(nn == n);
      CHECK(plan.t % n == 0);
    }
}

TEST_CASE("binomial") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-3, 3) == -10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  const Integer c = binomial(1004, 4);
  CHECK(c == Integer("42084793751"));
  CHECK(padic_valuation(c, 2) == kummer_carries(4, 1000, 2));
  const auto table = oracle::pascal(60);
  for (std::size_t a = 0; a <= 60; ++a)
    for (std::size_t b = 0; b <= a; ++b) CHECK(binomial(static_cast<long>(a), b) == table[a][b]);
}

TEST_CASE("padic_valuation") {
  CHECK(padic_valuation(12, 2) == 2);
  CHECK(padic_valuation(15, 2) == 0);
  CHECK(padic_valuation(10, 5) == 1);
  CHECK(padic_valuation(-8, 2) == 3);
  CHECK_THROWS_AS(padic_valuation(0, 2), InputError);
  CHECK_THROWS_AS(padic_valuation(12, 4), InputError);
  for (long m = 1; m < 3000; ++m)
    for (std::uint64_t p : {2, 3, 5, 7}) CHECK(padic_valuation(m, p) == oracle::naive_valuation(m, p));
}

TEST_CASE("kummer_carries") {
  CHECK(kummer_carries(2, 4, 2) == 0);
  CHECK(kummer_carries(2, 3, 2) == 1);
  CHECK(kummer_carries(1, 1, 2) == 1);
  CHECK(kummer_carries(1, 1, 3) == 0);
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t a = 0; a <= 120; ++a)
      for (std::uint64_t b = 0; b <= 120; ++b)
        CHECK(kummer_carries(static_cast<long>(a), static_cast<long>(b), p) ==
              oracle::legendre_binomial_valuation(a, b, p));
}

TEST_CASE("congruence_shift_check") {
  CHECK(congruence_shift_check(1, 2, 1, 1));
  CHECK(congruence_shift_check(2, 2, 2, 2));
  CHECK(congruence_shift_check(3, 3, 2, 3));
  CHECK_THROWS_AS(congruence_shift_check(3, 3, 1, 3), InputError);
  for (std::uint64_t d = 1; d <= 8; ++d)
    for (std::uint64_t m = 1; m <= d; ++m)
      for (std::uint64_t p : {2, 3, 5}) {
        const unsigned l = floor_log(p, d);
        for (unsigned k = l + 1; k <= l + 3; ++k) CHECK(congruence_shift_check(m, p, k, d));
      }
}

TEST_CASE("verify_binomial_congruences") {
  SUBCASE("d=2 p=2 k=2") {
    const auto r = verify_binomial_congruences(2, 2, 2);
    CHECK(r.t == 4);
    CHECK(r.l == 1);
    CHECK(r.modulus == 2);
    REQUIRE(r.terms.size() == 3);
    CHECK(r.terms[0].value == 15);
    CHECK(r.terms[1].value == 10);
    CHECK(r.terms[2].value == 6);
    CHECK(r.terms[0].residue == 1);
    CHECK(r.terms[1].residue == 0);
    CHECK(r.pass());
  }
  SUBCASE("d=3 p=3 k=2") {
    const auto r = verify_binomial_congruences(3, 3, 2);
    CHECK(r.t == 9);
    CHECK(r.modulus == 3);
    REQUIRE(r.terms.size() == 4);
    CHECK(r.terms[0].value == 220);
    CHECK(r.terms[1].value == 165);
    CHECK(r.terms[2].value == 120);
    CHECK(r.terms[3].value == 84);
    CHECK(r.pass());
  }
  SUBCASE("k at or below l is rejected") {
    CHECK_THROWS_AS(verify_binomial_congruences(4, 2, 2), InputError);
  }
  SUBCASE("all small cases") {
    for (std::uint64_t d = 1; d <= 6; ++d)
      for (std::uint64_t p : {2, 3, 5}) {
        const unsigned l = floor_log(p, d);
        for (unsigned k = l + 1; k <= l + 3; ++k) CHECK(verify_binomial_congruences(d, p, k).pass());
      }
  }
}

TEST_CASE("crt_combine") {
  auto crt = [](std::vector<std::pair<long, long>> in) {
    std::vector<Congruence> cs;
    for (auto [r, m] : in) cs.push_back({r, m});
    return crt_combine(cs);
  };
  auto r1 = crt({{1, 4}, {1, 3}});
  CHECK(r1.residue == 1);
  CHECK(r1.modulus == 12);
  auto r2 = crt({{2, 3}, {3, 5}});
  CHECK(r2.residue == 8);
  CHECK(r2.modulus == 15);
  auto r3 = crt({{0, 2}});
  CHECK(r3.residue == 0);
  CHECK(r3.modulus == 2);
  CHECK(*oracle::crt_scan({{2, 3}, {3, 5}}) == 8);
  CHECK_THROWS_AS(crt({{1, 4}, {1, 6}}), InputError);

  std::mt19937_64 rng(9);
  const std::vector<std::vector<long>> moduli{{4, 9, 5}, {7, 8}, {11, 3, 2}, {25, 27}, {13}};
  for (const auto& ms : moduli) {
    long prod = 1;
    for (long m : ms) prod *= m;
    for (int trial = 0; trial < 50; ++trial) {
      const long r = static_cast<long>(rng() % prod);
      std::vector<std::pair<long, long>> in;
      for (long m : ms) in.emplace_back(r % m, m);
      const auto c = crt(in);
      CHECK(c.residue == r);
      CHECK(c.modulus == prod);
      CHECK(oracle::crt_scan(in) == r);
    }
  }
}
