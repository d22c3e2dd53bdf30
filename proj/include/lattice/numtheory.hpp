#pragma once

#include <lattice/exact.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace lattice {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // primes strictly increasing

  Integer value() const;
};

struct DilationFactor {
  std::uint64_t prime = 0;
  unsigned alpha = 0;  // exponent of the prime in n
  unsigned l = 0;      // floor(log_p d)
  unsigned beta = 0;   // alpha + l
};

struct DilationPlan {
  std::uint64_t d = 0;
  std::uint64_t n = 0;
  std::vector<DilationFactor> primes;
  Integer t;  // Π p^beta
};

inline constexpr std::uint64_t kMaxModulus = 1'000'000'000'000ULL;

bool is_prime(std::uint64_t p);

// Largest l with p^l <= d (0 when d < p, including d = 0). Exact integer steps.
unsigned floor_log(std::uint64_t p, std::uint64_t d);

// Trial division; 2 <= n <= 10^12.
Factorization factorize(std::uint64_t n);

DilationPlan compute_t(std::uint64_t d, std::uint64_t n);

// a(a-1)…(a-b+1)/b!, defined for every integer a.
Integer binomial(const Integer& a, std::uint64_t b);

unsigned padic_valuation(const Integer& m, std::uint64_t p);

// Carries when adding a and b in base p.
unsigned kummer_carries(const Integer& a, const Integer& b, std::uint64_t p);

// (m + p^k)/p^α ≡ m/p^α (mod p^(k-l)) with α = v_p(m), l = floor(log_p d).
bool congruence_shift_check(std::uint64_t m, std::uint64_t p, unsigned k, std::uint64_t d);

struct BinomialCongruence {
  std::uint64_t i = 0;  // term C(t + d - i, d)
  Integer value;
  Integer residue;
  Integer expected;     // 1 for i = 0, 0 otherwise
  bool pass = false;
};

struct BinomialCongruenceReport {
  std::uint64_t d = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  unsigned l = 0;
  Integer t;
  Integer modulus;  // p^(k-l)
  std::vector<BinomialCongruence> terms;  // i = 0..d

  bool pass() const;
};

BinomialCongruenceReport verify_binomial_congruences(std::uint64_t d, std::uint64_t p,
                                                     unsigned k);

struct Congruence {
  Integer residue;
  Integer modulus;
};

// The unique r in [0, M) with r ≡ r_i (mod m_i); moduli pairwise coprime.
Congruence crt_combine(const std::vector<Congruence>& residues);

}  // namespace lattice
