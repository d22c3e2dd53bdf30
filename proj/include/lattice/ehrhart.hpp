#pragma once

#include <lattice/complex.hpp>
#include <lattice/counting.hpp>
#include <lattice/exact.hpp>
#include <lattice/geometry.hpp>

#include <cstdint>
#include <vector>

namespace lattice {

// L(t) = Σ coeffs[j] t^j, of degree intrinsic_dim.
struct EhrhartPolynomial {
  std::vector<Rational> coeffs;
  std::size_t intrinsic_dim = 0;
};

// Coefficients of L in the basis C(t + m - i, m), i = 0..m.
struct HStarVector {
  std::vector<Integer> h;

  bool nonnegative() const;
  bool leading_one() const { return !h.empty() && h[0] == 1; }
  Integer sum() const;
};

Rational evaluate(const EhrhartPolynomial& L, const Integer& t);

// (-1)^m L(-t): the relative-interior count of t·P by reciprocity.
Integer interior_count(const EhrhartPolynomial& L, const Integer& t);

// Interpolates through L(0) = 1 and count_simplex at t = 1..m, then checks the
// result against fresh counts at t = m+1..2m+2. Throws ConsistencyError when the
// check fails and ResourceError when counting exceeds the envelope.
EhrhartPolynomial ehrhart_polynomial(const Simplex& s, const CountOptions& opts = {});

// Counting polynomial of the union, interpolated through count_complex at
// t = 1..m+1 (at t = 0 the union collapses to a point, while the polynomial's
// constant term is χ) and checked at t = m+2..2m+2.
EhrhartPolynomial ehrhart_polynomial(const SimplicialComplex& c, const CountOptions& opts = {});

// Triangular solve in the binomial basis. Throws ConsistencyError when some
// h_i is not an integer.
HStarVector hstar_vector(const EhrhartPolynomial& L);

// Σ h_i C(t + m - i, m) == L(t) for t = 0..2m.
bool hstar_expansion_holds(const HStarVector& h, const EhrhartPolynomial& L);

enum class CountRoute { enumeration, ehrhart };

struct Lemma1Report {
  std::uint64_t prime = 0;
  unsigned k = 0;
  unsigned l = 0;              // floor(log_p m), m the intrinsic dimension
  Integer t;                   // p^k
  Integer modulus;             // p^(k-l)
  Integer count;               // |t·s ∩ Z^d|
  Integer residue;             // count mod modulus
  CountRoute route = CountRoute::enumeration;
  bool pass = false;           // residue == 1 (mod modulus)
};

// Counts p^k·s (enumeration inside the envelope, Ehrhart evaluation beyond it)
// and checks the count is 1 modulo p^(k-l). Requires k > l.
Lemma1Report verify_lemma1(const Simplex& s, std::uint64_t p, unsigned k,
                           const CountOptions& opts = {});

}  // namespace lattice
