#pragma once

#include <lattice/exact.hpp>

#include <span>
#include <vector>

namespace lattice::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;
};

// maximize c·x subject to A x = b, x >= 0, over the rationals.
// Dense two-phase simplex with Bland's rule; meant for a handful of rows.
Result maximize(const RationalMatrix& a, std::span<const Rational> b,
                std::span<const Rational> c);

}  // namespace lattice::lp
