#pragma once

#include <lattice/exact.hpp>
#include <lattice/geometry.hpp>

#include <vector>

namespace lattice::detail {

// Integer-valued affine function on Z^d: coeffs · x + constant.
struct AffineForm {
  std::vector<Integer> coeffs;
  Integer constant;
};

// A simplex (or its relative interior) as {equalities == 0, inequalities >= 0}
// over integer points, together with its integer bounding box.
struct Region {
  Simplex simplex;
  bool strict = false;
  std::vector<AffineForm> equalities;
  std::vector<AffineForm> inequalities;
  std::vector<Integer> lo, hi;
};

// `s` is taken as already dilated.
Region make_region(const Simplex& s, bool strict);

}  // namespace lattice::detail
