#include <lattice/kernels.hpp>

namespace lattice::kernels {

std::uint64_t count_row_scalar(const Row& row) {
  std::uint64_t hits = 0;
  for (std::int64_t s = 0; s < row.length; ++s) {
    for (const FormGroup& g : row.groups) {
      bool ok = true;
      std::uint32_t j = g.first;
      for (const std::uint32_t end = g.first + g.equalities; ok && j < end; ++j)
        ok = row.base[j] + row.step[j] * s == 0;
      for (const std::uint32_t end = g.first + g.equalities + g.inequalities; ok && j < end; ++j)
        ok = row.base[j] + row.step[j] * s >= 0;
      if (ok) {
        ++hits;
        break;
      }
    }
  }
  return hits;
}

}  // namespace lattice::kernels
