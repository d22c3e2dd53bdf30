// Compiled with -mavx2; only reached after a runtime CPU check.

#include <lattice/kernels.hpp>

#include <immintrin.h>

#include <bit>
#include <vector>

namespace lattice::kernels {

std::uint64_t count_row_avx2(const Row& row) {
  const std::size_t forms = row.base.size();
  // Per-form offsets step * {0,1,2,3} for the four lanes.
  thread_local std::vector<std::int64_t> lane_buf;
  lane_buf.resize(4 * forms);
  for (std::size_t j = 0; j < forms; ++j)
    for (std::int64_t lane = 0; lane < 4; ++lane) lane_buf[4 * j + lane] = lane * row.step[j];
  auto lanes = [&](std::size_t j) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&lane_buf[4 * j]));
  };

  const __m256i zero = _mm256_setzero_si256();
  const __m256i minus_one = _mm256_set1_epi64x(-1);
  std::uint64_t hits = 0;
  std::int64_t s0 = 0;
  for (; s0 + 4 <= row.length; s0 += 4) {
    int accepted = 0;
    for (const FormGroup& g : row.groups) {
      __m256i mask = minus_one;
      std::uint32_t j = g.first;
      const std::uint32_t eq_end = g.first + g.equalities;
      const std::uint32_t end = eq_end + g.inequalities;
      for (; j < eq_end; ++j) {
        const __m256i v =
            _mm256_add_epi64(_mm256_set1_epi64x(row.base[j] + row.step[j] * s0), lanes(j));
        mask = _mm256_and_si256(mask, _mm256_cmpeq_epi64(v, zero));
        if (_mm256_testz_si256(mask, mask)) break;
      }
      if (j < eq_end) continue;
      for (; j < end; ++j) {
        const __m256i v =
            _mm256_add_epi64(_mm256_set1_epi64x(row.base[j] + row.step[j] * s0), lanes(j));
        mask = _mm256_and_si256(mask, _mm256_cmpgt_epi64(v, minus_one));
        if (_mm256_testz_si256(mask, mask)) break;
      }
      accepted |= _mm256_movemask_pd(_mm256_castsi256_pd(mask));
      if (accepted == 0xF) break;
    }
    hits += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(accepted)));
  }

  for (std::int64_t s = s0; s < row.length; ++s) {
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
