#pragma once

// Row-membership kernels for the lattice-point counter.
//
// A row is a run of `length` consecutive lattice points along one axis. Each
// candidate region (a simplex or its relative interior) is a group of integer
// affine forms; along the row, form j takes the value base[j] + step[j] * s at
// position s. A point is accepted by a group when its equality forms vanish and
// its inequality forms are nonnegative, and counted when any group accepts it.
//
// Callers guarantee that every base[j] + step[j] * s for s in [0, length)
// fits in int64.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lattice::kernels {

struct FormGroup {
  std::uint32_t first = 0;         // index of the group's first form
  std::uint32_t equalities = 0;    // forms [first, first + equalities) must be 0
  std::uint32_t inequalities = 0;  // the following forms must be >= 0
};

struct Row {
  std::span<const std::int64_t> base;
  std::span<const std::int64_t> step;
  std::span<const FormGroup> groups;
  std::int64_t length = 0;
};

enum class Isa { scalar, avx2 };

using RowCounter = std::uint64_t (*)(const Row&);

std::uint64_t count_row_scalar(const Row& row);
#if defined(LATTICE_HAVE_AVX2_KERNEL)
std::uint64_t count_row_avx2(const Row& row);
#endif

bool compiled(Isa isa);
bool supported(Isa isa);  // compiled and usable on this CPU
std::vector<Isa> available();

// Best supported ISA, unless LATTICE_KERNEL=scalar|avx2 names another
// supported one.
Isa preferred();

RowCounter counter(Isa isa);
std::string_view name(Isa isa);
std::optional<Isa> parse_isa(std::string_view s);

}  // namespace lattice::kernels
