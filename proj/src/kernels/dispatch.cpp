#include <lattice/kernels.hpp>

#include <cstdlib>

namespace lattice::kernels {

bool compiled(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(LATTICE_HAVE_AVX2_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

bool supported(Isa isa) {
  if (!compiled(isa)) return false;
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(LATTICE_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2})
    if (supported(isa)) out.push_back(isa);
  return out;
}

Isa preferred() {
  static const Isa choice = [] {
    if (const char* env = std::getenv("LATTICE_KERNEL")) {
      if (auto isa = parse_isa(env); isa && supported(*isa)) return *isa;
    }
    return supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return choice;
}

RowCounter counter(Isa isa) {
  switch (isa) {
    case Isa::avx2:
#if defined(LATTICE_HAVE_AVX2_KERNEL)
      if (supported(Isa::avx2)) return &count_row_avx2;
#endif
      break;
    case Isa::scalar:
      break;
  }
  return &count_row_scalar;
}

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view s) {
  if (s == "scalar") return Isa::scalar;
  if (s == "avx2") return Isa::avx2;
  return std::nullopt;
}

}  // namespace lattice::kernels
