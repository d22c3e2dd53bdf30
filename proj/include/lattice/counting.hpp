#pragma once

#include <lattice/complex.hpp>
#include <lattice/exact.hpp>
#include <lattice/geometry.hpp>
#include <lattice/kernels.hpp>

#include <cstdint>
#include <string>

namespace lattice {

// How membership is decided for each enumerated lattice point.
enum class Engine {
  automatic,  // best int64 kernel when the forms fit, otherwise exact
  reference,  // contains_point() on every point (rational barycentrics)
  exact,      // integer affine forms evaluated in arbitrary precision
  scalar,     // int64 forms, scalar row kernel
  avx2,       // int64 forms, AVX2 row kernel
};

inline constexpr std::uint64_t kDefaultEnvelope = 10'000'000;

struct CountOptions {
  std::uint64_t envelope = kDefaultEnvelope;  // max bounding-box points
  Engine engine = Engine::automatic;
  unsigned threads = 0;  // 0 = hardware concurrency
  unsigned slabs = 0;    // 0 = one slab per thread
};

enum class CountMethod { enumeration, additive };

// Per-face interior counts in the additive counter.
enum class InteriorRoute { enumeration, ehrhart };

struct CountReport {
  std::string object_id;
  Integer t;
  Integer count;
  CountMethod method = CountMethod::enumeration;
};

std::string_view name(CountMethod m);
std::string_view name(Engine e);

// Number of lattice points in the integer bounding box of t·s.
Integer bounding_box_points(const Simplex& s, const Integer& t);
Integer bounding_box_points(const SimplicialComplex& c, const Integer& t);

// |t·s ∩ Z^d|. t = 0 is accepted and counts the origin.
Integer count_simplex(const Simplex& s, const Integer& t, const CountOptions& opts = {});

// Lattice points of t·s with all barycentric coordinates strictly positive.
Integer count_relative_interior(const Simplex& s, const Integer& t,
                                const CountOptions& opts = {});

// |⋃ t·F ∩ Z^d| over the faces of c.
Integer count_complex(const SimplicialComplex& c, const Integer& t,
                      const CountOptions& opts = {});

// Σ over faces of relative-interior counts.
Integer count_complex_additive(const SimplicialComplex& c, const Integer& t,
                               InteriorRoute route = InteriorRoute::ehrhart,
                               const CountOptions& opts = {});

}  // namespace lattice
