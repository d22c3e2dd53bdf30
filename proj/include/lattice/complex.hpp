#pragma once

#include <lattice/exact.hpp>
#include <lattice/geometry.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lattice {

// Sorted vertex indices into SimplicialComplex::vertices().
using Face = std::vector<std::size_t>;

// A finite geometric simplicial complex with vertices in Z^d. Faces are stored
// as a sorted, duplicate-free list of index sets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Takes the face list as given (no closure). Use close_under_faces() to
  // build a complex from its maximal simplices.
  SimplicialComplex(std::size_t ambient_dim, std::vector<LatticePoint> vertices,
                    std::vector<Face> faces);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  bool empty() const { return faces_.empty(); }

  // Largest face dimension, or -1 for the empty complex.
  int dimension() const;

  std::vector<Face> maximal_faces() const;
  bool has_face(const Face& f) const;

  Simplex simplex(const Face& f) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<LatticePoint> vertices_;
  std::vector<Face> faces_;
};

struct ComplexSummary {
  std::vector<std::uint64_t> f_vector;  // f_0 .. f_dim
  Integer euler_characteristic;
};

struct ValidationReport {
  bool closed = true;
  bool distinct_vertices = true;
  bool affinely_independent = true;
  bool geometric = true;
  std::vector<std::string> problems;
  std::optional<std::pair<Face, Face>> overlapping_pair;
  std::optional<Face> unclosed_face;

  bool ok() const { return closed && distinct_vertices && affinely_independent && geometric; }
};

// All nonempty subsets of the given index sets. `ambient_dim` is taken from the
// vertices when omitted (the empty vertex list then gives dimension 0).
SimplicialComplex close_under_faces(const std::vector<Face>& maximal,
                                    std::vector<LatticePoint> vertices,
                                    std::optional<std::size_t> ambient_dim = std::nullopt);

std::vector<std::uint64_t> f_vector(const SimplicialComplex& c);
Integer euler_characteristic(const SimplicialComplex& c);
ComplexSummary summarize(const SimplicialComplex& c);

ValidationReport validate(const SimplicialComplex& c);

// Face-set union and intersection of two subcomplexes sharing one vertex list.
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);

// Freudenthal/Kuhn triangulation of [0,grid]^dim with each maximal simplex kept
// independently with probability keep (a rational in [0,1]).
SimplicialComplex generate_complex(std::size_t dim, std::size_t grid, const Rational& keep,
                                   std::uint64_t seed);

}  // namespace lattice
