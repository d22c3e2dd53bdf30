#pragma once

#include <lattice/exact.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lattice {

struct LatticePoint {
  std::vector<Integer> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Integer> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<long> c) {
    coords.reserve(c.size());
    for (long v : c) coords.emplace_back(v);
  }

  std::size_t dim() const { return coords.size(); }
  const Integer& operator[](std::size_t i) const { return coords[i]; }
  Integer& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.coords < b.coords;
  }
};

struct RationalPoint {
  std::vector<Rational> coords;

  RationalPoint() = default;
  // Coordinates are canonicalized (lowest terms, positive denominator).
  explicit RationalPoint(std::vector<Rational> c);
  explicit RationalPoint(const LatticePoint& p);

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
};

// Convex hull of m+1 affinely independent lattice points in Z^d.
// Construction rejects dependent or repeated vertices.
class Simplex {
 public:
  explicit Simplex(std::vector<LatticePoint> vertices);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t intrinsic_dim() const { return vertices_.size() - 1; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const LatticePoint& vertex(std::size_t i) const { return vertices_[i]; }

  // The face spanned by the given vertex positions (in this simplex's order).
  Simplex face(std::span<const std::size_t> positions) const;

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<LatticePoint> vertices_;
  std::size_t ambient_dim_ = 0;
};

// Affine coordinates of x with respect to the vertices of s, or nullopt when
// x is off the affine hull.
std::optional<std::vector<Rational>> barycentric_coordinates(
    const Simplex& s, const RationalPoint& x);

bool contains_point(const Simplex& s, const RationalPoint& x);
bool contains_point(const Simplex& s, const LatticePoint& x);

// All barycentric coordinates strictly positive.
bool in_relative_interior(const Simplex& s, const LatticePoint& x);

Simplex dilate(const Simplex& s, const Integer& t);

// True iff s1 ∩ s2 is the convex hull of their common vertices.
bool intersection_is_common_face(const Simplex& s1, const Simplex& s2);

struct FacePair {
  bool compatible = true;
  // Set when incompatible: a point of s1 ∩ s2 outside conv(common vertices).
  std::optional<RationalPoint> witness;
};

FacePair check_common_face(const Simplex& s1, const Simplex& s2);

// Exact |det| of the edge matrix; only meaningful for full-dimensional s.
Integer normalized_volume(const Simplex& s);

}  // namespace lattice
