#include <lattice/error.hpp>
#include <lattice/geometry.hpp>
#include <lattice/lp.hpp>

#include <algorithm>
#include <string>

namespace lattice {

RationalPoint::RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {
  for (auto& q : coords) q.canonicalize();
}

RationalPoint::RationalPoint(const LatticePoint& p) {
  coords.reserve(p.dim());
  for (const auto& c : p.coords) coords.emplace_back(c);
}

Simplex::Simplex(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("simplex needs at least one vertex");
  ambient_dim_ = vertices_[0].dim();
  for (const auto& v : vertices_)
    if (v.dim() != ambient_dim_)
      throw InputError("simplex vertices have differing dimensions");
  const std::size_t m = vertices_.size() - 1;
  if (m > ambient_dim_)
    throw ValidationError("simplex has more than d+1 vertices in Z^" +
                          std::to_string(ambient_dim_));
  RationalMatrix edges(m, std::vector<Rational>(ambient_dim_));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < ambient_dim_; ++r)
      edges[i][r] = vertices_[i + 1][r] - vertices_[0][r];
  if (pivot_columns(std::move(edges)).size() != m)
    throw ValidationError("simplex vertices are affinely dependent");
}

Simplex Simplex::face(std::span<const std::size_t> positions) const {
  std::vector<LatticePoint> vs;
  vs.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= vertices_.size()) throw InputError("face position out of range");
    vs.push_back(vertices_[p]);
  }
  return Simplex(std::move(vs));
}

std::optional<std::vector<Rational>> barycentric_coordinates(
    const Simplex& s, const RationalPoint& x) {
  const std::size_t d = s.ambient_dim();
  if (x.dim() != d) throw InputError("point dimension differs from simplex");
  const std::size_t k = s.vertex_count();
  RationalMatrix a(d + 1, std::vector<Rational>(k));
  std::vector<Rational> b(d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < k; ++i) a[r][i] = s.vertex(i)[r];
    b[r] = x[r];
  }
  for (std::size_t i = 0; i < k; ++i) a[d][i] = 1;
  b[d] = 1;
  return solve_full_column_rank(std::move(a), std::move(b));
}

bool contains_point(const Simplex& s, const RationalPoint& x) {
  const auto lambda = barycentric_coordinates(s, x);
  return lambda && std::all_of(lambda->begin(), lambda->end(),
                               [](const Rational& v) { return v >= 0; });
}

bool contains_point(const Simplex& s, const LatticePoint& x) {
  return contains_point(s, RationalPoint(x));
}

bool in_relative_interior(const Simplex& s, const LatticePoint& x) {
  const auto lambda = barycentric_coordinates(s, RationalPoint(x));
  return lambda && std::all_of(lambda->begin(), lambda->end(),
                               [](const Rational& v) { return v > 0; });
}

Simplex dilate(const Simplex& s, const Integer& t) {
  if (t < 1) throw InputError("dilation factor must be at least 1");
  std::vector<LatticePoint> vs = s.vertices();
  for (auto& v : vs)
    for (auto& c : v.coords) c *= t;
  return Simplex(std::move(vs));
}

FacePair check_common_face(const Simplex& s1, const Simplex& s2) {
  const std::size_t d = s1.ambient_dim();
  if (s2.ambient_dim() != d) throw InputError("simplices live in different dimensions");
  const std::size_t k1 = s1.vertex_count();
  const std::size_t k2 = s2.vertex_count();

  auto shared = [](const Simplex& s, const Simplex& other, std::size_t i) {
    const auto& ov = other.vertices();
    return std::find(ov.begin(), ov.end(), s.vertex(i)) != ov.end();
  };

  // Variables: barycentric weights of s1 then of s2. The objective sums the
  // weights of non-shared vertices; its maximum over s1 ∩ s2 is zero iff the
  // intersection lies in conv(shared vertices).
  const std::size_t n = k1 + k2;
  RationalMatrix a(d + 2, std::vector<Rational>(n));
  std::vector<Rational> b(d + 2);
  std::vector<Rational> c(n);
  bool any_outside = false;
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t r = 0; r < d; ++r) a[r][i] = s1.vertex(i)[r];
    a[d][i] = 1;
    if (!shared(s1, s2, i)) {
      c[i] = 1;
      any_outside = true;
    }
  }
  for (std::size_t j = 0; j < k2; ++j) {
    for (std::size_t r = 0; r < d; ++r) a[r][k1 + j] = -s2.vertex(j)[r];
    a[d + 1][k1 + j] = 1;
    if (!shared(s2, s1, j)) {
      c[k1 + j] = 1;
      any_outside = true;
    }
  }
  b[d] = 1;
  b[d + 1] = 1;
  if (!any_outside) return {};

  const lp::Result res = lp::maximize(a, b, c);
  if (res.status == lp::Status::infeasible) return {};
  if (res.status == lp::Status::unbounded)
    throw ConsistencyError("common-face LP unbounded over a compact set");
  if (res.value == 0) return {};

  FacePair out;
  out.compatible = false;
  std::vector<Rational> w(d);
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t r = 0; r < d; ++r) w[r] += res.x[i] * s1.vertex(i)[r];
  out.witness = RationalPoint(std::move(w));
  return out;
}

bool intersection_is_common_face(const Simplex& s1, const Simplex& s2) {
  return check_common_face(s1, s2).compatible;
}

Integer normalized_volume(const Simplex& s) {
  const std::size_t d = s.ambient_dim();
  if (s.intrinsic_dim() != d)
    throw InputError("normalized volume needs a full-dimensional simplex");
  RationalMatrix e(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r) e[i][r] = s.vertex(i + 1)[r] - s.vertex(0)[r];
  Rational det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && e[p][c] == 0) ++p;
    if (p == d) return 0;
    if (p != c) {
      std::swap(e[p], e[c]);
      det = -det;
    }
    det *= e[c][c];
    for (std::size_t i = c + 1; i < d; ++i) {
      if (e[i][c] == 0) continue;
      const Rational f = e[i][c] / e[c][c];
      for (std::size_t j = c; j < d; ++j) e[i][j] -= f * e[c][j];
    }
  }
  return abs(det.get_num());
}

}  // namespace lattice
