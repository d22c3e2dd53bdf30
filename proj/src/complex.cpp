#include <lattice/complex.hpp>
#include <lattice/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <limits>
#include <random>
#include <set>

namespace lattice {
namespace {

bool is_subset(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "}";
}

void add_subsets(const Face& f, std::set<Face>& out) {
  const std::size_t k = f.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Face sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(f[i]);
    out.insert(std::move(sub));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t ambient_dim,
                                     std::vector<LatticePoint> vertices,
                                     std::vector<Face> faces)
    : ambient_dim_(ambient_dim), vertices_(std::move(vertices)) {
  for (const auto& v : vertices_)
    if (v.dim() != ambient_dim_)
      throw InputError("vertex coordinate count differs from ambient dimension");
  for (auto& f : faces) {
    if (f.empty()) throw InputError("empty face in face list");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InputError("face " + face_str(f) + " repeats a vertex index");
    if (f.back() >= vertices_.size())
      throw InputError("face " + face_str(f) + " has an out-of-range vertex index");
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  faces_ = std::move(faces);
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const auto& f : faces_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

std::vector<Face> SimplicialComplex::maximal_faces() const {
  std::vector<Face> out;
  for (const auto& f : faces_) {
    bool maximal = true;
    for (const auto& g : faces_)
      if (g.size() > f.size() && is_subset(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::has_face(const Face& f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

Simplex SimplicialComplex::simplex(const Face& f) const {
  std::vector<LatticePoint> vs;
  vs.reserve(f.size());
  for (std::size_t i : f) vs.push_back(vertices_.at(i));
  return Simplex(std::move(vs));
}

SimplicialComplex close_under_faces(const std::vector<Face>& maximal,
                                    std::vector<LatticePoint> vertices,
                                    std::optional<std::size_t> ambient_dim) {
  const std::size_t d = ambient_dim ? *ambient_dim : (vertices.empty() ? 0 : vertices[0].dim());
  std::set<Face> faces;
  for (Face f : maximal) {
    if (f.empty()) throw InputError("empty maximal simplex");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InputError("simplex " + face_str(f) + " repeats a vertex index");
    for (std::size_t i : f)
      if (i >= vertices.size())
        throw InputError("simplex " + face_str(f) + " has an out-of-range vertex index");
    if (f.size() > 63) throw InputError("simplex has too many vertices");
    add_subsets(f, faces);
  }
  SimplicialComplex c(d, std::move(vertices), std::vector<Face>(faces.begin(), faces.end()));
  for (const auto& f : c.maximal_faces()) {
    try {
      (void)c.simplex(f);
    } catch (const ValidationError& e) {
      throw ValidationError("simplex " + face_str(f) + ": " + e.what());
    }
  }
  return c;
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(c.dimension() + 1), 0);
  for (const auto& face : c.faces()) ++f[face.size() - 1];
  return f;
}

Integer euler_characteristic(const SimplicialComplex& c) {
  Integer chi = 0;
  const auto f = f_vector(c);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Integer fi(static_cast<unsigned long>(f[i]));
    if (i % 2 == 0)
      chi += fi;
    else
      chi -= fi;
  }
  return chi;
}

ComplexSummary summarize(const SimplicialComplex& c) {
  return {f_vector(c), euler_characteristic(c)};
}

ValidationReport validate(const SimplicialComplex& c) {
  ValidationReport rep;

  for (const auto& f : c.faces()) {
    if (f.size() < 2) continue;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      if (!c.has_face(sub)) {
        rep.closed = false;
        rep.unclosed_face = f;
        rep.problems.push_back("face " + face_str(f) + " is missing its face " + face_str(sub));
        break;
      }
    }
    if (!rep.closed) break;
  }

  std::map<LatticePoint, std::size_t> seen;
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    auto [it, fresh] = seen.emplace(c.vertices()[i], i);
    if (!fresh) {
      rep.distinct_vertices = false;
      rep.problems.push_back("vertices " + std::to_string(it->second) + " and " +
                             std::to_string(i) + " coincide");
    }
  }

  const auto maximal = c.maximal_faces();
  std::vector<std::optional<Simplex>> simplices;
  simplices.reserve(maximal.size());
  for (const auto& f : maximal) {
    try {
      simplices.emplace_back(c.simplex(f));
    } catch (const ValidationError&) {
      rep.affinely_independent = false;
      rep.problems.push_back("face " + face_str(f) + " is affinely dependent");
      simplices.emplace_back(std::nullopt);
    }
  }
  // Faces of an independent maximal face are independent.

  for (std::size_t i = 0; i < maximal.size() && rep.geometric; ++i) {
    if (!simplices[i]) continue;
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      if (!simplices[j]) continue;
      if (!intersection_is_common_face(*simplices[i], *simplices[j])) {
        rep.geometric = false;
        rep.overlapping_pair = std::make_pair(maximal[i], maximal[j]);
        rep.problems.push_back("simplices " + face_str(maximal[i]) + " and " +
                               face_str(maximal[j]) +
                               " do not intersect in a common face");
        break;
      }
    }
  }
  return rep;
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices() != b.vertices()) throw InputError("unite: vertex lists differ");
  std::vector<Face> faces;
  std::set_union(a.faces().begin(), a.faces().end(), b.faces().begin(), b.faces().end(),
                 std::back_inserter(faces));
  return SimplicialComplex(a.ambient_dim(), a.vertices(), std::move(faces));
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices() != b.vertices()) throw InputError("intersect: vertex lists differ");
  std::vector<Face> faces;
  std::set_intersection(a.faces().begin(), a.faces().end(), b.faces().begin(),
                        b.faces().end(), std::back_inserter(faces));
  return SimplicialComplex(a.ambient_dim(), a.vertices(), std::move(faces));
}

SimplicialComplex generate_complex(std::size_t dim, std::size_t grid, const Rational& keep_in,
                                   std::uint64_t seed) {
  // Equal fractions must draw the same stream, so sample from lowest terms.
  Rational keep = keep_in;
  keep.canonicalize();
  if (dim < 1 || dim > 4) throw InputError("generate_complex: dimension must be in 1..4");
  if (grid < 1) throw InputError("generate_complex: grid must be at least 1");
  if (keep < 0 || keep > 1) throw InputError("generate_complex: keep must lie in [0,1]");
  if (!keep.get_den().fits_ulong_p())
    throw InputError("generate_complex: keep denominator too large");
  const std::uint64_t num = keep.get_num().get_ui();
  const std::uint64_t den = keep.get_den().get_ui();

  std::mt19937_64 rng(seed);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % den;
  auto draw = [&] {
    std::uint64_t u;
    do u = rng(); while (u >= limit);
    return u % den < num;
  };

  std::vector<std::vector<long>> kept;
  std::vector<long> corner(dim, 0);
  std::vector<std::size_t> perm(dim);
  for (;;) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      if (draw()) {
        // Vertex chain: corner, then add unit vectors in permutation order.
        std::vector<long> chain;
        std::vector<long> p = corner;
        chain.insert(chain.end(), p.begin(), p.end());
        for (std::size_t axis : perm) {
          ++p[axis];
          chain.insert(chain.end(), p.begin(), p.end());
        }
        kept.push_back(std::move(chain));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t a = 0;
    while (a < dim && corner[a] == static_cast<long>(grid) - 1) corner[a++] = 0;
    if (a == dim) break;
    ++corner[a];
  }

  std::map<std::vector<long>, std::size_t> index;
  for (const auto& chain : kept)
    for (std::size_t v = 0; v <= dim; ++v)
      index.emplace(std::vector<long>(chain.begin() + static_cast<std::ptrdiff_t>(v * dim),
                                      chain.begin() + static_cast<std::ptrdiff_t>((v + 1) * dim)),
                    0);
  std::vector<LatticePoint> vertices;
  vertices.reserve(index.size());
  for (auto& [coords, idx] : index) {
    idx = vertices.size();
    std::vector<Integer> c;
    for (long x : coords) c.emplace_back(x);
    vertices.emplace_back(std::move(c));
  }

  std::vector<Face> maximal;
  maximal.reserve(kept.size());
  for (const auto& chain : kept) {
    Face f;
    for (std::size_t v = 0; v <= dim; ++v)
      f.push_back(index.at(std::vector<long>(
          chain.begin() + static_cast<std::ptrdiff_t>(v * dim),
          chain.begin() + static_cast<std::ptrdiff_t>((v + 1) * dim))));
    maximal.push_back(std::move(f));
  }
  return close_under_faces(maximal, std::move(vertices), dim);
}

}  // namespace lattice
