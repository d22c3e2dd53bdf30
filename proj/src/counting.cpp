#include <lattice/counting.hpp>
#include <lattice/ehrhart.hpp>
#include <lattice/error.hpp>

#include "region.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace lattice {
namespace {

using detail::Region;

// Forms must stay below this in magnitude anywhere in the box for the int64 kernels.
const Integer kInt64FormBound = pow_ui(Integer(2), 60);

// Sub-boxes smaller than this are not worth a thread.
constexpr std::uint64_t kMinParallelPoints = 1u << 15;

struct Box {
  std::vector<Integer> lo, hi;
};

Integer box_volume(const Box& b) {
  Integer v = 1;
  for (std::size_t k = 0; k < b.lo.size(); ++k) {
    if (b.hi[k] < b.lo[k]) return 0;
    v *= b.hi[k] - b.lo[k] + 1;
  }
  return v;
}

Box enclosing_box(const std::vector<Region>& regions) {
  Box b{regions.front().lo, regions.front().hi};
  for (const auto& r : regions)
    for (std::size_t k = 0; k < b.lo.size(); ++k) {
      if (r.lo[k] < b.lo[k]) b.lo[k] = r.lo[k];
      if (r.hi[k] > b.hi[k]) b.hi[k] = r.hi[k];
    }
  return b;
}

bool fits_int64_kernel(const std::vector<Region>& regions, const Box& box) {
  Integer reach = 1;
  for (std::size_t k = 0; k < box.lo.size(); ++k) {
    reach = std::max(reach, Integer(abs(box.lo[k])));
    reach = std::max(reach, Integer(abs(box.hi[k])));
  }
  if (reach >= kInt64FormBound) return false;
  auto ok = [&](const detail::AffineForm& f) {
    Integer bound = abs(f.constant);
    for (const auto& c : f.coeffs) bound += abs(c) * reach;
    return bound < kInt64FormBound;
  };
  for (const auto& r : regions) {
    for (const auto& f : r.equalities)
      if (!ok(f)) return false;
    for (const auto& f : r.inequalities)
      if (!ok(f)) return false;
  }
  return true;
}

// Regions lowered to int64 for the row kernels.
struct PackedRegions {
  std::size_t dim = 0;
  std::vector<std::int64_t> coeffs;     // form-major, dim entries per form
  std::vector<std::int64_t> constants;  // one per form
  std::vector<kernels::FormGroup> groups;
  std::vector<std::int64_t> lo, hi;     // region-major boxes
};

PackedRegions pack(const std::vector<Region>& regions, std::size_t d) {
  PackedRegions p;
  p.dim = d;
  auto push = [&](const detail::AffineForm& f) {
    for (const auto& c : f.coeffs) p.coeffs.push_back(*to_int64(c));
    p.constants.push_back(*to_int64(f.constant));
  };
  for (const auto& r : regions) {
    kernels::FormGroup g;
    g.first = static_cast<std::uint32_t>(p.constants.size());
    g.equalities = static_cast<std::uint32_t>(r.equalities.size());
    g.inequalities = static_cast<std::uint32_t>(r.inequalities.size());
    for (const auto& f : r.equalities) push(f);
    for (const auto& f : r.inequalities) push(f);
    p.groups.push_back(g);
    for (std::size_t k = 0; k < d; ++k) {
      p.lo.push_back(*to_int64(r.lo[k]));
      p.hi.push_back(*to_int64(r.hi[k]));
    }
  }
  return p;
}

// Rows run along axis 0; the outer odometer walks axes 1..d-1.
std::uint64_t count_box_int64(const PackedRegions& p, const std::vector<std::int64_t>& lo,
                              const std::vector<std::int64_t>& hi, kernels::RowCounter kernel) {
  const std::size_t d = p.dim;
  std::vector<std::int64_t> x(lo);
  std::vector<std::int64_t> base, step;
  std::vector<kernels::FormGroup> active;
  std::uint64_t total = 0;

  for (;;) {
    base.clear();
    step.clear();
    active.clear();
    std::int64_t row_lo = hi[0] + 1;
    std::int64_t row_hi = lo[0] - 1;
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
      const std::int64_t* rlo = &p.lo[g * d];
      const std::int64_t* rhi = &p.hi[g * d];
      bool inside = rhi[0] >= lo[0] && rlo[0] <= hi[0];
      for (std::size_t k = 1; k < d && inside; ++k) inside = rlo[k] <= x[k] && x[k] <= rhi[k];
      if (!inside) continue;
      row_lo = std::min(row_lo, std::max(lo[0], rlo[0]));
      row_hi = std::max(row_hi, std::min(hi[0], rhi[0]));
      const kernels::FormGroup& src = p.groups[g];
      kernels::FormGroup dst = src;
      dst.first = static_cast<std::uint32_t>(base.size());
      for (std::uint32_t j = src.first; j < src.first + src.equalities + src.inequalities; ++j) {
        const std::int64_t* a = &p.coeffs[j * d];
        std::int64_t v = p.constants[j];
        for (std::size_t k = 1; k < d; ++k) v += a[k] * x[k];
        base.push_back(v);  // completed below once row_lo is known
        step.push_back(a[0]);
      }
      active.push_back(dst);
    }
    if (!active.empty() && row_lo <= row_hi) {
      for (std::size_t j = 0; j < base.size(); ++j) base[j] += step[j] * row_lo;
      kernels::Row row{base, step, active, row_hi - row_lo + 1};
      total += kernel(row);
    }

    std::size_t k = 1;
    while (k < d && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k >= d) break;
    ++x[k];
  }
  return total;
}

bool accepts_exact(const Region& r, const std::vector<Integer>& x) {
  Integer v;
  for (const auto& f : r.equalities) {
    v = f.constant;
    for (std::size_t k = 0; k < x.size(); ++k) v += f.coeffs[k] * x[k];
    if (v != 0) return false;
  }
  for (const auto& f : r.inequalities) {
    v = f.constant;
    for (std::size_t k = 0; k < x.size(); ++k) v += f.coeffs[k] * x[k];
    if (v < 0) return false;
  }
  return true;
}

bool accepts_reference(const Region& r, const std::vector<Integer>& x) {
  const LatticePoint p(x);
  return r.strict ? in_relative_interior(r.simplex, p) : contains_point(r.simplex, p);
}

Integer count_box_pointwise(const std::vector<Region>& regions, const Box& box, bool reference) {
  const std::size_t d = box.lo.size();
  Integer total = 0;
  if (box_volume(box) == 0) return total;
  std::vector<Integer> x(box.lo);
  for (;;) {
    for (const auto& r : regions) {
      bool in_box = true;
      for (std::size_t k = 0; k < d && in_box; ++k) in_box = r.lo[k] <= x[k] && x[k] <= r.hi[k];
      if (in_box && (reference ? accepts_reference(r, x) : accepts_exact(r, x))) {
        ++total;
        break;
      }
    }
    std::size_t k = 0;
    while (k < d && x[k] == box.hi[k]) {
      x[k] = box.lo[k];
      ++k;
    }
    if (k == d) break;
    ++x[k];
  }
  return total;
}

// Splits the box along its last axis into at most `parts` contiguous slabs.
std::vector<Box> slabs(const Box& box, unsigned parts) {
  const std::size_t axis = box.lo.size() - 1;
  const Integer extent = box.hi[axis] - box.lo[axis] + 1;
  Integer n = std::max(1u, parts);
  if (n > extent) n = extent;
  std::vector<Box> out;
  Integer start = box.lo[axis];
  for (Integer i = 0; i < n; ++i) {
    Integer width = extent / n + (i < extent % n ? 1 : 0);
    Box b = box;
    b.lo[axis] = start;
    b.hi[axis] = start + width - 1;
    start += width;
    out.push_back(std::move(b));
  }
  return out;
}

Integer enumerate(const std::vector<Region>& regions, std::size_t d, const CountOptions& opts) {
  if (regions.empty()) return 0;
  if (d == 0)  // Z^0 has a single point and every region contains it.
    return 1;
  const Box box = enclosing_box(regions);
  const Integer volume = box_volume(box);
  if (volume > Integer(static_cast<unsigned long>(opts.envelope)))
    throw ResourceError("enumeration box has " + volume.get_str() +
                        " points, above the envelope of " + std::to_string(opts.envelope));

  Engine engine = opts.engine;
  const bool fits = fits_int64_kernel(regions, box);
  if (engine == Engine::automatic)
    engine = !fits ? Engine::exact
                   : (kernels::preferred() == kernels::Isa::avx2 ? Engine::avx2 : Engine::scalar);
  if ((engine == Engine::scalar || engine == Engine::avx2) && !fits)
    throw ResourceError("coordinates too large for the int64 row kernels");
  if (engine == Engine::avx2 && !kernels::supported(kernels::Isa::avx2))
    throw InputError("avx2 row kernel is not available on this machine");

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  unsigned parts = opts.slabs ? opts.slabs : threads;
  if (!opts.slabs && volume < Integer(static_cast<unsigned long>(kMinParallelPoints))) parts = 1;
  const std::vector<Box> tasks = slabs(box, parts);
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));

  std::optional<PackedRegions> packed;
  kernels::RowCounter kernel = nullptr;
  if (engine == Engine::scalar || engine == Engine::avx2) {
    packed = pack(regions, d);
    kernel = kernels::counter(engine == Engine::avx2 ? kernels::Isa::avx2 : kernels::Isa::scalar);
  }

  std::vector<Integer> partial(tasks.size());
  auto run = [&](std::size_t i) {
    const Box& b = tasks[i];
    if (packed) {
      std::vector<std::int64_t> lo(d), hi(d);
      for (std::size_t k = 0; k < d; ++k) {
        lo[k] = *to_int64(b.lo[k]);
        hi[k] = *to_int64(b.hi[k]);
      }
      partial[i] = Integer(static_cast<unsigned long>(count_box_int64(*packed, lo, hi, kernel)));
    } else {
      partial[i] = count_box_pointwise(regions, b, engine == Engine::reference);
    }
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) run(i);
      });
  }

  Integer total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

std::vector<LatticePoint> translation_key(const Simplex& s) {
  std::vector<LatticePoint> vs = s.vertices();
  std::sort(vs.begin(), vs.end());
  const LatticePoint origin = vs.front();
  for (auto& v : vs)
    for (std::size_t k = 0; k < v.dim(); ++k) v[k] -= origin[k];
  return vs;
}

}  // namespace

std::string_view name(CountMethod m) {
  return m == CountMethod::enumeration ? "enumeration" : "additive";
}

std::string_view name(Engine e) {
  switch (e) {
    case Engine::automatic: return "automatic";
    case Engine::reference: return "reference";
    case Engine::exact: return "exact";
    case Engine::scalar: return "scalar";
    case Engine::avx2: return "avx2";
  }
  return "unknown";
}

Integer bounding_box_points(const Simplex& s, const Integer& t) {
  Integer v = 1;
  for (std::size_t k = 0; k < s.ambient_dim(); ++k) {
    Integer lo = s.vertex(0)[k], hi = s.vertex(0)[k];
    for (const auto& p : s.vertices()) {
      if (p[k] < lo) lo = p[k];
      if (p[k] > hi) hi = p[k];
    }
    v *= (hi - lo) * t + 1;
  }
  return v;
}

Integer bounding_box_points(const SimplicialComplex& c, const Integer& t) {
  if (c.empty()) return 0;
  Integer v = 1;
  for (std::size_t k = 0; k < c.ambient_dim(); ++k) {
    bool first = true;
    Integer lo, hi;
    for (const auto& f : c.faces())
      for (std::size_t i : f) {
        const Integer& x = c.vertices()[i][k];
        if (first || x < lo) lo = x;
        if (first || x > hi) hi = x;
        first = false;
      }
    v *= (hi - lo) * t + 1;
  }
  return v;
}

Integer count_simplex(const Simplex& s, const Integer& t, const CountOptions& opts) {
  if (t < 0) throw InputError("dilation factor must be nonnegative");
  if (t == 0) return 1;
  std::vector<Region> regions;
  regions.push_back(detail::make_region(dilate(s, t), false));
  return enumerate(regions, s.ambient_dim(), opts);
}

Integer count_relative_interior(const Simplex& s, const Integer& t, const CountOptions& opts) {
  if (t < 1) throw InputError("dilation factor must be at least 1");
  std::vector<Region> regions;
  regions.push_back(detail::make_region(dilate(s, t), true));
  return enumerate(regions, s.ambient_dim(), opts);
}

Integer count_complex(const SimplicialComplex& c, const Integer& t, const CountOptions& opts) {
  if (t < 0) throw InputError("dilation factor must be nonnegative");
  if (c.empty()) return 0;
  if (t == 0) return 1;
  std::vector<Region> regions;
  for (const auto& f : c.maximal_faces())
    regions.push_back(detail::make_region(dilate(c.simplex(f), t), false));
  return enumerate(regions, c.ambient_dim(), opts);
}

Integer count_complex_additive(const SimplicialComplex& c, const Integer& t, InteriorRoute route,
                               const CountOptions& opts) {
  if (t < 1) throw InputError("dilation factor must be at least 1");
  Integer total = 0;
  std::map<std::vector<LatticePoint>, EhrhartPolynomial> cache;
  for (const auto& f : c.faces()) {
    const Simplex s = c.simplex(f);
    if (route == InteriorRoute::enumeration) {
      total += count_relative_interior(s, t, opts);
      continue;
    }
    auto key = translation_key(s);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(std::move(key), ehrhart_polynomial(s, opts)).first;
    total += interior_count(it->second, t);
  }
  return total;
}

}  // namespace lattice
