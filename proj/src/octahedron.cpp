#include "hallalg/octahedron.hpp"

#include <numeric>
#include <set>

namespace hallalg {

struct Octahedron::Stratum {
  // outer key: coordinates of h (resp. n'); inner: image coordinates -> fiber size
  std::map<FpVector, std::map<FpVector, std::int64_t>> images;
  std::map<FpVector, std::int64_t> sizes;
};

namespace {

std::int64_t sum_of(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

// f : X -> L of the triangle X -> L -> Y -h-> X[1]
ChainMap first_map(const DerivedCategory& dc, const DObj& x, const DObj& y, const DObj& l, const ChainMap& h) {
  FiberTriangle fib = fiber_triangle(dc.carrier(y).cx, dc.carrier(x).cx, h, dc.p());
  HomotopyEquivalence mm = dc.minimal_model(fib.cx);
  if (mm.obj != l) throw InternalIdentityMismatch("octahedron: fiber does not match " + dc.to_string(l));
  return compose(mm.to_carrier, fib.incl, dc.p());
}

// g : L -> Y of the same triangle
ChainMap second_map(const DerivedCategory& dc, const DObj& x, const DObj& y, const DObj& l, const ChainMap& h) {
  FiberTriangle fib = fiber_triangle(dc.carrier(y).cx, dc.carrier(x).cx, h, dc.p());
  HomotopyEquivalence mm = dc.minimal_model(fib.cx);
  if (mm.obj != l) throw InternalIdentityMismatch("octahedron: fiber does not match " + dc.to_string(l));
  return compose(fib.proj, mm.from_carrier, dc.p());
}

}  // namespace

bool OctahedronInstance::consistent() const {
  return yx_stratum == static_cast<std::int64_t>(lz_per_h.size()) && lz_total == sum_of(lz_per_h) &&
         xz_stratum == static_cast<std::int64_t>(yl_per_n.size()) && yl_total == sum_of(yl_per_n) &&
         pair_count == lz_total;
}

Octahedron::Octahedron(std::shared_ptr<const DerivedCategory> dc) : dc_(std::move(dc)) {}

Octahedron::Stratum Octahedron::scan_h(const OctahedronKey& k) const {
  const DerivedCategory& dc = *dc_;
  const int p = dc.p();
  const DObj x1 = k.x.shifted(1), z1 = k.z.shifted(1), l1 = k.l.shifted(1), m1 = k.m.shifted(1),
             l21 = k.l2.shifted(1);
  const HomSpace& hxz = dc.hom(k.x, z1);
  Stratum out;
  dc.for_each_class(k.y, x1, [&](const FpVector& hc, const ChainMap& h) {
    if (dc.cone(k.y, x1, h) != l1) return;
    ChainMap f = first_map(dc, k.x, k.y, k.l, h);
    std::map<FpVector, std::int64_t> image;
    std::int64_t size = 0;
    dc.for_each_class(k.l, z1, [&](const FpVector&, const ChainMap& n) {
      if (dc.cone(k.l, z1, n) != m1) return;
      ChainMap nf = compose(n, f, p);
      if (dc.cone(k.x, z1, nf) != l21) return;
      ++image[hxz.coords(nf)];
      ++size;
    });
    if (size == 0) return;
    out.images.emplace(hc, std::move(image));
    out.sizes.emplace(hc, size);
  });
  return out;
}

Octahedron::Stratum Octahedron::scan_n(const OctahedronKey& k) const {
  const DerivedCategory& dc = *dc_;
  const int p = dc.p();
  const DObj x1 = k.x.shifted(1), z1 = k.z.shifted(1), l1 = k.l.shifted(1), m1 = k.m.shifted(1),
             l21 = k.l2.shifted(1);
  const HomSpace& hyx = dc.hom(k.y, x1);
  Stratum out;
  dc.for_each_class(k.x, z1, [&](const FpVector& nc, const ChainMap& n2) {
    if (dc.cone(k.x, z1, n2) != l21) return;
    // m' : L' -> X of the triangle Z -> L' -> X -n'-> Z[1]
    ChainMap m2 = shift_map(second_map(dc, k.z, k.x, k.l2, n2), 1);
    std::map<FpVector, std::int64_t> image;
    std::int64_t size = 0;
    dc.for_each_class(k.y, l21, [&](const FpVector&, const ChainMap& h2) {
      if (dc.cone(k.y, l21, h2) != m1) return;
      ChainMap h = compose(m2, h2, p);
      if (dc.cone(k.y, x1, h) != l1) return;
      ++image[hyx.coords(h)];
      ++size;
    });
    if (size == 0) return;
    out.images.emplace(nc, std::move(image));
    out.sizes.emplace(nc, size);
  });
  return out;
}

OctahedronInstance Octahedron::counts(const OctahedronKey& k) const {
  const DerivedCategory& dc = *dc_;
  const int p = dc.p();
  OctahedronInstance out;
  out.key = k;
  Stratum sh = scan_h(k), sn = scan_n(k);
  out.yx_stratum = static_cast<std::int64_t>(sh.sizes.size());
  for (const auto& [c, s] : sh.sizes) out.lz_per_h.push_back(s);
  out.lz_total = sum_of(out.lz_per_h);
  out.xz_stratum = static_cast<std::int64_t>(sn.sizes.size());
  for (const auto& [c, s] : sn.sizes) out.yl_per_n.push_back(s);
  out.yl_total = sum_of(out.yl_per_n);

  const DObj x1 = k.x.shifted(1), z1 = k.z.shifted(1), l1 = k.l.shifted(1), m1 = k.m.shifted(1),
             l21 = k.l2.shifted(1);
  // pairs (h, n), scanning n in the outer loop
  std::vector<ChainMap> fs;
  dc.for_each_class(k.y, x1, [&](const FpVector&, const ChainMap& h) {
    if (dc.cone(k.y, x1, h) == l1) fs.push_back(first_map(dc, k.x, k.y, k.l, h));
  });
  dc.for_each_class(k.l, z1, [&](const FpVector&, const ChainMap& n) {
    if (dc.cone(k.l, z1, n) != m1) return;
    for (const auto& f : fs)
      if (dc.cone(k.x, z1, compose(n, f, p)) == l21) ++out.pair_count;
  });

  const Complex& mc = dc.carrier(k.m).cx;
  const Complex& xc = dc.carrier(k.x).cx;
  const Complex& lc = dc.carrier(k.l).cx;
  const Complex& l2c = dc.carrier(k.l2).cx;
  Complex mx = direct_sum(mc, xc, p);
  std::vector<ChainMap> ms, f1s;
  dc.for_each_class(k.m, k.l, [&](const FpVector&, const ChainMap& m) {
    if (dc.cone(k.m, k.l, m) == z1) ms.push_back(m);
  });
  dc.for_each_class(k.x, k.l, [&](const FpVector&, const ChainMap& f) {
    if (dc.cone(k.x, k.l, f) == k.y) f1s.push_back(f);
  });
  for (const auto& m : ms)
    for (const auto& f : f1s)
      if (dc.homology_class(cone_complex(mx, lc, from_sum(mc, xc, m, f, p), p)) == l21) ++out.double_out;

  std::vector<ChainMap> f2s, m2s;
  dc.for_each_class(k.l2, k.m, [&](const FpVector&, const ChainMap& f2) {
    if (dc.cone(k.l2, k.m, f2) == k.y) f2s.push_back(f2);
  });
  dc.for_each_class(k.l2, k.x, [&](const FpVector&, const ChainMap& m2) {
    if (dc.cone(k.l2, k.x, m2) == z1) m2s.push_back(m2);
  });
  for (const auto& f2 : f2s)
    for (const auto& m2 : m2s)
      if (dc.homology_class(cone_complex(l2c, mx, to_sum(mc, xc, f2, scale(m2, -1, p), p), p)) == k.l)
        ++out.double_in;
  return out;
}

Symmetry1Report Octahedron::symmetry1(const OctahedronKey& k) const {
  const DerivedCategory& dc = *dc_;
  OctahedronInstance c = counts(k);
  DObj mx = k.m + k.x;
  Symmetry1Report r;
  Rational ll2 = dc.braces(k.l2, k.l);
  r.lhs = Rational(c.double_out) / Rational(dc.daut_order(k.l)) * dc.braces(mx, k.l) / (ll2 * dc.braces(k.l, k.l));
  r.rhs = Rational(c.double_in) / Rational(dc.daut_order(k.l2)) * dc.braces(k.l2, mx) /
          (ll2 * dc.braces(k.l2, k.l2));
  return r;
}

Symmetry2Report Octahedron::symmetry2(const OctahedronKey& k) const {
  const DerivedCategory& dc = *dc_;
  const DObj x1 = k.x.shifted(1), z1 = k.z.shifted(1), l21 = k.l2.shifted(1);
  Stratum sh = scan_h(k), sn = scan_n(k);
  Symmetry2Report r;
  Rational yz(qpow(dc.hom_dim(k.y, z1), dc.p()));
  r.f_fiber_expected = yz * dc.braces(k.x + k.y, z1) / dc.braces(k.l, z1);
  r.m_fiber_expected = yz * dc.braces(k.y, x1 + z1) / dc.braces(k.y, l21);

  std::set<FpVector> h_keys, n_keys;
  for (const auto& [c, s] : sh.sizes) h_keys.insert(c);
  for (const auto& [c, s] : sn.sizes) n_keys.insert(c);
  std::set<std::int64_t> f_sizes, m_sizes;
  for (const auto& [h, image] : sh.images) {
    std::set<FpVector> hit;
    for (const auto& [c, s] : image) {
      hit.insert(c);
      f_sizes.insert(s);
      if (Rational(s) != r.f_fiber_expected) r.f_fibers = false;
    }
    if (hit != n_keys) r.f_surjective = false;
  }
  for (const auto& [n, image] : sn.images) {
    std::set<FpVector> hit;
    for (const auto& [c, s] : image) {
      hit.insert(c);
      m_sizes.insert(s);
      if (Rational(s) != r.m_fiber_expected) r.m_fibers = false;
    }
    if (hit != h_keys) r.m_surjective = false;
  }
  r.f_fiber_sizes.assign(f_sizes.begin(), f_sizes.end());
  r.m_fiber_sizes.assign(m_sizes.begin(), m_sizes.end());

  Rational yx_lz = dc.braces(k.y, x1) * dc.braces(k.l, z1);
  Rational xz_yl = dc.braces(k.x, z1) * dc.braces(k.y, l21);
  r.braces_lhs = r.f_fiber_expected * yx_lz;
  r.braces_rhs = r.m_fiber_expected * xz_yl;
  std::int64_t sum_h = 0, sum_n = 0;
  for (const auto& [c, s] : sh.sizes) sum_h += s;
  for (const auto& [c, s] : sn.sizes) sum_n += s;
  r.summed_lhs = yx_lz * Rational(sum_h);
  r.summed_rhs = xz_yl * Rational(sum_n);
  return r;
}

std::vector<OctahedronKey> Octahedron::instances(const std::vector<DObj>& objs) const {
  const DerivedCategory& dc = *dc_;
  const int p = dc.p();
  std::set<OctahedronKey> out;
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& z : objs) {
        const DObj x1 = x.shifted(1), z1 = z.shifted(1);
        dc.for_each_class(y, x1, [&](const FpVector&, const ChainMap& h) {
          DObj l = dc.cone(y, x1, h).shifted(-1);
          ChainMap f = first_map(dc, x, y, l, h);
          dc.for_each_class(l, z1, [&](const FpVector&, const ChainMap& n) {
            DObj m = dc.cone(l, z1, n).shifted(-1);
            DObj l2 = dc.cone(x, z1, compose(n, f, p)).shifted(-1);
            out.insert(OctahedronKey{x, y, z, m, l, l2});
          });
        });
      }
  return {out.begin(), out.end()};
}

std::string Octahedron::to_string(const OctahedronKey& k) const {
  const DerivedCategory& dc = *dc_;
  return "X=" + dc.to_string(k.x) + " Y=" + dc.to_string(k.y) + " Z=" + dc.to_string(k.z) + " M=" +
         dc.to_string(k.m) + " L=" + dc.to_string(k.l) + " L'=" + dc.to_string(k.l2);
}

}  // namespace hallalg
