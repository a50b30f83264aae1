#pragma once

// Octahedral strata for a pair of composable triangles
//
//   X -f-> L -g-> Y -h-> X[1]      Z -l-> M -m-> L -n-> Z[1]
//
// with L' = cone(n f)[-1], and the mirrored pair
//
//   L' -f'-> M -g'-> Y -h'-> L'[1]   Z -l'-> L' -m'-> X -n'-> Z[1].
//
// For a class h the triangle is completed once at chain level, so f is a
// fixed representative; the stratum of n is taken relative to that f.
// Replacing f by a f with a in Aut L moves the stratum by a bijection, so
// every count below is independent of the choice.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hallalg/derived_cat.hpp"

namespace hallalg {

struct OctahedronKey {
  DObj x, y, z, m, l, l2;  // l2 is L'
  auto operator<=>(const OctahedronKey&) const = default;
};

struct OctahedronInstance {
  OctahedronKey key;
  // h in Hom(Y, X[1]) with cone L[1] admitting some n
  std::int64_t yx_stratum = 0;
  // n with cone(n) = M[1] and cone(n f) = L'[1], one entry per h in the stratum
  std::vector<std::int64_t> lz_per_h;
  std::int64_t lz_total = 0;
  // n' in Hom(X, Z[1]) with cone L'[1] admitting some h'
  std::int64_t xz_stratum = 0;
  // h' with cone(h') = M[1] and cone(m'[1] h') = L[1], one entry per n'
  std::vector<std::int64_t> yl_per_n;
  std::int64_t yl_total = 0;
  // pairs (h, n) found by a separate scan with the loops exchanged
  std::int64_t pair_count = 0;
  // (m, f) : M + X -> L with cone(f) = Y, cone(m) = Z[1], cone = L'[1]
  std::int64_t double_out = 0;
  // (f', m') : L' -> M + X with cone(f') = Y, cone(m') = Z[1], cone = L
  std::int64_t double_in = 0;

  bool consistent() const;
};

struct Symmetry1Report {
  Rational lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

struct Symmetry2Report {
  // first statement, for every h in the stratum
  bool f_surjective = true;
  bool f_fibers = true;
  Rational f_fiber_expected;
  std::vector<std::int64_t> f_fiber_sizes;  // distinct observed sizes
  // second statement, for every n' in the stratum
  bool m_surjective = true;
  bool m_fibers = true;
  Rational m_fiber_expected;
  std::vector<std::int64_t> m_fiber_sizes;
  // third statement
  Rational braces_lhs, braces_rhs;
  // {Y,X[1]}{L,Z[1]} sum_h |stratum of n| against {X,Z[1]}{Y,L'[1]} sum_n' |stratum of h'|
  Rational summed_lhs, summed_rhs;

  bool braces_identity() const { return braces_lhs == braces_rhs; }
  bool summed_identity() const { return summed_lhs == summed_rhs; }
  bool holds() const {
    return f_surjective && f_fibers && m_surjective && m_fibers && braces_identity() && summed_identity();
  }
};

class Octahedron {
 public:
  explicit Octahedron(std::shared_ptr<const DerivedCategory> dc);

  const DerivedCategory& category() const { return *dc_; }

  OctahedronInstance counts(const OctahedronKey& k) const;
  Symmetry1Report symmetry1(const OctahedronKey& k) const;
  Symmetry2Report symmetry2(const OctahedronKey& k) const;

  // Every (X, Y, Z, M, L, L') with X, Y, Z drawn from objs and a nonempty
  // octahedral stratum, in sorted order.
  std::vector<OctahedronKey> instances(const std::vector<DObj>& objs) const;

  std::string to_string(const OctahedronKey& k) const;

 private:
  struct Stratum;
  Stratum scan_h(const OctahedronKey& k) const;
  Stratum scan_n(const OctahedronKey& k) const;

  std::shared_ptr<const DerivedCategory> dc_;
};

}  // namespace hallalg
