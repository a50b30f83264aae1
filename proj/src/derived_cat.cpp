#include "hallalg/derived_cat.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <tuple>

namespace hallalg {

// ---------------------------------------------------------------- DObj

DObj DObj::single(int label, int shift, int mult) {
  DObj x;
  x.terms_.push_back(DTerm{label, shift, mult});
  x.normalize();
  return x;
}

DObj DObj::from_module(const ModClass& m, int shift) {
  DObj x;
  for (auto [label, mult] : m.parts) x.terms_.push_back(DTerm{label, shift, mult});
  x.normalize();
  return x;
}

void DObj::normalize() {
  for (const auto& t : terms_)
    if (t.mult < 0) throw std::invalid_argument("DObj: negative multiplicity");
  std::sort(terms_.begin(), terms_.end(), [](const DTerm& a, const DTerm& b) {
    return std::tie(b.shift, a.label) < std::tie(a.shift, b.label);
  });
  std::vector<DTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().label == t.label && merged.back().shift == t.shift)
      merged.back().mult += t.mult;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const DTerm& t) { return t.mult == 0; });
  terms_ = std::move(merged);
}

int DObj::summand_count() const {
  int n = 0;
  for (const auto& t : terms_) n += t.mult;
  return n;
}

int DObj::min_shift() const {
  if (terms_.empty()) return 0;
  return terms_.back().shift;
}

int DObj::max_shift() const {
  if (terms_.empty()) return 0;
  return terms_.front().shift;
}

DObj DObj::shifted(int s) const {
  DObj x = *this;
  for (auto& t : x.terms_) t.shift += s;
  return x;
}

ModClass DObj::at_shift(int s) const {
  ModClass m;
  for (const auto& t : terms_)
    if (t.shift == s) m = m + ModClass::single(t.label, t.mult);
  return m;
}

DObj operator+(const DObj& a, const DObj& b) {
  DObj x = a;
  x.terms_.insert(x.terms_.end(), b.terms_.begin(), b.terms_.end());
  x.normalize();
  return x;
}

std::strong_ordering operator<=>(const DObj& a, const DObj& b) {
  auto key = [](const DTerm& t) { return std::make_tuple(-t.shift, t.label, t.mult); };
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = key(a.terms_[i]) <=> key(b.terms_[i]);
    if (c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

// ---------------------------------------------------------------- complexes

namespace {

const ProjSum kEmptySum;

bool is_empty(const Complex& c) { return c.terms.empty(); }

// Degree range covering both complexes; empty when lo > hi.
std::pair<int, int> joint_range(const Complex& a, const Complex& b) {
  if (is_empty(a) && is_empty(b)) return {0, -1};
  if (is_empty(a)) return {b.lo, b.hi()};
  if (is_empty(b)) return {a.lo, a.hi()};
  return {std::min(a.lo, b.lo), std::max(a.hi(), b.hi())};
}

// A degree-wise block of a complex: (offset, length) for degrees lo, lo+1, ...
struct Part {
  int lo = 0;
  std::vector<std::pair<int, int>> ranges;

  int hi() const { return lo + static_cast<int>(ranges.size()) - 1; }
  int len(int k) const { return k < lo || k > hi() ? 0 : ranges[k - lo].second; }
  int off(int k) const { return k < lo || k > hi() ? 0 : ranges[k - lo].first; }
};

Part whole(const Complex& c) {
  Part part{c.lo, {}};
  for (int k = c.lo; k <= c.hi(); ++k) part.ranges.emplace_back(0, c.size_at(k));
  return part;
}

Part block_part(const Carrier::Block& b) { return Part{b.deg1, {{b.off1, b.len1}, {b.off0, b.len0}}}; }

ChainMap extract(const ChainMap& big, const Part& rows, const Part& cols, int p) {
  ChainMap out;
  out.lo = std::min(rows.lo, cols.lo);
  int hi = std::max(rows.hi(), cols.hi());
  for (int k = out.lo; k <= hi; ++k) {
    FpMatrix m(p, rows.len(k), cols.len(k));
    const FpMatrix* src = big.at(k);
    if (src && !m.empty()) {
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m(r, c) = (*src)(rows.off(k) + r, cols.off(k) + c);
    }
    out.comp.push_back(std::move(m));
  }
  return out;
}

void paste(ChainMap& big, const ChainMap& g, const Part& rows, const Part& cols) {
  for (int k = g.lo; k <= g.hi(); ++k) {
    const FpMatrix& m = g.comp[k - g.lo];
    if (m.empty()) continue;
    if (k < big.lo || k > big.hi()) throw DimensionMismatch("paste: degree outside target map");
    big.comp[k - big.lo].paste(m, rows.off(k), cols.off(k));
  }
}

FpMatrix invert(const FpMatrix& a) {
  const int n = a.rows();
  FpMatrix aug(a.p(), n, 2 * n);
  aug.paste(a, 0, 0);
  aug.paste(FpMatrix::identity(a.p(), n), 0, n);
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] >= n)) throw std::domain_error("invert: singular matrix");
  FpMatrix inv(a.p(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// Homology of c in degree k as a representation.
Rep homology_rep(const Quiver& q, int p, const Complex& c, int k) {
  const int nv = q.vertex_count();
  Rep out;
  out.p = p;
  out.dims.assign(nv, 0);
  FpMatrix d_out = c.diff(k, p), d_in = c.diff(k - 1, p);
  std::vector<std::vector<int>> sup(nv);
  std::vector<std::vector<FpVector>> reps(nv);
  std::vector<SpanSolver> solvers(nv);
  for (int u = 0; u < nv; ++u) {
    sup[u] = support_at(q, c.term(k), u);
    const int n = static_cast<int>(sup[u].size());
    FpMatrix out_u = at_vertex(q, c.term(k), c.term(k + 1), d_out, u);
    FpMatrix in_u = at_vertex(q, c.term(k - 1), c.term(k), d_in, u);
    Subspace span(p, n);
    for (int col = 0; col < in_u.cols(); ++col) span.add(in_u.col(col));
    std::vector<FpVector> boundary = span.basis();
    for (auto& z : kernel_basis(out_u))
      if (span.add(z)) reps[u].push_back(z);
    out.dims[u] = static_cast<int>(reps[u].size());
    std::vector<FpVector> family = reps[u];
    family.insert(family.end(), boundary.begin(), boundary.end());
    solvers[u] = SpanSolver(p, n, family);
  }
  for (auto [src, tgt] : q.arrows()) {
    FpMatrix m(p, out.dims[tgt], out.dims[src]);
    for (int r = 0; r < out.dims[src]; ++r) {
      FpVector image(sup[tgt].size(), 0);
      for (std::size_t i = 0; i < sup[src].size(); ++i) {
        if (reps[src][r][i] == 0) continue;
        auto it = std::find(sup[tgt].begin(), sup[tgt].end(), sup[src][i]);
        image[it - sup[tgt].begin()] = reps[src][r][i];
      }
      FpVector co = solvers[tgt].coords(image);
      for (int t = 0; t < out.dims[tgt]; ++t) m(t, r) = co[t];
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

bool acyclic_at(const Quiver& q, int p, const Complex& c, int k) {
  FpMatrix d_out = c.diff(k, p), d_in = c.diff(k - 1, p);
  for (int u = 0; u < q.vertex_count(); ++u) {
    int n = static_cast<int>(support_at(q, c.term(k), u).size());
    if (n == 0) continue;
    int r_out = rank(at_vertex(q, c.term(k), c.term(k + 1), d_out, u));
    int r_in = rank(at_vertex(q, c.term(k - 1), c.term(k), d_in, u));
    if (r_out + r_in != n) return false;
  }
  return true;
}

}  // namespace

int Complex::size_at(int k) const {
  if (k < lo || k > hi()) return 0;
  return static_cast<int>(terms[k - lo].size());
}

const ProjSum& Complex::term(int k) const {
  if (k < lo || k > hi()) return kEmptySum;
  return terms[k - lo];
}

FpMatrix Complex::diff(int k, int p) const {
  if (k >= lo && k < hi()) return diffs[k - lo];
  return FpMatrix(p, size_at(k + 1), size_at(k));
}

Complex shift_complex(const Complex& c, int s) {
  Complex out = c;
  if (c.terms.empty()) return out;
  out.lo = c.lo - s;
  if (s % 2 != 0)
    for (auto& d : out.diffs) d = d.scaled(-1);
  return out;
}

Complex direct_sum(const Complex& a, const Complex& b, int p) {
  auto [lo, hi] = joint_range(a, b);
  Complex out;
  out.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    ProjSum t = a.term(k);
    t.insert(t.end(), b.term(k).begin(), b.term(k).end());
    out.terms.push_back(std::move(t));
  }
  for (int k = lo; k < hi; ++k) {
    FpMatrix d(p, a.size_at(k + 1) + b.size_at(k + 1), a.size_at(k) + b.size_at(k));
    d.paste(a.diff(k, p), 0, 0);
    d.paste(b.diff(k, p), a.size_at(k + 1), a.size_at(k));
    out.diffs.push_back(std::move(d));
  }
  return out;
}

bool is_complex(const Quiver& q, const Complex& c, int p) {
  if (!c.terms.empty() && c.diffs.size() + 1 != c.terms.size()) return false;
  for (int k = c.lo; k < c.hi(); ++k) {
    const FpMatrix& d = c.diffs[k - c.lo];
    if (!respects_mask(q, c.term(k), c.term(k + 1), d)) return false;
    if (k + 1 < c.hi() && !(c.diffs[k + 1 - c.lo] * d).is_zero()) return false;
  }
  (void)p;
  return true;
}

// ---------------------------------------------------------------- chain maps

const FpMatrix* ChainMap::at(int k) const {
  if (k < lo || k > hi()) return nullptr;
  return &comp[k - lo];
}

ChainMap zero_map(const Complex& a, const Complex& b, int p) {
  auto [lo, hi] = joint_range(a, b);
  ChainMap f;
  f.lo = lo;
  for (int k = lo; k <= hi; ++k) f.comp.emplace_back(p, b.size_at(k), a.size_at(k));
  return f;
}

ChainMap identity_map(const Complex& a, int p) {
  ChainMap f;
  f.lo = a.lo;
  for (int k = a.lo; k <= a.hi(); ++k) f.comp.push_back(FpMatrix::identity(p, a.size_at(k)));
  return f;
}

namespace {

std::pair<int, int> map_range(const ChainMap& f, const ChainMap& g) {
  if (f.comp.empty() && g.comp.empty()) return {0, -1};
  if (f.comp.empty()) return {g.lo, g.hi()};
  if (g.comp.empty()) return {f.lo, f.hi()};
  return {std::min(f.lo, g.lo), std::max(f.hi(), g.hi())};
}

}  // namespace

ChainMap compose(const ChainMap& g, const ChainMap& f, int p) {
  auto [lo, hi] = map_range(f, g);
  ChainMap out;
  out.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    const FpMatrix* fk = f.at(k);
    const FpMatrix* gk = g.at(k);
    int rows = gk ? gk->rows() : 0;
    int cols = fk ? fk->cols() : 0;
    if (fk && gk) {
      if (gk->cols() != fk->rows()) throw DimensionMismatch("compose: inner shapes differ");
      out.comp.push_back(*gk * *fk);
    } else {
      out.comp.emplace_back(p, rows, cols);
    }
  }
  return out;
}

ChainMap add(const ChainMap& f, const ChainMap& g, int p) {
  auto [lo, hi] = map_range(f, g);
  ChainMap out;
  out.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    const FpMatrix* fk = f.at(k);
    const FpMatrix* gk = g.at(k);
    if (fk && gk) {
      if (fk->empty() && !gk->empty())
        out.comp.push_back(*gk);
      else if (gk->empty())
        out.comp.push_back(*fk);
      else
        out.comp.push_back(*fk + *gk);
    } else if (fk) {
      out.comp.push_back(*fk);
    } else if (gk) {
      out.comp.push_back(*gk);
    } else {
      out.comp.emplace_back(p, 0, 0);
    }
  }
  return out;
}

ChainMap scale(const ChainMap& f, int s, int p) {
  ChainMap out = f;
  for (auto& m : out.comp) m = m.empty() ? m : m.scaled(s);
  (void)p;
  return out;
}

ChainMap shift_map(const ChainMap& f, int s) {
  ChainMap out = f;
  out.lo = f.lo - s;
  return out;
}

bool is_chain_map(const Quiver& q, const Complex& a, const Complex& b, const ChainMap& f, int p) {
  auto [lo, hi] = joint_range(a, b);
  auto comp_at = [&](int k) {
    const FpMatrix* m = f.at(k);
    if (m && m->rows() == b.size_at(k) && m->cols() == a.size_at(k)) return *m;
    if (m && !m->empty()) throw DimensionMismatch("is_chain_map: component shape mismatch");
    return FpMatrix(p, b.size_at(k), a.size_at(k));
  };
  for (int k = lo; k <= hi; ++k)
    if (!respects_mask(q, a.term(k), b.term(k), comp_at(k))) return false;
  for (int k = lo - 1; k <= hi; ++k)
    if (!(b.diff(k, p) * comp_at(k) - comp_at(k + 1) * a.diff(k, p)).is_zero()) return false;
  return true;
}

Complex cone_complex(const Complex& a, const Complex& b, const ChainMap& f, int p) {
  Complex shifted = shift_complex(a, 1);
  auto [lo, hi] = joint_range(shifted, b);
  Complex out;
  out.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    ProjSum t = a.term(k + 1);
    t.insert(t.end(), b.term(k).begin(), b.term(k).end());
    out.terms.push_back(std::move(t));
  }
  for (int k = lo; k < hi; ++k) {
    const int a2 = a.size_at(k + 2), a1 = a.size_at(k + 1);
    FpMatrix d(p, a2 + b.size_at(k + 1), a1 + b.size_at(k));
    d.paste(a.diff(k + 1, p).scaled(-1), 0, 0);
    const FpMatrix* fk = f.at(k + 1);
    if (fk && !fk->empty()) d.paste(*fk, a2, 0);
    d.paste(b.diff(k, p), a2, a1);
    out.diffs.push_back(std::move(d));
  }
  return out;
}

FiberTriangle fiber_triangle(const Complex& y, const Complex& x, const ChainMap& h, int p) {
  FiberTriangle out;
  out.cx = shift_complex(cone_complex(y, shift_complex(x, 1), h, p), -1);
  out.incl = zero_map(x, out.cx, p);
  for (int k = out.incl.lo; k <= out.incl.hi(); ++k)
    for (int i = 0; i < x.size_at(k); ++i) out.incl.comp[k - out.incl.lo](y.size_at(k) + i, i) = 1;
  out.proj = zero_map(out.cx, y, p);
  for (int k = out.proj.lo; k <= out.proj.hi(); ++k)
    for (int i = 0; i < y.size_at(k); ++i) out.proj.comp[k - out.proj.lo](i, i) = 1;
  return out;
}

ChainMap from_sum(const Complex& a, const Complex& b, const ChainMap& fa, const ChainMap& fb, int p) {
  auto [lo, hi] = map_range(fa, fb);
  auto [slo, shi] = joint_range(a, b);
  if (slo <= shi) {
    lo = std::min(lo, slo);
    hi = std::max(hi, shi);
  }
  ChainMap out;
  out.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    const FpMatrix* ma = fa.at(k);
    const FpMatrix* mb = fb.at(k);
    int rows = std::max(ma ? ma->rows() : 0, mb ? mb->rows() : 0);
    FpMatrix m(p, rows, a.size_at(k) + b.size_at(k));
    if (ma && !ma->empty()) m.paste(*ma, 0, 0);
    if (mb && !mb->empty()) m.paste(*mb, 0, a.size_at(k));
    out.comp.push_back(std::move(m));
  }
  return out;
}

ChainMap to_sum(const Complex& a, const Complex& b, const ChainMap& ga, const ChainMap& gb, int p) {
  auto [lo, hi] = map_range(ga, gb);
  auto [slo, shi] = joint_range(a, b);
  if (slo <= shi) {
    lo = std::min(lo, slo);
    hi = std::max(hi, shi);
  }
  ChainMap out;
  out.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    const FpMatrix* ma = ga.at(k);
    const FpMatrix* mb = gb.at(k);
    int cols = std::max(ma ? ma->cols() : 0, mb ? mb->cols() : 0);
    FpMatrix m(p, a.size_at(k) + b.size_at(k), cols);
    if (ma && !ma->empty()) m.paste(*ma, 0, 0);
    if (mb && !mb->empty()) m.paste(*mb, a.size_at(k), 0);
    out.comp.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------- HomSpace

HomSpace::HomSpace(const Quiver& q, int p, const Complex& a, const Complex& b) : p_(p) {
  auto [lo, hi] = joint_range(a, b);
  lo_ = lo;
  for (int k = lo; k <= hi; ++k) {
    Slot s{k, b.size_at(k), a.size_at(k), {}, {}, length_};
    s.index.assign(static_cast<std::size_t>(s.rows) * s.cols, -1);
    for (int j = 0; j < s.rows; ++j)
      for (int i = 0; i < s.cols; ++i)
        if (q.reaches(b.term(k)[j], a.term(k)[i])) {
          s.index[static_cast<std::size_t>(j) * s.cols + i] = s.offset + static_cast<int>(s.entries.size());
          s.entries.emplace_back(j, i);
        }
    length_ += static_cast<int>(s.entries.size());
    slots_.push_back(std::move(s));
  }

  // chain condition d_B f^t - f^{t+1} d_A = 0 for t in [lo-1, hi]
  std::vector<int> eq_offset;
  int neq = 0;
  for (int t = lo - 1; t <= hi; ++t) {
    eq_offset.push_back(neq);
    neq += b.size_at(t + 1) * a.size_at(t);
  }
  FpMatrix cond(p, neq, length_);
  for (const Slot& s : slots_) {
    const int k = s.degree;
    FpMatrix db = b.diff(k, p), da = a.diff(k - 1, p);
    for (std::size_t e = 0; e < s.entries.size(); ++e) {
      auto [j, i] = s.entries[e];
      const int col = s.offset + static_cast<int>(e);
      // equation in degree k: (d_B^k f^k)(r, i) gets d_B^k(r, j)
      const int ak = a.size_at(k);
      for (int r = 0; r < db.rows(); ++r)
        if (db(r, j)) cond.set(eq_offset[k - lo + 1] + r * ak + i, col, cond(eq_offset[k - lo + 1] + r * ak + i, col) + db(r, j));
      // equation in degree k-1: -(f^k d_A^{k-1})(j, c) gets -d_A^{k-1}(i, c)
      const int akm = a.size_at(k - 1);
      for (int c = 0; c < da.cols(); ++c)
        if (da(i, c)) cond.set(eq_offset[k - lo] + j * akm + c, col, cond(eq_offset[k - lo] + j * akm + c, col) - da(i, c));
    }
  }
  std::vector<FpVector> cycles = length_ > 0 ? kernel_basis(cond) : std::vector<FpVector>{};
  cycle_dim_ = static_cast<int>(cycles.size());

  // homotopies s^k : A^k -> B^{k-1}, image d_B^{k-1} s^k + s^{k+1} d_A^k
  std::vector<FpVector> images;
  for (int k = lo; k <= hi + 1; ++k) {
    const ProjSum& src = a.term(k);
    const ProjSum& tgt = b.term(k - 1);
    FpMatrix db = b.diff(k - 1, p), da = a.diff(k - 1, p);
    for (int j = 0; j < static_cast<int>(tgt.size()); ++j)
      for (int i = 0; i < static_cast<int>(src.size()); ++i) {
        if (!q.reaches(tgt[j], src[i])) continue;
        FpVector v(length_, 0);
        auto bump = [&](int degree, int row, int col, int val) {
          const Slot& s = slots_[degree - lo];
          int pos = s.index[static_cast<std::size_t>(row) * s.cols + col];
          if (pos < 0) throw std::logic_error("homotopy image leaves the masked entries");
          v[pos] = ((v[pos] + val) % p + p) % p;
        };
        for (int r = 0; r < db.rows(); ++r)
          if (db(r, j)) bump(k, r, i, db(r, j));
        for (int c = 0; c < da.cols(); ++c)
          if (da(i, c)) bump(k - 1, j, c, da(i, c));
        images.push_back(std::move(v));
      }
  }
  homotopy_len_ = static_cast<int>(images.size());
  homotopy_matrix_ = FpMatrix(p, length_, homotopy_len_);
  for (int c = 0; c < homotopy_len_; ++c)
    for (int r = 0; r < length_; ++r) homotopy_matrix_(r, c) = images[c][r];

  Subspace boundaries(p, length_, images);
  boundary_dim_ = boundaries.dim();
  Subspace span = boundaries;
  for (const auto& z : cycles)
    if (span.add(z)) complement_.push_back(boundaries.reduce(z));
  std::vector<FpVector> family = complement_;
  family.insert(family.end(), boundaries.basis().begin(), boundaries.basis().end());
  solver_ = SpanSolver(p, length_, family);
}

FpVector HomSpace::to_vector(const ChainMap& f) const {
  FpVector v(length_, 0);
  for (const Slot& s : slots_) {
    const FpMatrix* m = f.at(s.degree);
    if (!m || m->empty()) continue;
    if (m->rows() != s.rows || m->cols() != s.cols) throw DimensionMismatch("HomSpace: component shape mismatch");
    for (std::size_t e = 0; e < s.entries.size(); ++e) v[s.offset + e] = (*m)(s.entries[e].first, s.entries[e].second);
  }
  return v;
}

ChainMap HomSpace::from_vector(const FpVector& v) const {
  ChainMap f;
  f.lo = lo_;
  for (const Slot& s : slots_) {
    FpMatrix m(p_, s.rows, s.cols);
    for (std::size_t e = 0; e < s.entries.size(); ++e) m(s.entries[e].first, s.entries[e].second) = v[s.offset + e];
    f.comp.push_back(std::move(m));
  }
  return f;
}

ChainMap HomSpace::element(const FpVector& coords) const {
  if (static_cast<int>(coords.size()) != dim()) throw DimensionMismatch("HomSpace: coordinate length mismatch");
  FpVector v(length_, 0);
  for (int i = 0; i < dim(); ++i) {
    if (coords[i] == 0) continue;
    for (int k = 0; k < length_; ++k) v[k] = (v[k] + coords[i] * complement_[i][k]) % p_;
  }
  return from_vector(v);
}

FpVector HomSpace::coords(const ChainMap& f) const {
  FpVector c = solver_.coords(to_vector(f));
  c.resize(dim());
  return c;
}

bool HomSpace::is_null_homotopic(const ChainMap& f) const {
  for (int x : coords(f))
    if (x != 0) return false;
  return true;
}

ChainMap HomSpace::homotopy_image(const FpVector& s) const { return from_vector(homotopy_matrix_.apply(s)); }

// ---------------------------------------------------------------- DerivedCategory

DerivedCategory::DerivedCategory(std::shared_ptr<const Catalog> cat, int window, std::int64_t cap)
    : cat_(std::move(cat)), window_(window), cap_(cap) {
  if (window < 0) throw std::invalid_argument("shift window must be nonnegative");
}

std::string DerivedCategory::to_string(const DObj& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& t : x.terms()) {
    if (!out.empty()) out += "+";
    if (t.mult != 1) out += std::to_string(t.mult) + "*";
    out += cat_->label_name(t.label);
    if (t.shift != 0) out += "[" + std::to_string(t.shift) + "]";
  }
  return out;
}

DObj DerivedCategory::parse(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  DObj out;
  if (s.empty() || s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find('+', i);
    if (j == std::string::npos) j = s.size();
    std::string term = s.substr(i, j - i);
    int mult = 1;
    auto star = term.find('*');
    if (star != std::string::npos) {
      mult = std::stoi(term.substr(0, star));
      term = term.substr(star + 1);
    }
    int lo = 0, hi = 0, shift = 0, used = 0;
    if (std::sscanf(term.c_str(), "I[%d,%d]%n", &lo, &hi, &used) != 2 || used == 0)
      throw std::invalid_argument("cannot parse object term '" + term + "'");
    std::string rest = term.substr(static_cast<std::size_t>(used));
    if (!rest.empty()) {
      int used2 = 0;
      if (std::sscanf(rest.c_str(), "[%d]%n", &shift, &used2) != 1 || used2 != static_cast<int>(rest.size()))
        throw std::invalid_argument("cannot parse shift in '" + term + "'");
    }
    auto label = cat_->find_label(lo - 1, hi - 1);
    if (!label) throw std::invalid_argument("no indecomposable " + term);
    out = out + DObj::single(*label, shift, mult);
    i = j + 1;
  }
  return out;
}

void DerivedCategory::check_window(const DObj& x, int slack) const {
  for (const auto& t : x.terms())
    if (t.shift < -window_ - slack || t.shift > window_ + slack)
      throw WindowExceeded("shift " + std::to_string(t.shift) + " outside window [-" + std::to_string(window_) + ", " +
                           std::to_string(window_) + "]");
}

int DerivedCategory::total_dim(const DObj& x) const {
  int d = 0;
  for (const auto& t : x.terms()) d += t.mult * cat_->total_dim(ModClass::single(t.label));
  return d;
}

const Carrier& DerivedCategory::carrier(const DObj& x) const {
  auto it = carriers_.find(x);
  if (it != carriers_.end()) return *it->second;
  check_window(x, 2);
  const int p = cat_->p();
  auto c = std::make_unique<Carrier>();
  c->obj = x;
  if (!x.is_zero()) {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& t : x.terms()) {
      int low = cat_->presentation(t.label).p1.empty() ? -t.shift : -t.shift - 1;
      lo = first ? low : std::min(lo, low);
      hi = first ? -t.shift : std::max(hi, -t.shift);
      first = false;
    }
    Complex& cx = c->cx;
    cx.lo = lo;
    cx.terms.assign(hi - lo + 1, {});
    for (const auto& t : x.terms()) {
      const Presentation& pres = cat_->presentation(t.label);
      for (int copy = 0; copy < t.mult; ++copy) {
        Carrier::Block b{t.label, t.shift, -t.shift - 1, 0, static_cast<int>(pres.p1.size()),
                         -t.shift, 0, static_cast<int>(pres.p0.size())};
        if (b.len1 > 0) {
          auto& t1 = cx.terms[b.deg1 - lo];
          b.off1 = static_cast<int>(t1.size());
          t1.insert(t1.end(), pres.p1.begin(), pres.p1.end());
        }
        auto& t0 = cx.terms[b.deg0 - lo];
        b.off0 = static_cast<int>(t0.size());
        t0.insert(t0.end(), pres.p0.begin(), pres.p0.end());
        c->blocks.push_back(b);
      }
    }
    for (int k = lo; k < hi; ++k) cx.diffs.emplace_back(p, cx.size_at(k + 1), cx.size_at(k));
    for (const auto& b : c->blocks) {
      if (b.len1 == 0) continue;
      FpMatrix d = cat_->presentation(b.label).d;
      if (b.shift % 2 != 0) d = d.scaled(-1);
      cx.diffs[b.deg1 - lo].paste(d, b.off0, b.off1);
    }
  }
  const Carrier& ref = *c;
  carriers_.emplace(x, std::move(c));
  return ref;
}

const HomSpace& DerivedCategory::hom(const DObj& x, const DObj& y) const {
  auto key = std::make_pair(x, y);
  auto it = homs_.find(key);
  if (it != homs_.end()) return *it->second;
  auto h = std::make_unique<HomSpace>(quiver(), p(), carrier(x).cx, carrier(y).cx);
  const HomSpace& ref = *h;
  homs_.emplace(std::move(key), std::move(h));
  return ref;
}

int DerivedCategory::graded_hom_dim(const DObj& x, const DObj& y, int i) const {
  check_window(x);
  check_window(y);
  int d = 0;
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) {
      int gap = b.shift - (a.shift + i);
      if (gap == 0)
        d += a.mult * b.mult * cat_->hom(a.label, b.label);
      else if (gap == 1)
        d += a.mult * b.mult * cat_->ext(a.label, b.label);
    }
  return d;
}

int DerivedCategory::braces_exponent(const DObj& x, const DObj& y) const {
  if (x.is_zero() || y.is_zero()) return 0;
  int top = y.max_shift() - x.min_shift();
  int e = 0;
  for (int i = 1; i <= top; ++i) e += (i % 2 == 0 ? 1 : -1) * graded_hom_dim(x, y, i);
  return e;
}

Rational DerivedCategory::braces(const DObj& x, const DObj& y) const { return qpow(braces_exponent(x, y), p()); }

DObj DerivedCategory::homology_class(const Complex& c) const {
  DObj out;
  for (int k = c.lo; k <= c.hi(); ++k) {
    if (acyclic_at(quiver(), p(), c, k)) continue;
    out = out + DObj::from_module(cat_->classify(homology_rep(quiver(), p(), c, k)), -k);
  }
  return out;
}

bool DerivedCategory::is_acyclic(const Complex& c) const {
  for (int k = c.lo; k <= c.hi(); ++k)
    if (!acyclic_at(quiver(), p(), c, k)) return false;
  return true;
}

DObj DerivedCategory::cone(const DObj& x, const DObj& y, const ChainMap& f) const {
  return homology_class(cone_complex(carrier(x).cx, carrier(y).cx, f, p()));
}

void DerivedCategory::for_each_class(const DObj& x, const DObj& y,
                                     const std::function<void(const FpVector&, const ChainMap&)>& fn) const {
  const HomSpace& h = hom(x, y);
  for_each_coords(p(), h.dim(), cap_, [&](const FpVector& c) { fn(c, h.element(c)); });
}

std::vector<ChainMap> DerivedCategory::dhom_classes(const DObj& x, const DObj& y) const {
  check_window(x);
  check_window(y);
  std::vector<ChainMap> out;
  for_each_class(x, y, [&](const FpVector&, const ChainMap& f) { out.push_back(f); });
  return out;
}

std::map<DObj, std::int64_t> DerivedCategory::cone_strata(const DObj& x, const DObj& y) const {
  check_window(x);
  check_window(y);
  std::map<DObj, std::int64_t> out;
  for_each_class(x, y, [&](const FpVector&, const ChainMap& f) { ++out[cone(x, y, f)]; });
  return out;
}

std::int64_t DerivedCategory::hom_with_cone_count(const DObj& x, const DObj& y, const DObj& c) const {
  auto strata = cone_strata(x, y);
  auto it = strata.find(c);
  return it == strata.end() ? 0 : it->second;
}

std::int64_t DerivedCategory::end_order(const DObj& x) const {
  return checked_power(p(), graded_hom_dim(x, x, 0), std::int64_t{1} << 62);
}

std::int64_t DerivedCategory::daut_order(const DObj& x) const {
  int diag = 0;
  for (const auto& t : x.terms()) diag += t.mult * t.mult;
  std::int64_t r = checked_power(p(), graded_hom_dim(x, x, 0) - diag, std::int64_t{1} << 62);
  for (const auto& t : x.terms()) r *= gl_order(p(), t.mult);
  return r;
}

int DerivedCategory::scalar(int label, int shift, const ChainMap& f) const {
  DObj s = DObj::single(label, shift);
  const HomSpace& h = hom(s, s);
  if (h.dim() != 1) throw InternalIdentityMismatch("endomorphism space of an indecomposable is not one-dimensional");
  int unit = h.coords(identity_map(carrier(s).cx, p()))[0];
  return h.coords(f)[0] * inv_mod(unit, p()) % p();
}

namespace {

// For each element of the End(X) basis, the scalar matrices on blocks of equal type.
std::vector<std::vector<FpMatrix>> scalar_blocks(const DerivedCategory& dc, const DObj& x) {
  const Carrier& c = dc.carrier(x);
  const HomSpace& h = dc.hom(x, x);
  std::vector<std::vector<FpMatrix>> out;
  for (int e = 0; e < h.dim(); ++e) {
    FpVector coords(h.dim(), 0);
    coords[e] = 1;
    ChainMap f = h.element(coords);
    std::vector<FpMatrix> blocks;
    int start = 0;
    for (const auto& t : x.terms()) {
      FpMatrix m(dc.p(), t.mult, t.mult);
      for (int j = 0; j < t.mult; ++j)
        for (int i = 0; i < t.mult; ++i)
          m(j, i) = dc.scalar(t.label, t.shift, dc.block(c, start + i, c, start + j, f));
      blocks.push_back(std::move(m));
      start += t.mult;
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

}  // namespace

std::int64_t DerivedCategory::daut_order_counted(const DObj& x) const {
  return count_units(p(), scalar_blocks(*this, x), cap_);
}

std::int64_t DerivedCategory::daut_order_bruteforce(const DObj& x, std::int64_t cap) const {
  const Carrier& c = carrier(x);
  const HomSpace& h = hom(x, x);
  std::int64_t n = 0;
  for_each_coords(p(), h.dim(), cap, [&](const FpVector& co) {
    if (is_acyclic(cone_complex(c.cx, c.cx, h.element(co), p()))) ++n;
  });
  return n;
}

bool DerivedCategory::is_automorphism(const DObj& x, const ChainMap& f) const {
  const Carrier& c = carrier(x);
  return is_acyclic(cone_complex(c.cx, c.cx, f, p()));
}

std::vector<ChainMap> DerivedCategory::automorphisms(const DObj& x) const {
  auto basis = scalar_blocks(*this, x);
  const HomSpace& h = hom(x, x);
  std::vector<ChainMap> out;
  for_each_coords(p(), h.dim(), cap_, [&](const FpVector& co) {
    for (std::size_t b = 0; b < x.terms().size(); ++b) {
      FpMatrix m(p(), x.terms()[b].mult, x.terms()[b].mult);
      for (int e = 0; e < h.dim(); ++e)
        if (co[e]) m = m + basis[e][b].scaled(co[e]);
      if (rank(m) < m.rows()) return;
    }
    out.push_back(h.element(co));
  });
  return out;
}

ChainMap DerivedCategory::block(const Carrier& x, int i, const Carrier& y, int j, const ChainMap& f) const {
  return extract(f, block_part(y.blocks.at(j)), block_part(x.blocks.at(i)), p());
}

ChainMap DerivedCategory::embed(const Carrier& x, int i, const Carrier& y, int j, const ChainMap& g) const {
  ChainMap out = zero_map(x.cx, y.cx, p());
  paste(out, g, block_part(y.blocks.at(j)), block_part(x.blocks.at(i)));
  return out;
}

HomotopyEquivalence DerivedCategory::minimal_model(const Complex& c) const {
  const int p = this->p();
  DObj d = homology_class(c);
  const Carrier& dc = carrier(d);
  ChainMap psi = zero_map(dc.cx, c, p), gam = zero_map(c, dc.cx, p);
  Part whole_c = whole(c);
  int start = 0;
  for (const auto& t : d.terms()) {
    const Carrier& sc = carrier(DObj::single(t.label, t.shift));
    HomSpace from(quiver(), p, sc.cx, c), to(quiver(), p, c, sc.cx);
    auto unit = [](int n, int i) {
      FpVector v(n, 0);
      v[i] = 1;
      return v;
    };
    std::vector<ChainMap> fs, gs;
    for (int i = 0; i < from.dim(); ++i) fs.push_back(from.element(unit(from.dim(), i)));
    for (int i = 0; i < to.dim(); ++i) gs.push_back(to.element(unit(to.dim(), i)));
    FpMatrix pairing(p, to.dim(), from.dim());
    for (int r = 0; r < to.dim(); ++r)
      for (int k = 0; k < from.dim(); ++k) pairing(r, k) = scalar(t.label, t.shift, compose(gs[r], fs[k], p));
    RrefResult by_col = rref(pairing), by_row = rref(pairing.transpose());
    if (by_col.rank != t.mult) throw InternalIdentityMismatch("minimal model: summand multiplicity not detected");
    FpMatrix q = invert(pairing.submatrix(by_row.pivots, by_col.pivots));
    for (int copy = 0; copy < t.mult; ++copy) {
      const Part bp = block_part(dc.blocks[start + copy]);
      ChainMap g = zero_map(c, sc.cx, p);
      for (int s = 0; s < t.mult; ++s)
        if (q(copy, s)) g = add(g, scale(gs[by_row.pivots[s]], q(copy, s), p), p);
      paste(psi, fs[by_col.pivots[copy]], whole_c, bp);
      paste(gam, g, bp, whole_c);
    }
    start += t.mult;
  }
  // gam psi is the identity on diagonal scalars, so id - gam psi is nilpotent up to homotopy
  const HomSpace& end = hom(d, d);
  ChainMap id = identity_map(dc.cx, p);
  ChainMap nil = add(id, scale(compose(gam, psi, p), -1, p), p);
  ChainMap inverse = id, power = id;
  bool done = false;
  for (int iter = 0; iter < 64 && !done; ++iter) {
    power = compose(power, nil, p);
    if (end.is_null_homotopic(power))
      done = true;
    else
      inverse = add(inverse, power, p);
  }
  if (!done) throw InternalIdentityMismatch("minimal model: correction term is not nilpotent");
  return HomotopyEquivalence{d, compose(inverse, gam, p), psi};
}

IsoPartDecomposition DerivedCategory::iso_part(const DObj& l, const DObj& z, const ChainMap& n) const {
  const int p = this->p();
  const DObj z1 = z.shifted(1);
  const Carrier& lc = carrier(l);
  const Carrier& zc = carrier(z1);
  const int nl = static_cast<int>(lc.blocks.size()), nz = static_cast<int>(zc.blocks.size());
  ChainMap cur = n;
  ChainMap rows = identity_map(zc.cx, p), cols = identity_map(lc.cx, p);
  std::vector<char> used_l(nl, 0), used_z(nz, 0);
  IsoPartDecomposition out;
  out.l = l;
  out.z = z;
  while (true) {
    int pi = -1, pj = -1, c = 0;
    for (int i = 0; i < nl && pi < 0; ++i) {
      if (used_l[i]) continue;
      for (int j = 0; j < nz; ++j) {
        if (used_z[j]) continue;
        const auto& bl = lc.blocks[i];
        const auto& bz = zc.blocks[j];
        if (bl.label != bz.label || bl.shift != bz.shift) continue;
        int s = scalar(bl.label, bl.shift, block(lc, i, zc, j, cur));
        if (s != 0) {
          pi = i;
          pj = j;
          c = s;
          break;
        }
      }
    }
    if (pi < 0) break;
    const int ci = inv_mod(c, p);
    // clear column pi outside row pj
    ChainMap x = zero_map(zc.cx, zc.cx, p);
    for (int j = 0; j < nz; ++j)
      if (j != pj) paste(x, scale(block(lc, pi, zc, j, cur), ci, p), block_part(zc.blocks[j]), block_part(zc.blocks[pj]));
    ChainMap row_step = add(identity_map(zc.cx, p), scale(x, -1, p), p);
    cur = compose(row_step, cur, p);
    rows = compose(row_step, rows, p);
    // clear row pj outside column pi
    ChainMap y = zero_map(lc.cx, lc.cx, p);
    for (int i = 0; i < nl; ++i)
      if (i != pi) paste(y, scale(block(lc, i, zc, pj, cur), ci, p), block_part(lc.blocks[pi]), block_part(lc.blocks[i]));
    ChainMap col_step = add(identity_map(lc.cx, p), scale(y, -1, p), p);
    cur = compose(cur, col_step, p);
    cols = compose(cols, col_step, p);
    used_l[pi] = used_z[pj] = 1;
    out.l_blocks.push_back(pi);
    out.z_blocks.push_back(pj);
  }
  for (int i = 0; i < nl; ++i) {
    DObj s = DObj::single(lc.blocks[i].label, lc.blocks[i].shift);
    (used_l[i] ? out.l1 : out.l2) = (used_l[i] ? out.l1 : out.l2) + s;
  }
  for (int j = 0; j < nz; ++j) {
    DObj s = DObj::single(zc.blocks[j].label, zc.blocks[j].shift - 1);
    (used_z[j] ? out.z1 : out.z2) = (used_z[j] ? out.z1 : out.z2) + s;
  }
  out.b = cols;
  out.d = shift_map(rows, -1);
  out.split = cur;
  return out;
}

std::vector<TriangleOrbit> DerivedCategory::triangle_orbits(const DObj& z, const DObj& l, const DObj& m) const {
  check_window(z);
  check_window(l);
  check_window(m);
  const int p = this->p();
  const Carrier& zc = carrier(z);
  const Carrier& mc = carrier(m);
  const DObj zs = z.shifted(1);
  const HomSpace& hzm = hom(z, m);
  const HomSpace& hml = hom(m, l);
  const HomSpace& hlz = hom(l, zs);
  auto aut_z = automorphisms(z);
  auto aut_l = automorphisms(l);
  auto encode = [p](const FpVector& c) {
    std::int64_t code = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * p + *it;
    return code;
  };
  std::set<std::int64_t> seen;
  std::vector<TriangleOrbit> out;
  for_each_class(z, m, [&](const FpVector& co, const ChainMap& f) {
    if (seen.count(encode(co))) return;
    if (cone(z, m, f) != l) return;
    TriangleOrbit orbit;
    std::set<std::int64_t> members;
    for (const auto& a : aut_z) members.insert(encode(hzm.coords(compose(f, a, p))));
    seen.insert(members.begin(), members.end());
    orbit.f_orbit_size = static_cast<std::int64_t>(members.size());

    Complex c = cone_complex(zc.cx, mc.cx, f, p);
    HomotopyEquivalence mm = minimal_model(c);
    if (mm.obj != l) throw InternalIdentityMismatch("triangle completion: cone does not match");
    ChainMap iota = zero_map(mc.cx, c, p);
    for (int k = iota.lo; k <= iota.hi(); ++k)
      for (int i = 0; i < mc.cx.size_at(k); ++i) iota.comp[k - iota.lo](zc.cx.size_at(k + 1) + i, i) = 1;
    Complex zshift = shift_complex(zc.cx, 1);
    ChainMap pi = zero_map(c, zshift, p);
    for (int k = pi.lo; k <= pi.hi(); ++k)
      for (int i = 0; i < zshift.size_at(k); ++i) pi.comp[k - pi.lo](i, i) = 1;
    orbit.f = f;
    orbit.g = compose(mm.to_carrier, iota, p);
    orbit.h = compose(pi, mm.from_carrier, p);
    // exactness on all three rotations
    if (cone(m, l, orbit.g) != zs || cone(l, zs, orbit.h) != m.shifted(1))
      throw InternalIdentityMismatch("triangle completion: rotated cones do not match");

    std::int64_t stab = 0;
    for (const auto& a : aut_l) {
      ChainMap dg = add(compose(a, orbit.g, p), scale(orbit.g, -1, p), p);
      ChainMap dh = add(compose(orbit.h, a, p), scale(orbit.h, -1, p), p);
      if (hml.is_null_homotopic(dg) && hlz.is_null_homotopic(dh)) ++stab;
    }
    orbit.orbit_size = orbit.f_orbit_size * static_cast<std::int64_t>(aut_l.size()) / stab;
    orbit.iso = iso_part(l, z, orbit.h);
    out.push_back(std::move(orbit));
  });
  return out;
}

std::vector<DObj> DerivedCategory::corpus(int min_shift, int max_shift, int max_summands) const {
  std::vector<DObj> types;
  for (int s = max_shift; s >= min_shift; --s)
    for (int label = 0; label < cat_->size(); ++label) types.push_back(DObj::single(label, s));
  std::vector<DObj> out;
  std::function<void(std::size_t, int, const DObj&)> rec = [&](std::size_t from, int left, const DObj& cur) {
    out.push_back(cur);
    if (left == 0) return;
    for (std::size_t t = from; t < types.size(); ++t) rec(t, left - 1, cur + types[t]);
  };
  rec(0, max_summands, DObj{});
  return out;
}

}  // namespace hallalg
