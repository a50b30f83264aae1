#include "hallalg/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace hallalg {

Quiver::Quiver(int n, std::vector<std::pair<int, int>> arrows, std::string name)
    : n_(n), arrows_(std::move(arrows)), name_(std::move(name)) {
  if (n < 0) throw std::invalid_argument("Quiver: negative vertex count");
  for (auto [s, t] : arrows_)
    if (s < 0 || t < 0 || s >= n || t >= n || s == t) throw std::invalid_argument("Quiver: bad arrow");
  reach_.assign(static_cast<std::size_t>(n) * n, 0);
  paths_.assign(static_cast<std::size_t>(n) * n, {});
  for (int v = 0; v < n; ++v) {
    std::deque<int> queue{v};
    reach_[static_cast<std::size_t>(v) * n + v] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
        if (arrows_[a].first != u) continue;
        int w = arrows_[a].second;
        if (w == v) throw std::invalid_argument("Quiver: oriented cycle");
        auto idx = static_cast<std::size_t>(v) * n + w;
        if (reach_[idx]) continue;
        reach_[idx] = 1;
        paths_[idx] = paths_[static_cast<std::size_t>(v) * n + u];
        paths_[idx].push_back(a);
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(arrows_.size()) == std::max(n - 1, 0)) {
    std::vector<char> seen(std::max(n - 1, 0), 0);
    type_a_ = true;
    for (auto [s, t] : arrows_) {
      int lo = std::min(s, t);
      if (std::abs(s - t) != 1 || seen[lo]) {
        type_a_ = false;
        break;
      }
      seen[lo] = 1;
    }
  }
  if (name_.empty()) name_ = "Q" + std::to_string(n);
}

Quiver Quiver::type_a(int n, std::string_view orientation) {
  if (n < 1) throw std::invalid_argument("type A quiver needs at least one vertex");
  std::string o(orientation);
  if (o.empty()) o.assign(n - 1, 'r');
  if (static_cast<int>(o.size()) != n - 1) throw std::invalid_argument("orientation must have n-1 characters");
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i + 1 < n; ++i) {
    if (o[i] == 'r') arrows.emplace_back(i, i + 1);
    else if (o[i] == 'l') arrows.emplace_back(i + 1, i);
    else throw std::invalid_argument("orientation characters must be 'r' or 'l'");
  }
  std::string name = "A" + std::to_string(n);
  if (o.find('l') != std::string::npos) name += ":" + o;
  return Quiver(n, std::move(arrows), name);
}

Quiver Quiver::parse(std::string_view text) {
  std::string s(text);
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'a')) throw std::invalid_argument("quiver name must look like A<n>[:orientation]");
  auto colon = s.find(':');
  std::string num = s.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("quiver name must look like A<n>[:orientation]");
  int n = std::stoi(num);
  return type_a(n, colon == std::string::npos ? std::string_view{} : std::string_view(s).substr(colon + 1));
}

int Rep::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

Rep zero_rep(const Quiver& q, int p) {
  Rep r;
  r.p = p;
  r.dims.assign(q.vertex_count(), 0);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) r.maps.emplace_back(p, 0, 0);
  return r;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.p != b.p || a.dims.size() != b.dims.size() || a.maps.size() != b.maps.size())
    throw DimensionMismatch("direct_sum: incompatible representations");
  Rep r;
  r.p = a.p;
  for (std::size_t v = 0; v < a.dims.size(); ++v) r.dims.push_back(a.dims[v] + b.dims[v]);
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    FpMatrix m(a.p, a.maps[k].rows() + b.maps[k].rows(), a.maps[k].cols() + b.maps[k].cols());
    m.paste(a.maps[k], 0, 0);
    m.paste(b.maps[k], a.maps[k].rows(), a.maps[k].cols());
    r.maps.push_back(std::move(m));
  }
  return r;
}

void validate_rep(const Quiver& q, const Rep& m) {
  if (static_cast<int>(m.dims.size()) != q.vertex_count() || m.maps.size() != q.arrows().size())
    throw DimensionMismatch("representation does not match the quiver");
  for (std::size_t a = 0; a < m.maps.size(); ++a) {
    auto [s, t] = q.arrows()[a];
    if (m.maps[a].rows() != m.dims[t] || m.maps[a].cols() != m.dims[s])
      throw DimensionMismatch("arrow matrix shape does not match dimension vector");
  }
}

FpMatrix path_map(const Quiver& q, const Rep& m, int from, int to) {
  if (!q.reaches(from, to)) throw std::invalid_argument("path_map: no path");
  FpMatrix r = FpMatrix::identity(m.p, m.dims[from]);
  for (int a : q.path(from, to)) r = m.maps[a] * r;
  return r;
}

namespace {

// Coefficient matrix of the commuting equations for Hom(M, N), and the vertex offsets.
FpMatrix hom_equations(const Quiver& q, const Rep& m, const Rep& n, std::vector<int>& offset) {
  const int nv = q.vertex_count();
  offset.assign(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  int eqs = 0;
  for (auto [s, t] : q.arrows()) eqs += n.dims[t] * m.dims[s];
  FpMatrix e(m.p, eqs, offset[nv]);
  int row = 0;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    const FpMatrix& na = n.maps[a];
    const FpMatrix& ma = m.maps[a];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c, ++row) {
        // sum_k N_a[r][k] X_s[k][c] - sum_k X_t[r][k] M_a[k][c]
        for (int k = 0; k < n.dims[s]; ++k)
          if (na(r, k)) e.set(row, offset[s] + k * m.dims[s] + c, e(row, offset[s] + k * m.dims[s] + c) + na(r, k));
        for (int k = 0; k < m.dims[t]; ++k)
          if (ma(k, c)) e.set(row, offset[t] + r * m.dims[t] + k, e(row, offset[t] + r * m.dims[t] + k) - ma(k, c));
      }
  }
  return e;
}

}  // namespace

std::vector<RepMorphism> hom_space(const Quiver& q, const Rep& m, const Rep& n) {
  std::vector<int> offset;
  FpMatrix e = hom_equations(q, m, n, offset);
  std::vector<RepMorphism> out;
  for (const auto& vec : kernel_basis(e)) {
    RepMorphism f;
    for (int v = 0; v < q.vertex_count(); ++v) {
      FpMatrix x(m.p, n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) x(r, c) = vec[offset[v] + r * m.dims[v] + c];
      f.at.push_back(std::move(x));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Quiver& q, const Rep& m, const Rep& n) {
  std::vector<int> offset;
  FpMatrix e = hom_equations(q, m, n, offset);
  return e.cols() - rank(e);
}

bool is_morphism(const Quiver& q, const Rep& m, const Rep& n, const RepMorphism& f) {
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    if (!(n.maps[a] * f.at[s] == f.at[t] * m.maps[a])) return false;
  }
  return true;
}

int euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  int s = 0;
  for (int v = 0; v < q.vertex_count(); ++v) s += d[v] * e[v];
  for (auto [src, tgt] : q.arrows()) s -= d[src] * e[tgt];
  return s;
}

int ext1_dim(const Quiver& q, const Rep& m, const Rep& n) {
  int via_euler = hom_dim(q, m, n) - euler_form(q, m.dims, n.dims);
  int via_presentation = ext1_dim_presentation(q, m, n);
  if (via_euler != via_presentation)
    throw InternalIdentityMismatch("ext1_dim: Euler form and presentation disagree");
  return via_euler;
}

bool is_closed(const Quiver& q, const Rep& m, const std::vector<Subspace>& u) {
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    for (const auto& b : u[s].basis())
      if (!u[t].contains(m.maps[a].apply(b))) return false;
  }
  return true;
}

Rep sub_rep(const Quiver& q, const Rep& m, const std::vector<Subspace>& u) {
  Rep r;
  r.p = m.p;
  for (int v = 0; v < q.vertex_count(); ++v) r.dims.push_back(u[v].dim());
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    FpMatrix x(m.p, u[t].dim(), u[s].dim());
    for (int c = 0; c < u[s].dim(); ++c) {
      FpVector img = m.maps[a].apply(u[s].basis()[c]);
      FpVector co = u[t].coords(img);
      for (int rr = 0; rr < u[t].dim(); ++rr) x(rr, c) = co[rr];
    }
    r.maps.push_back(std::move(x));
  }
  return r;
}

Rep quotient_rep(const Quiver& q, const Rep& m, const std::vector<Subspace>& u) {
  Rep r;
  r.p = m.p;
  std::vector<std::vector<int>> np;
  for (int v = 0; v < q.vertex_count(); ++v) {
    np.push_back(u[v].non_pivots());
    r.dims.push_back(static_cast<int>(np.back().size()));
  }
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    auto [s, t] = q.arrows()[a];
    FpMatrix x(m.p, r.dims[t], r.dims[s]);
    for (int c = 0; c < r.dims[s]; ++c) {
      FpVector co = u[t].quotient_coords(m.maps[a].col(np[s][c]));
      for (int rr = 0; rr < r.dims[t]; ++rr) x(rr, c) = co[rr];
    }
    r.maps.push_back(std::move(x));
  }
  return r;
}

std::vector<int> support_at(const Quiver& q, const ProjSum& s, int u) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (q.reaches(s[i], u)) idx.push_back(i);
  return idx;
}

Rep projective_rep(const Quiver& q, int p, const ProjSum& s) {
  Rep r;
  r.p = p;
  std::vector<std::vector<int>> sup;
  for (int u = 0; u < q.vertex_count(); ++u) {
    sup.push_back(support_at(q, s, u));
    r.dims.push_back(static_cast<int>(sup.back().size()));
  }
  for (auto [src, tgt] : q.arrows()) {
    FpMatrix x(p, r.dims[tgt], r.dims[src]);
    for (int c = 0; c < r.dims[src]; ++c) {
      auto it = std::find(sup[tgt].begin(), sup[tgt].end(), sup[src][c]);
      x(static_cast<int>(it - sup[tgt].begin()), c) = 1;
    }
    r.maps.push_back(std::move(x));
  }
  return r;
}

bool respects_mask(const Quiver& q, const ProjSum& source, const ProjSum& target, const FpMatrix& m) {
  if (m.rows() != static_cast<int>(target.size()) || m.cols() != static_cast<int>(source.size())) return false;
  for (int j = 0; j < m.rows(); ++j)
    for (int i = 0; i < m.cols(); ++i)
      if (m(j, i) != 0 && !q.reaches(target[j], source[i])) return false;
  return true;
}

FpMatrix at_vertex(const Quiver& q, const ProjSum& source, const ProjSum& target, const FpMatrix& m, int u) {
  return m.submatrix(support_at(q, target, u), support_at(q, source, u));
}

Presentation projective_presentation(const Quiver& q, const Rep& m) {
  const int p = m.p;
  const int nv = q.vertex_count();
  Presentation pres;
  // generators of the top: complements of the images of incoming arrows
  std::vector<FpVector> gens;
  for (int v = 0; v < nv; ++v) {
    Subspace rad(p, m.dims[v]);
    for (std::size_t a = 0; a < q.arrows().size(); ++a)
      if (q.arrows()[a].second == v)
        for (int c = 0; c < m.maps[a].cols(); ++c) rad.add(m.maps[a].col(c));
    for (int k : rad.non_pivots()) {
      FpVector e(m.dims[v], 0);
      e[k] = 1;
      pres.p0.push_back(v);
      gens.push_back(std::move(e));
    }
  }
  // kernel of the cover, vertex by vertex, in the coordinates of P0
  std::vector<Subspace> kernel;
  for (int u = 0; u < nv; ++u) {
    std::vector<int> sup = support_at(q, pres.p0, u);
    FpMatrix pi(p, m.dims[u], static_cast<int>(sup.size()));
    for (std::size_t c = 0; c < sup.size(); ++c) {
      FpVector img = path_map(q, m, pres.p0[sup[c]], u).apply(gens[sup[c]]);
      for (int r = 0; r < m.dims[u]; ++r) pi(r, static_cast<int>(c)) = img[r];
    }
    kernel.emplace_back(p, static_cast<int>(sup.size()), kernel_basis(pi));
  }
  // top of the kernel gives P1 and the differential
  std::vector<std::pair<int, FpVector>> cols;  // (vertex, vector over all of P0)
  for (int u = 0; u < nv; ++u) {
    std::vector<int> sup_u = support_at(q, pres.p0, u);
    Subspace rad(p, static_cast<int>(sup_u.size()));
    for (auto [s, t] : q.arrows()) {
      if (t != u) continue;
      std::vector<int> sup_s = support_at(q, pres.p0, s);
      for (const auto& k : kernel[s].basis()) {
        FpVector moved(sup_u.size(), 0);
        for (std::size_t i = 0; i < sup_s.size(); ++i) {
          auto it = std::find(sup_u.begin(), sup_u.end(), sup_s[i]);
          moved[it - sup_u.begin()] = k[i];
        }
        rad.add(moved);
      }
    }
    for (const auto& k : kernel[u].basis()) {
      if (!rad.add(k)) continue;
      FpVector full(pres.p0.size(), 0);
      for (std::size_t i = 0; i < sup_u.size(); ++i) full[sup_u[i]] = k[i];
      cols.emplace_back(u, std::move(full));
    }
  }
  pres.d = FpMatrix(p, static_cast<int>(pres.p0.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    pres.p1.push_back(cols[c].first);
    for (std::size_t r = 0; r < pres.p0.size(); ++r) pres.d(static_cast<int>(r), static_cast<int>(c)) = cols[c].second[r];
  }
  // the differential must be injective at every vertex
  for (int u = 0; u < nv; ++u) {
    FpMatrix du = at_vertex(q, pres.p1, pres.p0, pres.d, u);
    if (rank(du) != du.cols()) throw InternalIdentityMismatch("projective_presentation: kernel is not projective");
  }
  return pres;
}

namespace {

// Matrix of precomposition with d: Hom(P0, N) -> Hom(P1, N).
FpMatrix precomposition(const Quiver& q, const Presentation& pres, const Rep& n, std::vector<int>& off0,
                        std::vector<int>& off1) {
  off0.assign(pres.p0.size() + 1, 0);
  off1.assign(pres.p1.size() + 1, 0);
  for (std::size_t i = 0; i < pres.p0.size(); ++i) off0[i + 1] = off0[i] + n.dims[pres.p0[i]];
  for (std::size_t c = 0; c < pres.p1.size(); ++c) off1[c + 1] = off1[c] + n.dims[pres.p1[c]];
  FpMatrix out(n.p, off1.back(), off0.back());
  for (std::size_t c = 0; c < pres.p1.size(); ++c)
    for (std::size_t i = 0; i < pres.p0.size(); ++i) {
      int coeff = pres.d(static_cast<int>(i), static_cast<int>(c));
      if (coeff == 0) continue;
      FpMatrix block = path_map(q, n, pres.p0[i], pres.p1[c]).scaled(coeff);
      out.paste(block, off1[c], off0[i]);
    }
  return out;
}

}  // namespace

int ext1_dim_presentation(const Quiver& q, const Rep& m, const Rep& n) {
  Presentation pres = projective_presentation(q, m);
  std::vector<int> off0, off1;
  FpMatrix pc = precomposition(q, pres, n, off0, off1);
  return pc.rows() - rank(pc);
}

int ModClass::summand_count() const {
  int s = 0;
  for (auto [l, m] : parts) s += m;
  return s;
}

int ModClass::multiplicity(int label) const {
  for (auto [l, m] : parts)
    if (l == label) return m;
  return 0;
}

ModClass operator+(const ModClass& a, const ModClass& b) {
  std::map<int, int> acc;
  for (auto [l, m] : a.parts) acc[l] += m;
  for (auto [l, m] : b.parts) acc[l] += m;
  ModClass out;
  for (auto [l, m] : acc) out.parts.emplace_back(l, m);
  return out;
}

Catalog::Catalog(Quiver q, int p) : q_(std::move(q)), p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("Catalog: p must be prime");
  if (!q_.is_type_a()) throw NotTypeA("Catalog: quiver " + q_.name() + " is not of type A");
  const int n = q_.vertex_count();
  for (int lo = 0; lo < n; ++lo)
    for (int hi = n - 1; hi >= lo; --hi) intervals_.push_back({lo, hi});
  for (const auto& iv : intervals_) {
    Rep r;
    r.p = p;
    for (int v = 0; v < n; ++v) r.dims.push_back(v >= iv.lo && v <= iv.hi ? 1 : 0);
    for (auto [s, t] : q_.arrows()) {
      FpMatrix x(p, r.dims[t], r.dims[s]);
      if (r.dims[s] && r.dims[t]) x(0, 0) = 1;
      r.maps.push_back(std::move(x));
    }
    presentations_.push_back(projective_presentation(q_, r));
    reps_.push_back(std::move(r));
  }
  const int k = size();
  hom_.assign(static_cast<std::size_t>(k) * k, 0);
  ext_.assign(static_cast<std::size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      hom_[static_cast<std::size_t>(a) * k + b] = hom_dim(q_, reps_[a], reps_[b]);
      ext_[static_cast<std::size_t>(a) * k + b] = ext1_dim(q_, reps_[a], reps_[b]);
    }
  // rational inverse of the hom table
  std::vector<Rational> aug(static_cast<std::size_t>(k) * 2 * k, Rational(0));
  auto at = [&](int r, int c) -> Rational& { return aug[static_cast<std::size_t>(r) * 2 * k + c]; };
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) at(r, c) = Rational(hom(r, c));
    at(r, k + r) = Rational(1);
  }
  for (int c = 0; c < k; ++c) {
    int piv = c;
    while (piv < k && at(piv, c).is_zero()) ++piv;
    if (piv == k) throw InternalIdentityMismatch("Catalog: hom table is singular");
    for (int j = 0; j < 2 * k; ++j) std::swap(at(piv, j), at(c, j));
    Rational inv = at(c, c).inverse();
    for (int j = 0; j < 2 * k; ++j) at(c, j) *= inv;
    for (int r = 0; r < k; ++r) {
      if (r == c || at(r, c).is_zero()) continue;
      Rational f = at(r, c);
      for (int j = 0; j < 2 * k; ++j) at(r, j) -= f * at(c, j);
    }
  }
  hom_inverse_.resize(static_cast<std::size_t>(k) * k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) hom_inverse_[static_cast<std::size_t>(r) * k + c] = at(r, k + c);
}

std::string Catalog::label_name(int label) const {
  const Interval& iv = interval(label);
  return "I[" + std::to_string(iv.lo + 1) + "," + std::to_string(iv.hi + 1) + "]";
}

std::optional<int> Catalog::find_label(int lo, int hi) const {
  for (int i = 0; i < size(); ++i)
    if (intervals_[i].lo == lo && intervals_[i].hi == hi) return i;
  return std::nullopt;
}

DimVector Catalog::dim_vector(const ModClass& m) const {
  DimVector d(q_.vertex_count(), 0);
  for (auto [l, mult] : m.parts)
    for (int v = 0; v < q_.vertex_count(); ++v) d[v] += mult * reps_.at(l).dims[v];
  return d;
}

int Catalog::total_dim(const ModClass& m) const {
  int s = 0;
  for (int x : dim_vector(m)) s += x;
  return s;
}

Rep Catalog::realize(const ModClass& m) const {
  Rep r = zero_rep(q_, p_);
  for (auto [l, mult] : m.parts)
    for (int i = 0; i < mult; ++i) r = direct_sum(r, reps_.at(l));
  return r;
}

std::vector<int> Catalog::fingerprint(const Rep& m) const {
  std::vector<int> f;
  for (const auto& r : reps_) f.push_back(hom_dim(q_, m, r));
  return f;
}

ModClass Catalog::classify(const Rep& m) const {
  std::vector<int> f = fingerprint(m);
  const int k = size();
  ModClass out;
  for (int i = 0; i < k; ++i) {
    Rational s(0);
    for (int j = 0; j < k; ++j) s += Rational(f[j]) * hom_inverse_[static_cast<std::size_t>(j) * k + i];
    if (!s.is_integer() || s.sign() < 0) throw InternalIdentityMismatch("classify: fingerprint has no solution");
    long mult = s.numerator().get_si();
    if (mult > 0) out.parts.emplace_back(i, static_cast<int>(mult));
  }
  if (dim_vector(out) != m.dims) throw InternalIdentityMismatch("classify: dimension vector mismatch");
  return out;
}

std::string Catalog::to_string(const ModClass& m) const {
  if (m.is_zero()) return "0";
  std::string out;
  for (auto [l, mult] : m.parts) {
    if (!out.empty()) out += "+";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += label_name(l);
  }
  return out;
}

ModClass Catalog::parse(std::string_view text) const {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  ModClass out;
  if (s == "0" || s.empty()) return out;
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
    int lo = 0, hi = 0;
    char tail = 0;
    if (std::sscanf(term.c_str(), "I[%d,%d]%c", &lo, &hi, &tail) != 2)
      throw std::invalid_argument("cannot parse module label '" + term + "'");
    auto label = find_label(lo - 1, hi - 1);
    if (!label) throw std::invalid_argument("no indecomposable " + term);
    out = out + ModClass::single(*label, mult);
    i = j + 1;
  }
  return out;
}

std::vector<ModClass> Catalog::classes_with_dim(const DimVector& d) const {
  std::vector<ModClass> out;
  ModClass cur;
  std::function<void(int, DimVector)> rec = [&](int label, DimVector rest) {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
      out.push_back(cur);
      return;
    }
    if (label == size()) return;
    rec(label + 1, rest);
    const DimVector& dl = dim_vector(label);
    int mult = 0;
    while (true) {
      bool fits = true;
      for (std::size_t v = 0; v < rest.size(); ++v) {
        rest[v] -= dl[v];
        if (rest[v] < 0) fits = false;
      }
      if (!fits) break;
      ++mult;
      cur.parts.emplace_back(label, mult);
      rec(label + 1, rest);
      cur.parts.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModClass> Catalog::classes_up_to(int total_dim) const {
  std::vector<ModClass> out;
  ModClass cur;
  std::function<void(int, int)> rec = [&](int label, int budget) {
    if (label == size()) {
      out.push_back(cur);
      return;
    }
    rec(label + 1, budget);
    int d = 0;
    for (int x : dim_vector(label)) d += x;
    for (int mult = 1; mult * d <= budget; ++mult) {
      cur.parts.emplace_back(label, mult);
      rec(label + 1, budget - mult * d);
      cur.parts.pop_back();
    }
  };
  rec(0, total_dim);
  std::sort(out.begin(), out.end(), [&](const ModClass& a, const ModClass& b) {
    int da = this->total_dim(a), db = this->total_dim(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

namespace {

bool square_invertible(const FpMatrix& m, int p) {
  const int n = m.rows();
  if (n == 0) return true;
  int buf[64 * 64];
  if (n > 64) return rank(m) == n;
  for (int i = 0; i < n * n; ++i) buf[i] = m.data()[i];
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (buf[r * n + c]) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != c)
      for (int k = 0; k < n; ++k) std::swap(buf[piv * n + k], buf[c * n + k]);
    int inv = inv_mod(buf[c * n + c], p);
    for (int r = c + 1; r < n; ++r) {
      int f = buf[r * n + c] * inv % p;
      if (!f) continue;
      for (int k = c; k < n; ++k) buf[r * n + k] = ((buf[r * n + k] - f * buf[c * n + k]) % p + p) % p;
    }
  }
  return true;
}

}  // namespace

std::int64_t count_units(int p, const std::vector<std::vector<FpMatrix>>& basis, std::int64_t cap) {
  const int k = static_cast<int>(basis.size());
  std::int64_t total = checked_power(p, k, cap);
  if (k == 0) return 1;  // only the zero element, which is a unit iff every block is empty
  std::vector<FpMatrix> cur;
  for (const auto& b : basis[0]) cur.emplace_back(p, b.rows(), b.cols());
  auto all_invertible = [&] {
    for (const auto& b : cur)
      if (!square_invertible(b, p)) return false;
    return true;
  };
  std::vector<int> c(k, 0);
  std::int64_t units = 0;
  for (std::int64_t n = 0; n < total; ++n) {
    if (all_invertible()) ++units;
    for (int i = 0; i < k; ++i) {
      for (std::size_t b = 0; b < cur.size(); ++b) cur[b] = cur[b] + basis[i][b];
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
  return units;
}

std::int64_t gl_order(int p, int m) {
  std::int64_t pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  std::int64_t r = 1, pj = 1;
  for (int j = 0; j < m; ++j) {
    r *= pm - pj;
    pj *= p;
  }
  return r;
}

std::int64_t aut_order(const Catalog& cat, const ModClass& m) {
  int end = 0, diag = 0;
  for (auto [a, ma] : m.parts) {
    diag += ma * ma;
    for (auto [b, mb] : m.parts) end += ma * mb * cat.hom(a, b);
  }
  std::int64_t r = 1;
  for (int i = 0; i < end - diag; ++i) r *= cat.p();
  for (auto [a, ma] : m.parts) r *= gl_order(cat.p(), ma);
  return r;
}

std::int64_t aut_order_bruteforce(const Catalog& cat, const ModClass& m, std::int64_t cap) {
  Rep r = cat.realize(m);
  std::vector<std::vector<FpMatrix>> basis;
  for (auto& f : hom_space(cat.quiver(), r, r)) {
    std::vector<FpMatrix> blocks;
    for (int v = 0; v < cat.quiver().vertex_count(); ++v)
      if (r.dims[v] > 0) blocks.push_back(f.at[v]);
    basis.push_back(std::move(blocks));
  }
  return count_units(cat.p(), basis, cap);
}

namespace {

RepMorphism combine(const std::vector<RepMorphism>& basis, const FpVector& c, int p) {
  RepMorphism f = basis[0];
  for (auto& x : f.at) x = x.scaled(0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t v = 0; v < f.at.size(); ++v) f.at[v] = f.at[v] + basis[i].at[v].scaled(c[i]);
  }
  (void)p;
  return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism h;
  for (std::size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
  return h;
}

}  // namespace

bool is_indecomposable_bruteforce(const Quiver& q, const Rep& m, std::int64_t cap) {
  if (m.total_dim() == 0) return false;
  auto basis = hom_space(q, m, m);
  bool found = false;
  for_each_coords(m.p, static_cast<int>(basis.size()), cap, [&](const FpVector& c) {
    if (found) return;
    RepMorphism e = combine(basis, c, m.p);
    RepMorphism e2 = compose(e, e);
    bool idem = true, zero = true, ident = true;
    for (std::size_t v = 0; v < e.at.size(); ++v) {
      if (!(e2.at[v] == e.at[v])) idem = false;
      if (!e.at[v].is_zero()) zero = false;
      if (!(e.at[v] == FpMatrix::identity(m.p, m.dims[v]))) ident = false;
    }
    if (idem && !zero && !ident) found = true;
  });
  return !found;
}

bool isomorphic_bruteforce(const Quiver& q, const Rep& m, const Rep& n, std::int64_t cap) {
  if (m.dims != n.dims) return false;
  auto basis = hom_space(q, m, n);
  if (basis.empty()) return m.total_dim() == 0;
  bool found = false;
  for_each_coords(m.p, static_cast<int>(basis.size()), cap, [&](const FpVector& c) {
    if (found) return;
    RepMorphism f = combine(basis, c, m.p);
    for (std::size_t v = 0; v < f.at.size(); ++v)
      if (rank(f.at[v]) != m.dims[v]) return;
    found = true;
  });
  return found;
}

std::vector<Rep> indecomposables_bruteforce(const Quiver& q, int p, const DimVector& dim_cap, std::int64_t cap) {
  std::vector<Rep> found;
  const int nv = q.vertex_count();
  DimVector d(nv, 0);
  while (true) {
    // advance the dimension vector odometer
    int i = 0;
    while (i < nv && d[i] == dim_cap[i]) d[i++] = 0;
    if (i == nv) break;
    ++d[i];
    int entries = 0;
    for (auto [s, t] : q.arrows()) entries += d[s] * d[t];
    for_each_coords(p, entries, cap, [&](const FpVector& c) {
      Rep r;
      r.p = p;
      r.dims = d;
      int k = 0;
      for (auto [s, t] : q.arrows()) {
        FpMatrix x(p, d[t], d[s]);
        for (int rr = 0; rr < d[t]; ++rr)
          for (int cc = 0; cc < d[s]; ++cc) x(rr, cc) = c[k++];
        r.maps.push_back(std::move(x));
      }
      if (!is_indecomposable_bruteforce(q, r, cap)) return;
      for (const auto& other : found)
        if (isomorphic_bruteforce(q, r, other, cap)) return;
      found.push_back(std::move(r));
    });
  }
  return found;
}

ExtSpace::ExtSpace(const Catalog& cat, const ModClass& sub, const ModClass& quot)
    : cat_(cat), sub_(cat.realize(sub)), pres_(projective_presentation(cat.quiver(), cat.realize(quot))) {
  std::vector<int> off0, off1;
  FpMatrix pc = precomposition(cat.quiver(), pres_, sub_, off0, off1);
  ambient_ = pc.rows();
  Subspace image(cat.p(), ambient_);
  for (int c = 0; c < pc.cols(); ++c) image.add(pc.col(c));
  for (int k : image.non_pivots()) {
    FpVector e(ambient_, 0);
    e[k] = 1;
    complement_.push_back(std::move(e));
  }
}

FpVector ExtSpace::representative(const FpVector& coords) const {
  FpVector out(ambient_, 0);
  for (std::size_t i = 0; i < complement_.size(); ++i)
    for (int k = 0; k < ambient_; ++k) out[k] = (out[k] + coords[i] * complement_[i][k]) % cat_.p();
  return out;
}

ModClass ExtSpace::middle(const FpVector& coords) const {
  const Quiver& q = cat_.quiver();
  const int p = cat_.p();
  FpVector xi = representative(coords);
  // xi assigns y_c in sub at vertex p1[c]
  std::vector<int> off(pres_.p1.size() + 1, 0);
  for (std::size_t c = 0; c < pres_.p1.size(); ++c) off[c + 1] = off[c] + sub_.dims[pres_.p1[c]];
  Rep ambient = direct_sum(sub_, projective_rep(q, p, pres_.p0));
  std::vector<Subspace> rel;
  for (int u = 0; u < q.vertex_count(); ++u) {
    Subspace s(p, ambient.dims[u]);
    std::vector<int> sup0 = support_at(q, pres_.p0, u);
    for (int c : support_at(q, pres_.p1, u)) {
      FpVector y(xi.begin() + off[c], xi.begin() + off[c + 1]);
      FpVector top = path_map(q, sub_, pres_.p1[c], u).apply(y);
      FpVector v(ambient.dims[u], 0);
      for (int k = 0; k < sub_.dims[u]; ++k) v[k] = top[k];
      for (std::size_t i = 0; i < sup0.size(); ++i)
        v[sub_.dims[u] + i] = (p - pres_.d(sup0[i], c)) % p;
      s.add(v);
    }
    rel.push_back(std::move(s));
  }
  return cat_.classify(quotient_rep(q, ambient, rel));
}

ModClass middle_of_extension(const Catalog& cat, const ModClass& sub, const ModClass& quot, const FpVector& coords) {
  return ExtSpace(cat, sub, quot).middle(coords);
}

namespace {

// All subspaces of F_p^n of dimension k, as echelon bases.
std::vector<Subspace> grassmannian(int p, int n, int k, std::int64_t cap) {
  std::vector<Subspace> out;
  std::vector<int> piv(k);
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      std::vector<std::pair<int, int>> free;
      std::vector<char> is_piv(n, 0);
      for (int c : piv) is_piv[c] = 1;
      for (int r = 0; r < k; ++r)
        for (int c = piv[r] + 1; c < n; ++c)
          if (!is_piv[c]) free.emplace_back(r, c);
      for_each_coords(p, static_cast<int>(free.size()), cap, [&](const FpVector& vals) {
        std::vector<FpVector> rows(k, FpVector(n, 0));
        for (int r = 0; r < k; ++r) rows[r][piv[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = vals[f];
        out.emplace_back(p, n, rows);
        if (static_cast<std::int64_t>(out.size()) > cap) throw EnumerationTooLarge("grassmannian exceeds cap");
      });
      return;
    }
    for (int c = start; c <= n - (k - idx); ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

}  // namespace

std::int64_t hall_number(const Catalog& cat, const ModClass& l, const ModClass& x, const ModClass& y,
                         std::int64_t cap) {
  const Quiver& q = cat.quiver();
  DimVector dl = cat.dim_vector(l), dx = cat.dim_vector(x), dy = cat.dim_vector(y);
  for (int v = 0; v < q.vertex_count(); ++v)
    if (dl[v] != dx[v] + dy[v]) return 0;
  Rep rl = cat.realize(l);
  std::vector<std::vector<Subspace>> choices;
  std::int64_t total = 1;
  for (int v = 0; v < q.vertex_count(); ++v) {
    choices.push_back(grassmannian(cat.p(), dl[v], dx[v], cap));
    total *= static_cast<std::int64_t>(choices.back().size());
    if (total > cap) throw EnumerationTooLarge("hall_number: subspace enumeration exceeds cap");
  }
  std::int64_t count = 0;
  std::vector<std::size_t> idx(q.vertex_count(), 0);
  std::vector<Subspace> u;
  for (std::int64_t n = 0; n < total; ++n) {
    u.clear();
    for (int v = 0; v < q.vertex_count(); ++v) u.push_back(choices[v][idx[v]]);
    if (is_closed(q, rl, u) && cat.classify(sub_rep(q, rl, u)) == x && cat.classify(quotient_rep(q, rl, u)) == y)
      ++count;
    for (int v = 0; v < q.vertex_count(); ++v) {
      if (++idx[v] < choices[v].size()) break;
      idx[v] = 0;
    }
  }
  return count;
}

Rational hall_number_via_monos(const Catalog& cat, const ModClass& l, const ModClass& x, const ModClass& y,
                               std::int64_t cap) {
  const Quiver& q = cat.quiver();
  Rep rl = cat.realize(l), rx = cat.realize(x);
  DimVector dl = cat.dim_vector(l), dx = cat.dim_vector(x), dy = cat.dim_vector(y);
  for (int v = 0; v < q.vertex_count(); ++v)
    if (dl[v] != dx[v] + dy[v]) return Rational(0);
  auto basis = hom_space(q, rx, rl);
  std::int64_t count = 0;
  if (basis.empty()) {
    // only the zero map, a monomorphism iff X = 0
    if (rx.total_dim() == 0 && cat.classify(rl) == y) count = 1;
  } else {
    for_each_coords(cat.p(), static_cast<int>(basis.size()), cap, [&](const FpVector& c) {
      RepMorphism f = combine(basis, c, cat.p());
      std::vector<Subspace> img;
      for (int v = 0; v < q.vertex_count(); ++v) {
        if (rank(f.at[v]) != dx[v]) return;
        Subspace s(cat.p(), dl[v]);
        for (int k = 0; k < f.at[v].cols(); ++k) s.add(f.at[v].col(k));
        img.push_back(std::move(s));
      }
      if (cat.classify(quotient_rep(q, rl, img)) == y) ++count;
    });
  }
  return Rational(count) / Rational(aut_order(cat, x));
}

}  // namespace hallalg
