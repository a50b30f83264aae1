#include "hallalg/motivic.hpp"

#include <algorithm>
#include <set>

namespace hallalg {

namespace {

void add_to(MotElt& e, const DObj& k, const RatFuncL& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

// n : L -> Z[1] of the triangle Z -l-> M -> L -n-> Z[1]
ChainMap third_map(const DerivedCategory& dc, const DObj& z, const DObj& m, const ChainMap& l) {
  const int p = dc.p();
  const Complex& zc = dc.carrier(z).cx;
  Complex c = cone_complex(zc, dc.carrier(m).cx, l, p);
  HomotopyEquivalence mm = dc.minimal_model(c);
  Complex zshift = shift_complex(zc, 1);
  ChainMap pi = zero_map(c, zshift, p);
  for (int k = pi.lo; k <= pi.hi(); ++k)
    for (int i = 0; i < zshift.size_at(k); ++i) pi.comp[k - pi.lo](i, i) = 1;
  return compose(pi, mm.from_carrier, p);
}

int image_rank(const HomSpace& target, const std::vector<ChainMap>& maps, int p) {
  if (maps.empty() || target.dim() == 0) return 0;
  FpMatrix m(p, static_cast<int>(maps.size()), target.dim());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    FpVector c = target.coords(maps[i]);
    for (int j = 0; j < target.dim(); ++j) m(static_cast<int>(i), j) = c[j];
  }
  return rank(m);
}

}  // namespace

PolyL AutMotive::poly() const {
  PolyL out = PolyL::monomial(t);
  for (const auto& [d, s] : blocks)
    for (int j = 1; j <= s; ++j) out = out * (PolyL::monomial(j * d) - PolyL(1));
  return out;
}

const std::vector<int>& Motivic::default_fit_primes() {
  static const std::vector<int> primes{2, 3, 5, 11, 13, 17, 19};
  return primes;
}

Motivic::Motivic(Quiver q, std::vector<int> fit_primes, int held_out, int window, std::int64_t cap)
    : quiver_(std::move(q)), fit_primes_(std::move(fit_primes)), held_out_(held_out), window_(window), cap_(cap) {
  if (fit_primes_.empty()) throw std::invalid_argument("motivic: no primes to fit with");
  if (std::find(fit_primes_.begin(), fit_primes_.end(), held_out_) != fit_primes_.end())
    throw std::invalid_argument("motivic: the held-out prime is also used for fitting");
}

const DerivedCategory& Motivic::category(int p) const {
  auto it = categories_.find(p);
  if (it != categories_.end()) return *it->second;
  auto dc = std::make_shared<DerivedCategory>(std::make_shared<Catalog>(quiver_, p), window_, cap_);
  return *categories_.emplace(p, std::move(dc)).first->second;
}

const DerivedHall& Motivic::hall(int p) const {
  auto it = halls_.find(p);
  if (it != halls_.end()) return *it->second;
  category(p);
  return *halls_.emplace(p, std::make_shared<DerivedHall>(categories_.at(p))).first->second;
}

AutMotive Motivic::upsilon_aut(const DObj& x) const {
  // End X = radical + prod_i M_{n_i}(k); Aut X = radical x prod_i GL_{n_i}
  AutMotive out;
  out.t = base().hom_dim(x, x);
  for (const auto& term : x.terms()) {
    out.t -= term.mult * term.mult;
    out.t += term.mult * (term.mult - 1) / 2;
    out.blocks.emplace_back(1, term.mult);
  }
  return out;
}

RatFuncL Motivic::braces(const DObj& x, const DObj& y) const { return RatFuncL::L_pow(base().braces_exponent(x, y)); }

CountingPolynomial Motivic::count_poly(const StratumSpec& s, int degree_bound) const {
  CountingPolynomial out;
  out.degree_bound = degree_bound;
  std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (fit_primes_.size() < need)
    throw InterpolationFailure("motivic: degree bound " + std::to_string(degree_bound) + " needs " +
                               std::to_string(need) + " primes");
  out.primes.assign(fit_primes_.begin(), fit_primes_.begin() + static_cast<std::ptrdiff_t>(need));
  out.held_out = {held_out_};
  std::vector<std::pair<Rational, Rational>> samples;
  auto count = [&](int p) {
    const DerivedCategory& dc = category(p);
    if (!s.cone) return Rational(qpow(dc.hom_dim(s.a, s.b), p));
    return Rational(dc.hom_with_cone_count(s.a, s.b, *s.cone));
  };
  for (int p : out.primes) samples.emplace_back(Rational(p), count(p));
  samples.emplace_back(Rational(held_out_), count(held_out_));
  out.poly = interpolate_poly(samples, degree_bound);
  return out;
}

const std::map<DObj, CountingPolynomial>& Motivic::strata(const DObj& a, const DObj& b) const {
  auto key = std::make_pair(a, b);
  auto it = strata_.find(key);
  if (it != strata_.end()) return it->second;
  int d = base().hom_dim(a, b);
  std::size_t need = static_cast<std::size_t>(d) + 1;
  if (fit_primes_.size() < need)
    throw InterpolationFailure("motivic: degree bound " + std::to_string(d) + " needs " + std::to_string(need) +
                               " primes");
  std::vector<int> primes(fit_primes_.begin(), fit_primes_.begin() + static_cast<std::ptrdiff_t>(need));
  primes.push_back(held_out_);
  std::vector<std::map<DObj, std::int64_t>> counts;
  std::set<DObj> cones;
  for (int p : primes) {
    counts.push_back(category(p).cone_strata(a, b));
    for (const auto& [c, n] : counts.back()) cones.insert(c);
  }
  std::map<DObj, CountingPolynomial> out;
  for (const auto& c : cones) {
    std::vector<std::pair<Rational, Rational>> samples;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      auto f = counts[i].find(c);
      samples.emplace_back(Rational(primes[i]), Rational(f == counts[i].end() ? 0 : f->second));
    }
    CountingPolynomial cp;
    cp.degree_bound = d;
    cp.primes.assign(primes.begin(), primes.end() - 1);
    cp.held_out = {held_out_};
    try {
      cp.poly = interpolate_poly(samples, d);
    } catch (const InterpolationFailure& e) {
      throw InterpolationFailure("motivic: stratum " + base().to_string(c) + " of Hom(" + base().to_string(a) +
                                 ", " + base().to_string(b) + ") is not polynomial: " + e.what());
    }
    out.emplace(c, std::move(cp));
  }
  return strata_.emplace(std::move(key), std::move(out)).first->second;
}

MotElt Motivic::hall_mul(const MotElt& x, const MotElt& y) const {
  MotElt out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      DObj a1 = a.shifted(1);
      RatFuncL c = ca * cb * braces(b, a1);
      for (const auto& [e, cp] : strata(b, a1)) add_to(out, e.shifted(-1), c * RatFuncL(cp.poly));
    }
  return out;
}

MotElt Motivic::t_mul(const MotElt& x, const MotElt& y) const {
  MotElt out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      DObj a1 = a.shifted(1);
      for (const auto& [e, n] : strata(b, a1)) {
        DObj l = e.shifted(-1);
        // the two expressions agree by the motivic RP identity; count in the smaller Hom space
        if (base().hom_dim(a, l) <= base().hom_dim(l, b)) {
          const auto& s = strata(a, l);
          auto it = s.find(b);
          if (it == s.end()) continue;
          add_to(out, l, ca * cb * braces(a, l) * RatFuncL(it->second.poly) / t_inverse(a));
        } else {
          const auto& s = strata(l, b);
          auto it = s.find(a1);
          if (it == s.end()) continue;
          add_to(out, l, ca * cb * braces(l, b) * RatFuncL(it->second.poly) / t_inverse(b));
        }
      }
    }
  return out;
}

RatFuncL Motivic::t_inverse(const DObj& x) const { return RatFuncL(upsilon_aut(x).poly()) * braces(x, x); }

MotElt Motivic::phi(const MotElt& x) const {
  MotElt out;
  for (const auto& [a, c] : x) add_to(out, a, c * t_inverse(a));
  return out;
}

bool Motivic::phi_check(const MotElt& x, const MotElt& y) const {
  return phi(hall_mul(x, y)) == t_mul(phi(x), phi(y));
}

std::pair<RatFuncL, RatFuncL> Motivic::rp_sides(const DObj& z, const DObj& l, const DObj& m) const {
  const DerivedCategory& dc = base();
  CountingPolynomial in = count_poly(StratumSpec{z, m, l}, dc.hom_dim(z, m));
  CountingPolynomial out = count_poly(StratumSpec{m, l, z.shifted(1)}, dc.hom_dim(m, l));
  RatFuncL zl = braces(z, l);
  RatFuncL lhs = RatFuncL(in.poly) * braces(z, m) / (RatFuncL(upsilon_aut(z).poly()) * zl * braces(z, z));
  RatFuncL rhs = RatFuncL(out.poly) * braces(m, l) / (RatFuncL(upsilon_aut(l).poly()) * zl * braces(l, l));
  return {lhs, rhs};
}

LemmaSpaceReport Motivic::lemma_space(const DObj& z, const DObj& m, const DObj& l) const {
  LemmaSpaceReport r;
  const DObj z1 = z.shifted(1);
  int bound_l = base().hom_dim(l, l), bound_z = base().hom_dim(z1, z1);
  int bound = std::max(bound_l, bound_z);
  std::size_t need = static_cast<std::size_t>(bound) + 1;
  if (fit_primes_.size() < need) throw InterpolationFailure("motivic: not enough primes for the lemma spaces");
  std::vector<int> primes(fit_primes_.begin(), fit_primes_.begin() + static_cast<std::ptrdiff_t>(need));
  primes.push_back(held_out_);
  std::vector<std::pair<Rational, Rational>> samples_l, samples_z;
  bool uniform = true;
  for (int p : primes) {
    const DerivedCategory& dc = category(p);
    const HomSpace& tz = dc.hom(z1, l);
    const HomSpace& ll = dc.hom(l, l);
    const HomSpace& zz = dc.hom(z1, z1);
    std::vector<ChainMap> ts;
    for (int i = 0; i < tz.dim(); ++i) {
      FpVector e(static_cast<std::size_t>(tz.dim()), 0);
      e[static_cast<std::size_t>(i)] = 1;
      ts.push_back(tz.element(e));
    }
    int dim_l = -1, dim_z = -1;
    dc.for_each_class(z, m, [&](const FpVector&, const ChainMap& lm) {
      if (dc.cone(z, m, lm) != l) return;
      ++r.morphisms;
      ChainMap n = third_map(dc, z, m, lm);
      std::vector<ChainMap> tn, nt;
      for (const auto& t : ts) {
        tn.push_back(compose(t, n, p));
        nt.push_back(compose(n, t, p));
      }
      int a = image_rank(ll, tn, p), b = image_rank(zz, nt, p);
      if ((dim_l >= 0 && a != dim_l) || (dim_z >= 0 && b != dim_z)) uniform = false;
      dim_l = a;
      dim_z = b;
    });
    if (dim_l < 0) throw std::invalid_argument("lemma_space: no morphism " + base().to_string(z) + " -> " +
                                               base().to_string(m) + " with cone " + base().to_string(l));
    if (p == primes.front()) {
      r.end_l_dim = dim_l;
      r.end_z_dim = dim_z;
    }
    samples_l.emplace_back(Rational(p), qpow(dim_l, p));
    samples_z.emplace_back(Rational(p), qpow(dim_z, p));
  }
  auto fill = [&](CountingPolynomial& cp, const std::vector<std::pair<Rational, Rational>>& s) {
    cp.degree_bound = bound;
    cp.primes.assign(primes.begin(), primes.end() - 1);
    cp.held_out = {held_out_};
    cp.poly = interpolate_poly(s, bound);
  };
  fill(r.end_l, samples_l);
  fill(r.end_z, samples_z);
  RatFuncL zl = braces(z, l);
  r.end_l_expected = braces(m, l) / (zl * braces(l, l));
  r.end_z_expected = braces(z, m) / (zl * braces(z, z));
  if (!uniform) r.end_l_dim = r.end_z_dim = -1;
  return r;
}

bool Motivic::specializes(const DObj& x, const DObj& y, int p) const {
  const DerivedHall& dh = hall(p);
  Rational q(p);
  auto same = [&](const MotElt& mot, const DerivedHall::Table& t) {
    if (mot.size() != t.size()) return false;
    for (const auto& [k, c] : mot) {
      auto it = t.find(k);
      if (it == t.end() || c.eval(q) != it->second) return false;
    }
    return true;
  };
  return same(hall_mul(mot_basis(x), mot_basis(y)), dh.dual_product(x, y)) &&
         same(t_mul(mot_basis(x), mot_basis(y)), dh.product(x, y));
}

std::string Motivic::to_string(const MotElt& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : x) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*" + base().to_string(k);
  }
  return out;
}

MotElt mot_basis(const DObj& x) { return MotElt{{x, RatFuncL(1)}}; }

}  // namespace hallalg
