#include "hallalg/derived_hall.hpp"

namespace hallalg {

namespace {

std::int64_t lookup_count(const std::map<DObj, std::int64_t>& m, const DObj& k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

DerivedHall::DerivedHall(std::shared_ptr<const DerivedCategory> dc) : dc_(std::move(dc)) {}

Rational DerivedHall::t(const DObj& x) const {
  return (Rational(dc_->daut_order(x)) * dc_->braces(x, x)).inverse();
}

Rational DerivedHall::F_via_quotient(const DObj& x, const DObj& y, const DObj& l) const {
  std::int64_t n = dc_->hom_with_cone_count(l, y, x.shifted(1));
  return Rational(n) / Rational(dc_->daut_order(y)) * dc_->braces(l, y) / dc_->braces(y, y);
}

Rational DerivedHall::F_via_sub(const DObj& x, const DObj& y, const DObj& l) const {
  std::int64_t n = dc_->hom_with_cone_count(x, l, y);
  return Rational(n) / Rational(dc_->daut_order(x)) * dc_->braces(x, l) / dc_->braces(x, x);
}

Rational DerivedHall::F_const(const DObj& x, const DObj& y, const DObj& l) const {
  Rational a = F_via_quotient(x, y, l);
  Rational b = F_via_sub(x, y, l);
  if (a != b)
    throw InternalIdentityMismatch("F constant: the two expressions differ for " + dc_->to_string(x) + ", " +
                                   dc_->to_string(y) + ", " + dc_->to_string(l));
  return a;
}

Rational DerivedHall::h_const(const DObj& x, const DObj& y, const DObj& l) const {
  DObj x1 = x.shifted(1);
  return Rational(dc_->hom_with_cone_count(y, x1, l.shifted(1))) * dc_->braces(y, x1);
}

const std::map<DObj, std::int64_t>& DerivedHall::strata(const DObj& x, const DObj& y) const {
  auto key = std::make_pair(x, y);
  auto it = strata_.find(key);
  if (it != strata_.end()) return it->second;
  return strata_.emplace(std::move(key), dc_->cone_strata(x, y)).first->second;
}

DerivedHall::Table DerivedHall::product(const DObj& x, const DObj& y) const {
  Table out;
  for (const auto& [c, n] : strata(y, x.shifted(1))) {
    DObj l = c.shifted(-1);
    Rational f(0);
    if (dc_->hom_dim(x, l) <= dc_->hom_dim(l, y))
      f = Rational(lookup_count(strata(x, l), y)) / Rational(dc_->daut_order(x)) * dc_->braces(x, l) /
          dc_->braces(x, x);
    else
      f = Rational(lookup_count(strata(l, y), x.shifted(1))) / Rational(dc_->daut_order(y)) * dc_->braces(l, y) /
          dc_->braces(y, y);
    if (!f.is_zero()) out.emplace(l, f);
  }
  return out;
}

DerivedHall::Table DerivedHall::dual_product(const DObj& x, const DObj& y) const {
  DObj x1 = x.shifted(1);
  Rational br = dc_->braces(y, x1);
  Table out;
  for (const auto& [c, n] : strata(y, x1)) out.emplace(c.shifted(-1), Rational(n) * br);
  return out;
}

bool DerivedHall::rp_check(const DObj& x, const DObj& y, const DObj& l) const {
  return h_const(x, y, l) * t(x) * t(y) == F_const(x, y, l) * t(l);
}

bool DerivedHall::ks_phi_check(const DObj& x, const DObj& y) const {
  // left: Phi(v_X * v_Y) = sum_L h_L t_L^{-1} u_L; right: t_X^{-1} t_Y^{-1} sum_L F_L u_L
  AlgElt<DObj, Rational> left, right;
  DObj x1 = x.shifted(1);
  Rational br = dc_->braces(y, x1);
  for (const auto& [c, n] : dc_->cone_strata(y, x1)) {
    DObj l = c.shifted(-1);
    add_term(left, l, Rational(n) * br / t(l));
    add_term(right, l, F_const(x, y, l) / (t(x) * t(y)));
  }
  return left == right;
}

Prop25Values DerivedHall::prop25(const DObj& z, const DObj& l, const DObj& m) const {
  const DerivedCategory& dc = *dc_;
  Prop25Values v;
  Rational zl = dc.braces(z, l);
  v.via_hom_out = Rational(dc.hom_with_cone_count(m, l, z.shifted(1))) / Rational(dc.daut_order(l)) *
                  dc.braces(m, l) / (zl * dc.braces(l, l));
  v.via_hom_in = Rational(dc.hom_with_cone_count(z, m, l)) / Rational(dc.daut_order(z)) * dc.braces(z, m) /
                 (zl * dc.braces(z, z));
  auto orbits = dc.triangle_orbits(z, l, m);
  v.orbits = orbits.size();
  for (const auto& o : orbits)
    v.orbit_sum += Rational(dc.end_order(o.iso.l1)) / Rational(dc.daut_order(o.iso.l1));
  return v;
}

BasedAlgebra<DObj, Rational> DerivedHall::algebra() const {
  BasedAlgebra<DObj, Rational> alg;
  alg.unit = DObj{};
  alg.structure = memoize<DObj, Table>([this](const DObj& a, const DObj& b) { return product(a, b); });
  alg.dual_structure = memoize<DObj, Table>([this](const DObj& a, const DObj& b) { return dual_product(a, b); });
  alg.weight = [this](const DObj& a) { return t(a); };
  return alg;
}

}  // namespace hallalg
