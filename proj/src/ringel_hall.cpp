#include "hallalg/ringel_hall.hpp"

namespace hallalg {

int hom_dim(const Catalog& cat, const ModClass& a, const ModClass& b) {
  int s = 0;
  for (auto [x, mx] : a.parts)
    for (auto [y, my] : b.parts) s += mx * my * cat.hom(x, y);
  return s;
}

RingelHall::RingelHall(std::shared_ptr<const Catalog> cat, bool swap_roles, std::int64_t cap)
    : cat_(std::move(cat)), swap_roles_(swap_roles), cap_(cap) {}

RingelHall::Table RingelHall::product(const ModClass& a, const ModClass& b) const {
  Table out;
  DimVector d = cat_->dim_vector(a + b);
  for (const auto& l : cat_->classes_with_dim(d)) {
    std::int64_t g = hall_number(*cat_, l, a, b, cap_);
    if (g != 0) out.emplace(l, Rational(g));
  }
  return out;
}

RingelHall::Table RingelHall::dual_product(const ModClass& a, const ModClass& b) const {
  const ModClass& sub = swap_roles_ ? b : a;
  const ModClass& quot = swap_roles_ ? a : b;
  ExtSpace ext(*cat_, sub, quot);
  std::map<ModClass, std::int64_t> counts;
  for_each_coords(cat_->p(), ext.dim(), cap_, [&](const FpVector& c) { ++counts[ext.middle(c)]; });
  Rational hom = qpow(hom_dim(*cat_, quot, sub), cat_->p());
  Table out;
  for (auto [l, n] : counts) out.emplace(l, Rational(n) / hom);
  return out;
}

Rational RingelHall::g(const ModClass& a, const ModClass& b, const ModClass& l) const {
  return Rational(hall_number(*cat_, l, a, b, cap_));
}

Rational RingelHall::h(const ModClass& a, const ModClass& b, const ModClass& l) const {
  Table t = dual_product(a, b);
  auto it = t.find(l);
  return it == t.end() ? Rational(0) : it->second;
}

std::map<std::pair<ModClass, ModClass>, Rational> RingelHall::green_delta(const ModClass& l) const {
  std::map<std::pair<ModClass, ModClass>, Rational> out;
  DimVector dl = cat_->dim_vector(l);
  // every split dl = da + db
  DimVector da(dl.size(), 0);
  while (true) {
    DimVector db(dl.size());
    for (std::size_t v = 0; v < dl.size(); ++v) db[v] = dl[v] - da[v];
    for (const auto& a : cat_->classes_with_dim(da))
      for (const auto& b : cat_->classes_with_dim(db)) {
        Rational hv = h(a, b, l);
        if (!hv.is_zero()) out.emplace(std::make_pair(a, b), hv);
      }
    std::size_t i = 0;
    while (i < da.size() && da[i] == dl[i]) da[i++] = 0;
    if (i == da.size()) break;
    ++da[i];
  }
  return out;
}

bool RingelHall::rp_check(const ModClass& a, const ModClass& b, const ModClass& l) const {
  Rational lhs = h(a, b, l);
  Rational rhs = g(a, b, l) * Rational(aut_order(*cat_, a)) * Rational(aut_order(*cat_, b)) /
                 Rational(aut_order(*cat_, l));
  return lhs == rhs;
}

BasedAlgebra<ModClass, Rational> RingelHall::algebra() const {
  BasedAlgebra<ModClass, Rational> alg;
  alg.unit = ModClass{};
  alg.structure = memoize<ModClass, Table>([this](const ModClass& a, const ModClass& b) { return product(a, b); });
  alg.dual_structure =
      memoize<ModClass, Table>([this](const ModClass& a, const ModClass& b) { return dual_product(a, b); });
  alg.weight = [this](const ModClass& a) { return weight(a); };
  return alg;
}

}  // namespace hallalg
