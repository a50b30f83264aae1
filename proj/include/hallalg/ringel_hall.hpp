#pragma once

#include <map>
#include <memory>
#include <utility>

#include "hallalg/hall_core.hpp"
#include "hallalg/quiver.hpp"

namespace hallalg {

int hom_dim(const Catalog& cat, const ModClass& a, const ModClass& b);

// Ringel-Hall algebra of a type-A quiver over F_p.
//
// The dual structure constant h_l^{ab} counts extensions 0 -> a -> l -> b -> 0
// (a is the sub) and divides by |Hom(b, a)|. With `swap_roles` set, the roles
// are exchanged: extensions 0 -> b -> l -> a -> 0 divided by |Hom(a, b)|.
class RingelHall {
 public:
  using Table = std::map<ModClass, Rational>;

  explicit RingelHall(std::shared_ptr<const Catalog> cat, bool swap_roles = false, std::int64_t cap = kDefaultCap);

  const Catalog& catalog() const { return *cat_; }

  // {l : g_{ab}^l} by submodule enumeration over all l of the right dimension.
  Table product(const ModClass& a, const ModClass& b) const;
  // {l : h_l^{ab}} by enumerating the extension space.
  Table dual_product(const ModClass& a, const ModClass& b) const;
  Rational weight(const ModClass& a) const { return Rational(1) / Rational(aut_order(*cat_, a)); }

  Rational g(const ModClass& a, const ModClass& b, const ModClass& l) const;
  Rational h(const ModClass& a, const ModClass& b, const ModClass& l) const;

  std::map<std::pair<ModClass, ModClass>, Rational> green_delta(const ModClass& l) const;

  // h_l^{ab} == g_{ab}^l a_a a_b / a_l
  bool rp_check(const ModClass& a, const ModClass& b, const ModClass& l) const;

  // Products are memoized inside the returned object.
  BasedAlgebra<ModClass, Rational> algebra() const;

 private:
  std::shared_ptr<const Catalog> cat_;
  bool swap_roles_;
  std::int64_t cap_;
};

}  // namespace hallalg
