#pragma once

// Derived Hall algebra of a type-A quiver and its Drinfeld dual.
//
//   F_{XY}^L = |Hom(L,Y)_{X[1]}| / |Aut Y| * {L,Y} / {Y,Y}
//            = |Hom(X,L)_Y| / |Aut X| * {X,L} / {X,X}
//   h_L^{XY} = |Hom(Y,X[1])_{L[1]}| * {Y,X[1]}
//   t_X      = 1 / (|Aut X| {X,X})

#include <map>
#include <memory>
#include <utility>

#include "hallalg/derived_cat.hpp"
#include "hallalg/hall_core.hpp"

namespace hallalg {

struct Prop25Values {
  Rational via_hom_out;  // |Hom(M,L)_{Z[1]}| / |Aut L| * {M,L} / ({Z,L}{L,L})
  Rational via_hom_in;   // |Hom(Z,M)_L| / |Aut Z| * {Z,M} / ({Z,L}{Z,Z})
  Rational orbit_sum;    // sum over triangle orbits of |End L1| / |Aut L1|
  std::size_t orbits = 0;

  bool holds() const { return via_hom_out == orbit_sum && via_hom_in == orbit_sum; }
};

class DerivedHall {
 public:
  using Table = std::map<DObj, Rational>;

  explicit DerivedHall(std::shared_ptr<const DerivedCategory> dc);

  const DerivedCategory& category() const { return *dc_; }
  std::shared_ptr<const DerivedCategory> category_ptr() const { return dc_; }

  Rational t(const DObj& x) const;

  // The two defining expressions of F, each from a fresh enumeration.
  Rational F_via_quotient(const DObj& x, const DObj& y, const DObj& l) const;
  Rational F_via_sub(const DObj& x, const DObj& y, const DObj& l) const;
  // Both expressions; throws InternalIdentityMismatch when they differ.
  Rational F_const(const DObj& x, const DObj& y, const DObj& l) const;
  Rational h_const(const DObj& x, const DObj& y, const DObj& l) const;

  // u_X u_Y, supported on the fibers of h : Y -> X[1]; F is taken from the
  // expression with the smaller Hom space.
  Table product(const DObj& x, const DObj& y) const;
  // v_X * v_Y
  Table dual_product(const DObj& x, const DObj& y) const;

  // h t_X t_Y == F t_L, every factor recomputed.
  bool rp_check(const DObj& x, const DObj& y, const DObj& l) const;
  // Phi(v_X * v_Y) == Phi(v_X) Phi(v_Y) with Phi(v_X) = t_X^{-1} u_X.
  bool ks_phi_check(const DObj& x, const DObj& y) const;

  Prop25Values prop25(const DObj& z, const DObj& l, const DObj& m) const;

  // Products memoized inside the returned object.
  BasedAlgebra<DObj, Rational> algebra() const;

 private:
  const std::map<DObj, std::int64_t>& strata(const DObj& x, const DObj& y) const;

  std::shared_ptr<const DerivedCategory> dc_;
  mutable std::map<std::pair<DObj, DObj>, std::map<DObj, std::int64_t>> strata_;
};

}  // namespace hallalg
