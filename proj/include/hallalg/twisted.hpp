#pragma once

// Extended twisted derived Hall algebras over Q(v), v^2 = q.
//
//   (K_a u_X)(K_b u_Y)   = v^{<X,Y> - (b,X)} K_{a+b} u_X u_Y            plus side
//   (K_a u-_X)(K_b u-_Y) = v^{<X,Y> + (b,X)} K_{a+b} u-_X u-_Y          minus side
//   (K_a u_X, K_b u-_Y)  = v^{-(a,b) - (b,X) + (a,Y)} [X = Y] t_X
//   delta(K_c u_L)       = sum v^{<X,Y>} h_L^{XY} K_c u_X K_[Y] (x) K_c u_Y
//   (K_a th_X)(K_b th_Y) = v^{(b,X) - 2(a,b)} sum v^{<X,Y>} h_L^{XY} K_{a+b} th_L
//   Phi(K_a th_X)        = v^{(a,a)} t_X^{-1} K_a u-_X
//
// u_X K_b is rewritten as v^{-(b,X)} K_b u_X.

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "hallalg/derived_hall.hpp"

namespace hallalg {

using KClass = std::vector<int>;

struct EtKey {
  KClass k;
  DObj x;
  auto operator<=>(const EtKey&) const = default;
};

using EtElt = std::map<EtKey, QuadExt>;

enum class EtSide { plus, minus };

struct EtTensorKey {
  EtKey left, right;
  auto operator<=>(const EtTensorKey&) const = default;
};
using EtTensor = std::map<EtTensorKey, QuadExt>;

class TwistedExt {
 public:
  explicit TwistedExt(std::shared_ptr<const DerivedHall> dh);

  const DerivedHall& hall() const { return *dh_; }
  const DerivedCategory& category() const { return dh_->category(); }
  long q() const { return dh_->category().p(); }

  KClass kclass_of(const DObj& x) const;
  // From the Cartan data of the quiver.
  int euler_form(const KClass& a, const KClass& b) const;
  int sym_form(const KClass& a, const KClass& b) const { return euler_form(a, b) + euler_form(b, a); }
  // sum_i (-1)^i dim Hom(X, Y[i])
  int euler_form_hom(const DObj& x, const DObj& y) const;

  QuadExt v_pow(long e) const { return QuadExt::v_pow(e, q()); }
  EtElt basis(const KClass& k, const DObj& x) const;

  EtElt mul(const EtElt& a, const EtElt& b, EtSide side) const;
  QuadExt pairing(const EtElt& plus, const EtElt& minus) const;
  // delta(a) restricted to tensor factors u_X (x) u_Y with X, Y in objs.
  EtTensor delta(const EtElt& a, const std::vector<DObj>& objs) const;
  QuadExt pairing(const EtTensor& plus, const EtElt& b, const EtElt& c) const;
  // (a, bc) against (delta(a), b (x) c); delta is restricted to the supports of b and c.
  // (a, bc) and (delta(a), b (x) c)
  std::pair<QuadExt, QuadExt> pairing_identity_sides(const EtElt& a, const EtElt& b, const EtElt& c) const;
  bool pairing_identity_check(const EtElt& a, const EtElt& b, const EtElt& c) const {
    auto [lhs, rhs] = pairing_identity_sides(a, b, c);
    return lhs == rhs;
  }

  EtElt dr_mul(const EtElt& a, const EtElt& b) const;
  EtElt dr_phi(const EtElt& a) const;
  bool dr_phi_check(const EtElt& a, const EtElt& b) const;

  bool is_associative(const EtElt& a, const EtElt& b, const EtElt& c, EtSide side) const;

  // Keys K_a u_X with a in {-1,0,1}^n and X in objs.
  std::vector<EtKey> keys(const std::vector<DObj>& objs) const;

  std::string to_string(const KClass& k) const;

 private:
  const DerivedHall::Table& product(const DObj& x, const DObj& y) const;
  const DerivedHall::Table& dual_product(const DObj& x, const DObj& y) const;

  std::shared_ptr<const DerivedHall> dh_;
  mutable std::map<std::pair<DObj, DObj>, DerivedHall::Table> products_, dual_products_;
};

KClass operator+(const KClass& a, const KClass& b);

}  // namespace hallalg
