#include "hallalg/twisted.hpp"

#include <functional>
#include <set>

namespace hallalg {

namespace {

void add_to(EtElt& e, const EtKey& k, const QuadExt& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

}  // namespace

KClass operator+(const KClass& a, const KClass& b) {
  if (a.size() != b.size()) throw DimensionMismatch("K-classes of different rank");
  KClass out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

TwistedExt::TwistedExt(std::shared_ptr<const DerivedHall> dh) : dh_(std::move(dh)) {}

KClass TwistedExt::kclass_of(const DObj& x) const {
  const Catalog& cat = category().catalog();
  KClass out(static_cast<std::size_t>(category().quiver().vertex_count()), 0);
  for (const auto& t : x.terms()) {
    int sign = t.shift % 2 == 0 ? 1 : -1;
    const DimVector& d = cat.dim_vector(t.label);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * t.mult * d[i];
  }
  return out;
}

int TwistedExt::euler_form(const KClass& a, const KClass& b) const {
  return hallalg::euler_form(category().quiver(), a, b);
}

int TwistedExt::euler_form_hom(const DObj& x, const DObj& y) const {
  const DerivedCategory& dc = category();
  int out = 0;
  // Hom(X, Y[i]) = Hom(X[-i], Y) vanishes unless -i lies between the shift gaps
  int reach = x.is_zero() || y.is_zero() ? 0 : std::max(x.max_shift(), y.max_shift()) - std::min(x.min_shift(), y.min_shift()) + 1;
  for (int i = -reach; i <= reach; ++i) {
    int d = dc.graded_hom_dim(x, y, -i);
    out += i % 2 == 0 ? d : -d;
  }
  return out;
}

EtElt TwistedExt::basis(const KClass& k, const DObj& x) const { return EtElt{{EtKey{k, x}, QuadExt(1)}}; }

const DerivedHall::Table& TwistedExt::product(const DObj& x, const DObj& y) const {
  auto key = std::make_pair(x, y);
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  return products_.emplace(key, dh_->product(x, y)).first->second;
}

const DerivedHall::Table& TwistedExt::dual_product(const DObj& x, const DObj& y) const {
  auto key = std::make_pair(x, y);
  auto it = dual_products_.find(key);
  if (it != dual_products_.end()) return it->second;
  return dual_products_.emplace(key, dh_->dual_product(x, y)).first->second;
}

EtElt TwistedExt::mul(const EtElt& a, const EtElt& b, EtSide side) const {
  EtElt out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      KClass x = kclass_of(ka.x);
      int twist = sym_form(kb.k, x);
      long e = euler_form(x, kclass_of(kb.x)) + (side == EtSide::plus ? -twist : twist);
      QuadExt c = ca * cb * v_pow(e);
      KClass k = ka.k + kb.k;
      for (const auto& [l, f] : product(ka.x, kb.x)) add_to(out, EtKey{k, l}, c * QuadExt(f));
    }
  return out;
}

QuadExt TwistedExt::pairing(const EtElt& plus, const EtElt& minus) const {
  QuadExt out(0);
  for (const auto& [ka, ca] : plus)
    for (const auto& [kb, cb] : minus) {
      if (ka.x != kb.x) continue;
      long e = -sym_form(ka.k, kb.k) - sym_form(kb.k, kclass_of(ka.x)) + sym_form(ka.k, kclass_of(kb.x));
      out += ca * cb * v_pow(e) * QuadExt(dh_->t(ka.x));
    }
  return out;
}

EtTensor TwistedExt::delta(const EtElt& a, const std::vector<DObj>& objs) const {
  EtTensor out;
  for (const auto& [ka, ca] : a)
    for (const auto& x : objs)
      for (const auto& y : objs) {
        const auto& table = dual_product(x, y);
        auto it = table.find(ka.x);
        if (it == table.end()) continue;
        KClass kx = kclass_of(x), ky = kclass_of(y);
        // K_c u_X K_[Y] = v^{-([Y],[X])} K_{c+[Y]} u_X
        long e = euler_form(kx, ky) - sym_form(ky, kx);
        QuadExt c = ca * v_pow(e) * QuadExt(it->second);
        EtTensorKey key{EtKey{ka.k + ky, x}, EtKey{ka.k, y}};
        auto [pos, fresh] = out.emplace(key, c);
        if (!fresh) pos->second += c;
      }
  return out;
}

QuadExt TwistedExt::pairing(const EtTensor& plus, const EtElt& b, const EtElt& c) const {
  QuadExt out(0);
  for (const auto& [k, coeff] : plus) {
    if (coeff.is_zero()) continue;
    out += coeff * pairing(EtElt{{k.left, QuadExt(1)}}, b) * pairing(EtElt{{k.right, QuadExt(1)}}, c);
  }
  return out;
}

std::pair<QuadExt, QuadExt> TwistedExt::pairing_identity_sides(const EtElt& a, const EtElt& b, const EtElt& c) const {
  std::set<DObj> support;
  for (const auto& [k, v] : b) support.insert(k.x);
  for (const auto& [k, v] : c) support.insert(k.x);
  QuadExt lhs = pairing(a, mul(b, c, EtSide::minus));
  QuadExt rhs = pairing(delta(a, {support.begin(), support.end()}), b, c);
  return {lhs, rhs};
}

EtElt TwistedExt::dr_mul(const EtElt& a, const EtElt& b) const {
  EtElt out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      KClass x = kclass_of(ka.x);
      long e = sym_form(kb.k, x) - 2 * sym_form(ka.k, kb.k) + euler_form(x, kclass_of(kb.x));
      QuadExt c = ca * cb * v_pow(e);
      KClass k = ka.k + kb.k;
      for (const auto& [l, h] : dual_product(ka.x, kb.x)) add_to(out, EtKey{k, l}, c * QuadExt(h));
    }
  return out;
}

EtElt TwistedExt::dr_phi(const EtElt& a) const {
  EtElt out;
  for (const auto& [k, c] : a) add_to(out, k, c * v_pow(sym_form(k.k, k.k)) * QuadExt(dh_->t(k.x).inverse()));
  return out;
}

bool TwistedExt::dr_phi_check(const EtElt& a, const EtElt& b) const {
  return dr_phi(dr_mul(a, b)) == mul(dr_phi(a), dr_phi(b), EtSide::minus);
}

bool TwistedExt::is_associative(const EtElt& a, const EtElt& b, const EtElt& c, EtSide side) const {
  return mul(mul(a, b, side), c, side) == mul(a, mul(b, c, side), side);
}

std::vector<EtKey> TwistedExt::keys(const std::vector<DObj>& objs) const {
  const int n = category().quiver().vertex_count();
  std::vector<KClass> ks;
  KClass cur(static_cast<std::size_t>(n), -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      ks.push_back(cur);
      return;
    }
    for (int v = -1; v <= 1; ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::vector<EtKey> out;
  for (const auto& x : objs)
    for (const auto& k : ks) out.push_back(EtKey{k, x});
  return out;
}

std::string TwistedExt::to_string(const KClass& k) const {
  std::string out = "(";
  for (std::size_t i = 0; i < k.size(); ++i) out += (i ? "," : "") + std::to_string(k[i]);
  return out + ")";
}

}  // namespace hallalg
