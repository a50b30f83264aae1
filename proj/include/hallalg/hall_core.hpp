#pragma once

// Based algebras given by structure constants, their duals, the diagonal
// pairing and the rescaling map between the two products.

#include <functional>
#include <map>
#include <memory>
#include <utility>

namespace hallalg {

template <class Key, class Coeff>
using AlgElt = std::map<Key, Coeff>;

template <class Key, class Coeff>
void add_term(AlgElt<Key, Coeff>& x, const Key& k, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = x.find(k);
  if (it == x.end()) {
    x.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

template <class Key, class Coeff>
AlgElt<Key, Coeff> basis_elt(const Key& k) {
  return {{k, Coeff(1)}};
}

template <class Key, class Coeff>
struct BasedAlgebra {
  using Elt = AlgElt<Key, Coeff>;
  using Table = std::map<Key, Coeff>;

  Key unit;
  // (a, b) -> {l : g_{ab}^l}
  std::function<Table(const Key&, const Key&)> structure;
  // (a, b) -> {l : h_l^{ab}}
  std::function<Table(const Key&, const Key&)> dual_structure;
  std::function<Coeff(const Key&)> weight;

  Elt mul(const Elt& x, const Elt& y) const { return bilinear(x, y, structure); }
  Elt dual_mul(const Elt& x, const Elt& y) const { return bilinear(x, y, dual_structure); }

  Coeff pairing(const Elt& x, const Elt& y) const {
    Coeff s(0);
    for (const auto& [k, c] : x) {
      auto it = y.find(k);
      if (it != y.end()) s += c * it->second * weight(k);
    }
    return s;
  }

  // h_l^{ab} t_a t_b == g_{ab}^l t_l
  bool check_hopf_pairing(const Key& a, const Key& b, const Key& l) const {
    Coeff h = lookup(dual_structure(a, b), l);
    Coeff g = lookup(structure(a, b), l);
    return h * weight(a) * weight(b) == g * weight(l);
  }

  // v_a -> t_a^{-1} u_a
  Elt phi(const Elt& x) const {
    Elt out;
    for (const auto& [k, c] : x) add_term(out, k, c * weight(k).inverse());
    return out;
  }

  bool phi_check(const Elt& x, const Elt& y) const { return phi(dual_mul(x, y)) == mul(phi(x), phi(y)); }

  bool is_associative(const Elt& x, const Elt& y, const Elt& z) const {
    return mul(mul(x, y), z) == mul(x, mul(y, z));
  }
  bool is_dual_associative(const Elt& x, const Elt& y, const Elt& z) const {
    return dual_mul(dual_mul(x, y), z) == dual_mul(x, dual_mul(y, z));
  }

  static Coeff lookup(const Table& t, const Key& k) {
    auto it = t.find(k);
    return it == t.end() ? Coeff(0) : it->second;
  }

 private:
  static Elt bilinear(const Elt& x, const Elt& y, const std::function<Table(const Key&, const Key&)>& f) {
    Elt out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        Coeff cab = ca * cb;
        for (const auto& [l, cl] : f(a, b)) add_term(out, l, cab * cl);
      }
    return out;
  }
};

// Wraps a structure function with a memo table keyed on the operand pair.
template <class Key, class Table>
std::function<Table(const Key&, const Key&)> memoize(std::function<Table(const Key&, const Key&)> f) {
  auto cache = std::make_shared<std::map<std::pair<Key, Key>, Table>>();
  return [f = std::move(f), cache](const Key& a, const Key& b) -> Table {
    auto key = std::make_pair(a, b);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    Table t = f(a, b);
    cache->emplace(key, t);
    return t;
  };
}

}  // namespace hallalg
