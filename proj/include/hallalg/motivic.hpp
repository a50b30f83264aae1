#pragma once

// Point-supported motivic Hall algebras. Classes of Hom strata are obtained
// by counting over several prime fields and interpolating in q -> L, with one
// prime held out and checked on every call.
//
//   v_X v_Y = {Y,X[1]} sum_E [Hom(Y,X[1])_E] v_{E[-1]}
//   u_X u_Y = sum_L Y(Aut X)^{-1} {X,X}^{-1} {X,L} [Hom(X,L)_Y] u_L
//           = sum_L Y(Aut Y)^{-1} {Y,Y}^{-1} {L,Y} [Hom(L,Y)_{X[1]}] u_L
//   Phi(v_X) = Y(Aut X) {X,X} u_X
//
// with braces realized as powers of L and Y(Aut X) the class of Aut X.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hallalg/derived_hall.hpp"

namespace hallalg {

// L^t prod_i prod_{j=1}^{s_i} (L^{j d_i} - 1)
struct AutMotive {
  int t = 0;
  std::vector<std::pair<int, int>> blocks;  // (d, s)

  PolyL poly() const;
  Rational eval(long q) const { return poly().eval(Rational(q)); }
  std::string to_string() const { return poly().to_string(); }
};

struct CountingPolynomial {
  PolyL poly;
  int degree_bound = 0;
  std::vector<int> primes;     // used for the fit
  std::vector<int> held_out;   // verified afterwards
};

// |Hom(A, B)_C|; an empty `cone` means the whole Hom space.
struct StratumSpec {
  DObj a, b;
  std::optional<DObj> cone;
};

using MotElt = std::map<DObj, RatFuncL>;

struct LemmaSpaceReport {
  std::int64_t morphisms = 0;   // l with the requested cone, over all primes
  int end_l_dim = -1;           // dim of {t n} in End L
  int end_z_dim = -1;           // dim of {n t} in End Z[1]
  CountingPolynomial end_l, end_z;
  RatFuncL end_l_expected, end_z_expected;
  bool holds() const { return RatFuncL(end_l.poly) == end_l_expected && RatFuncL(end_z.poly) == end_z_expected; }
};

class Motivic {
 public:
  static const std::vector<int>& default_fit_primes();

  explicit Motivic(Quiver q, std::vector<int> fit_primes = default_fit_primes(), int held_out = 7, int window = 4,
                   std::int64_t cap = kDefaultCap);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<int>& fit_primes() const { return fit_primes_; }
  int held_out() const { return held_out_; }
  // Category and Hall algebra over F_p, built on first use.
  const DerivedCategory& category(int p) const;
  const DerivedHall& hall(int p) const;
  const DerivedCategory& base() const { return category(fit_primes_.front()); }

  AutMotive upsilon_aut(const DObj& x) const;
  RatFuncL braces(const DObj& x, const DObj& y) const;
  CountingPolynomial count_poly(const StratumSpec& s, int degree_bound) const;
  // Every nonempty cone stratum of Hom(A, B), memoized.
  const std::map<DObj, CountingPolynomial>& strata(const DObj& a, const DObj& b) const;

  MotElt hall_mul(const MotElt& x, const MotElt& y) const;
  MotElt t_mul(const MotElt& x, const MotElt& y) const;
  MotElt phi(const MotElt& x) const;
  bool phi_check(const MotElt& x, const MotElt& y) const;
  // Both sides of the motivic RP identity for a triangle Z -> M -> L -> Z[1].
  std::pair<RatFuncL, RatFuncL> rp_sides(const DObj& z, const DObj& l, const DObj& m) const;
  bool rp_check(const DObj& z, const DObj& l, const DObj& m) const {
    auto [lhs, rhs] = rp_sides(z, l, m);
    return lhs == rhs;
  }
  // Composition spaces for every l : Z -> M with cone L, over every sampled prime.
  LemmaSpaceReport lemma_space(const DObj& z, const DObj& m, const DObj& l) const;
  bool lemma_space_check(const DObj& z, const DObj& m, const DObj& l) const { return lemma_space(z, m, l).holds(); }

  // Coefficients of both products at L = p against the counting algebras over F_p.
  bool specializes(const DObj& x, const DObj& y, int p) const;

  std::string to_string(const MotElt& x) const;

 private:
  RatFuncL t_inverse(const DObj& x) const;

  Quiver quiver_;
  std::vector<int> fit_primes_;
  int held_out_;
  int window_;
  std::int64_t cap_;
  mutable std::map<int, std::shared_ptr<DerivedCategory>> categories_;
  mutable std::map<int, std::shared_ptr<DerivedHall>> halls_;
  mutable std::map<std::pair<DObj, DObj>, std::map<DObj, CountingPolynomial>> strata_;
};

MotElt mot_basis(const DObj& x);

}  // namespace hallalg
