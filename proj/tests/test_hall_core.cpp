#include <gtest/gtest.h>

#include "hallalg/coeff.hpp"
#include "hallalg/hall_core.hpp"
#include "hallalg/ringel_hall.hpp"

using namespace hallalg;

namespace {

// Divided powers on one generator: u_a u_b = binom(a+b, a) u_{a+b}, with
// weights t_a = 1/a! and dual constants h = 1. Both products are associative
// and the pairing identity holds.
BasedAlgebra<int, Rational> divided_powers() {
  auto fact = [](int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
  };
  BasedAlgebra<int, Rational> alg;
  alg.unit = 0;
  alg.structure = [fact](const int& a, const int& b) {
    return std::map<int, Rational>{{a + b, fact(a + b) / (fact(a) * fact(b))}};
  };
  alg.dual_structure = [](const int& a, const int& b) { return std::map<int, Rational>{{a + b, Rational(1)}}; };
  alg.weight = [fact](const int& a) { return fact(a).inverse(); };
  return alg;
}

}  // namespace

TEST(BasedAlgebra, UnitAndPairing) {
  auto alg = divided_powers();
  AlgElt<int, Rational> unit{{0, 1}}, x{{2, 3}, {1, Rational(1, 2)}};
  EXPECT_EQ(alg.mul(unit, x), x);
  EXPECT_EQ(alg.dual_mul(unit, x), x);
  EXPECT_EQ(alg.pairing(AlgElt<int, Rational>{{3, 1}}, AlgElt<int, Rational>{{3, 1}}), Rational(1, 6));
  EXPECT_EQ(alg.pairing(AlgElt<int, Rational>{{3, 1}}, AlgElt<int, Rational>{{2, 1}}), Rational(0));
}

TEST(BasedAlgebra, IdentitiesOnToyProvider) {
  auto alg = divided_powers();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      EXPECT_TRUE(alg.check_hopf_pairing(a, b, a + b));
      EXPECT_TRUE(alg.check_hopf_pairing(a, b, a + b + 1));
      AlgElt<int, Rational> ua{{a, 1}}, ub{{b, 1}};
      EXPECT_TRUE(alg.phi_check(ua, ub));
      for (int c = 0; c < 4; ++c) {
        AlgElt<int, Rational> uc{{c, 1}};
        EXPECT_TRUE(alg.is_associative(ua, ub, uc));
        EXPECT_TRUE(alg.is_dual_associative(ua, ub, uc));
      }
    }
}

TEST(BasedAlgebra, BrokenWeightIsDetected) {
  auto alg = divided_powers();
  alg.weight = [](const int&) { return Rational(1); };
  EXPECT_FALSE(alg.check_hopf_pairing(1, 1, 2));
  EXPECT_FALSE(alg.phi_check(AlgElt<int, Rational>{{1, 1}}, AlgElt<int, Rational>{{1, 1}}));
}

TEST(BasedAlgebra, AddTermDropsZeros) {
  AlgElt<int, Rational> x;
  add_term(x, 1, Rational(2));
  add_term(x, 1, Rational(-2));
  EXPECT_TRUE(x.empty());
}

TEST(BasedAlgebra, RingelHallHopfPairingExamples) {
  auto cat = std::make_shared<Catalog>(Quiver::type_a(2), 2);
  RingelHall rh(cat);
  auto alg = rh.algebra();
  ModClass s1 = cat->parse("I[1,1]"), s2 = cat->parse("I[2,2]"), p1 = cat->parse("I[1,2]");
  EXPECT_TRUE(alg.check_hopf_pairing(s1, s1, s2));
  EXPECT_TRUE(alg.check_hopf_pairing(s2, s1, p1));
  EXPECT_TRUE(alg.check_hopf_pairing(s1, s1, s1 + s1));
  // exhaustive basis pairs of the three indecomposables
  for (const auto& a : {s1, s2, p1})
    for (const auto& b : {s1, s2, p1})
      EXPECT_TRUE(alg.phi_check(basis_elt<ModClass, Rational>(a), basis_elt<ModClass, Rational>(b)));
}
