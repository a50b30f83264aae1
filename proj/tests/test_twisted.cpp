#include <gtest/gtest.h>

#include "hallalg/twisted.hpp"

using namespace hallalg;

namespace {

struct Fixture {
  std::shared_ptr<DerivedCategory> dc;
  std::shared_ptr<DerivedHall> dh;
  TwistedExt et;
  explicit Fixture(int p = 2)
      : dc(std::make_shared<DerivedCategory>(std::make_shared<Catalog>(Quiver::type_a(2), p))),
        dh(std::make_shared<DerivedHall>(dc)),
        et(dh) {}
  DObj operator()(const char* s) const { return dc->parse(s); }
  EtElt b(const KClass& k, const char* s) const { return et.basis(k, dc->parse(s)); }
};

const KClass k0{0, 0}, k10{1, 0}, k01{0, 1};

}  // namespace

TEST(Twisted, KClasses) {
  Fixture a;
  EXPECT_EQ(a.et.kclass_of(a("I[1,2]")), (KClass{1, 1}));
  EXPECT_EQ(a.et.kclass_of(a("I[1,1][1]")), (KClass{-1, 0}));
  EXPECT_EQ(a.et.kclass_of(a("I[1,1]+I[1,1][1]")), (KClass{0, 0}));
}

TEST(Twisted, EulerForm) {
  Fixture a;
  KClass s1 = a.et.kclass_of(a("I[1,1]")), s2 = a.et.kclass_of(a("I[2,2]"));
  EXPECT_EQ(a.et.euler_form(s1, s2), -1);
  EXPECT_EQ(a.et.euler_form(s2, s1), 0);
  EXPECT_EQ(a.et.sym_form(s1, s1), 2);
  auto objs = a.dc->corpus(-1, 1, 2);
  for (const auto& x : objs)
    for (const auto& y : objs)
      EXPECT_EQ(a.et.euler_form(a.et.kclass_of(x), a.et.kclass_of(y)), a.et.euler_form_hom(x, y))
          << a.dc->to_string(x) << " " << a.dc->to_string(y);
}

TEST(Twisted, KClassAdditiveOverTriangles) {
  Fixture a;
  auto objs = a.dc->corpus(-1, 1, 2);
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& [c, n] : a.dc->cone_strata(y, x.shifted(1)))
        EXPECT_EQ(a.et.kclass_of(c.shifted(-1)), a.et.kclass_of(x) + a.et.kclass_of(y));
}

TEST(Twisted, Products) {
  Fixture a;
  EXPECT_EQ(a.et.mul(a.b(k10, "0"), a.b(k01, "0"), EtSide::plus), a.b(KClass{1, 1}, "0"));
  EXPECT_EQ(a.et.mul(a.b(k0, "I[1,1]"), a.b(k10, "I[2,2]"), EtSide::plus),
            (EtElt{{EtKey{k10, a("I[1,1]+I[2,2]")}, a.et.v_pow(-3)}}));
  EXPECT_EQ(a.et.mul(a.b(k0, "I[2,2]"), a.b(k0, "I[1,1]"), EtSide::plus),
            (EtElt{{EtKey{k0, a("I[1,1]+I[2,2]")}, QuadExt(1)}, {EtKey{k0, a("I[1,2]")}, QuadExt(1)}}));
}

TEST(Twisted, Pairing) {
  Fixture a;
  EXPECT_TRUE(a.et.pairing(a.b(k0, "I[1,1]"), a.b(k0, "I[2,2]")).is_zero());
  EXPECT_EQ(a.et.pairing(a.b(k0, "I[1,1]"), a.b(k0, "I[1,1]")), QuadExt(1));
  EXPECT_EQ(a.et.pairing(a.b(k10, "I[1,1]"), a.b(k10, "I[1,1]")), a.et.v_pow(-2));
  EXPECT_EQ(a.et.v_pow(-2), QuadExt(Rational(1, 2)));
}

TEST(Twisted, PairingIdentity) {
  Fixture a;
  EXPECT_TRUE(a.et.pairing_identity_check(a.b(k0, "0"), a.b(k0, "0"), a.b(k0, "0")));
  EXPECT_TRUE(a.et.pairing_identity_check(a.b(k0, "I[1,2]"), a.b(k0, "I[2,2]"), a.b(k0, "I[1,1]")));
  EXPECT_TRUE(a.et.pairing_identity_check(a.b(k10, "I[1,2]"), a.b(k0, "I[2,2]"), a.b(k01, "I[1,1]")));
  // the identity is not vacuous on these keys
  EXPECT_FALSE(a.et.pairing(a.b(k10, "I[1,2]"), a.et.mul(a.b(k0, "I[2,2]"), a.b(k01, "I[1,1]"), EtSide::minus))
                   .is_zero());
}

TEST(Twisted, DrinfeldPhi) {
  Fixture a;
  EXPECT_TRUE(a.et.dr_phi_check(a.b(k0, "0"), a.b(k0, "0")));
  EXPECT_TRUE(a.et.dr_phi_check(a.b(k0, "I[2,2]"), a.b(k0, "I[1,1]")));
  EXPECT_TRUE(a.et.dr_phi_check(a.b(k10, "I[2,2]"), a.b(k01, "I[1,1]")));
}

TEST(Twisted, SweepSmall) {
  for (int p : {2, 3}) {
    Fixture a(p);
    auto objs = a.dc->corpus(0, 1, 1);
    auto keys = a.et.keys(objs);
    for (const auto& x : keys)
      for (const auto& y : keys) {
        EtElt ex{{x, QuadExt(1)}}, ey{{y, QuadExt(1)}};
        EXPECT_TRUE(a.et.dr_phi_check(ex, ey));
        for (const auto& z : keys) {
          if (z.k != k0 && x.k != k0) continue;
          EtElt ez{{z, QuadExt(1)}};
          EXPECT_TRUE(a.et.is_associative(ex, ey, ez, EtSide::plus));
          EXPECT_TRUE(a.et.is_associative(ex, ey, ez, EtSide::minus));
          EXPECT_TRUE(a.et.pairing_identity_check(ex, ey, ez));
        }
      }
  }
}
