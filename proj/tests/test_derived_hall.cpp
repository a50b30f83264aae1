#include <gtest/gtest.h>

#include "hallalg/derived_hall.hpp"
#include "hallalg/ringel_hall.hpp"

using namespace hallalg;

namespace {

struct A2 {
  std::shared_ptr<Catalog> cat;
  std::shared_ptr<DerivedCategory> dc;
  DerivedHall dh;
  DObj p1, s1, s2;
  explicit A2(int p = 2)
      : cat(std::make_shared<Catalog>(Quiver::type_a(2), p)),
        dc(std::make_shared<DerivedCategory>(cat)),
        dh(dc),
        p1(dc->parse("I[1,2]")),
        s1(dc->parse("I[1,1]")),
        s2(dc->parse("I[2,2]")) {}
};

using Elt = AlgElt<DObj, Rational>;

Elt u(const DObj& x) { return basis_elt<DObj, Rational>(x); }

}  // namespace

TEST(DerivedHall, FConstants) {
  A2 a;
  EXPECT_EQ(a.dh.F_const(a.s2, a.s1, a.p1), Rational(1));
  EXPECT_EQ(a.dh.F_const(a.s1, a.s1, a.s1 + a.s1), Rational(3));
  EXPECT_EQ(a.dh.F_const(a.s1, a.p1.shifted(1), a.s2.shifted(1)), Rational(1));
}

TEST(DerivedHall, HConstants) {
  A2 a;
  EXPECT_EQ(a.dh.h_const(a.s2, a.s1, a.p1), Rational(1));
  EXPECT_EQ(a.dh.h_const(a.s1, a.s1, a.s1 + a.s1), Rational(1, 2));
  for (const auto& x : a.dc->corpus(-1, 1, 1)) EXPECT_EQ(a.dh.h_const(x, DObj{}, x), Rational(1));
}

TEST(DerivedHall, Products) {
  A2 a;
  auto alg = a.dh.algebra();
  EXPECT_EQ(alg.mul(u(DObj{}), u(a.p1)), u(a.p1));
  EXPECT_EQ(alg.mul(u(a.s2), u(a.s1)), (Elt{{a.s1 + a.s2, 1}, {a.p1, 1}}));
  EXPECT_EQ(alg.mul(u(a.s1), u(a.p1.shifted(1))), (Elt{{a.s1 + a.p1.shifted(1), 1}, {a.s2.shifted(1), 1}}));
  EXPECT_EQ(alg.mul(u(a.s1), u(a.s1)), (Elt{{a.s1 + a.s1, 3}}));
  EXPECT_EQ(alg.dual_mul(u(a.s1), u(a.s1)), (Elt{{a.s1 + a.s1, Rational(1, 2)}}));
}

TEST(DerivedHall, ProductMatchesBothFExpressions) {
  A2 a;
  auto objs = a.dc->corpus(-1, 1, 1);
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& [l, f] : a.dh.product(x, y)) EXPECT_EQ(f, a.dh.F_const(x, y, l));
}

TEST(DerivedHall, RiedtmannPeng) {
  A2 a;
  EXPECT_TRUE(a.dh.rp_check(a.s2, a.s1, a.p1));
  EXPECT_TRUE(a.dh.rp_check(a.s1, a.s1, a.s1 + a.s1));
  EXPECT_TRUE(a.dh.rp_check(a.p1.shifted(1), DObj{}, a.p1.shifted(1)));
  for (int p : {2, 3}) {
    A2 b(p);
    auto objs = b.dc->corpus(-1, 1, 1);
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& [l, f] : b.dh.dual_product(x, y)) EXPECT_TRUE(b.dh.rp_check(x, y, l));
  }
}

TEST(DerivedHall, PhiIsomorphism) {
  A2 a;
  EXPECT_TRUE(a.dh.ks_phi_check(DObj{}, DObj{}));
  EXPECT_TRUE(a.dh.ks_phi_check(a.s2, a.s1));
  EXPECT_TRUE(a.dh.ks_phi_check(a.s1, a.s1));
  auto alg = a.dh.algebra();
  for (const auto& x : a.dc->corpus(-1, 1, 1))
    for (const auto& y : a.dc->corpus(-1, 1, 1)) EXPECT_TRUE(alg.phi_check(u(x), u(y)));
}

TEST(DerivedHall, AbelianDegeneration) {
  A2 a;
  auto classes = a.cat->classes_up_to(3);
  for (const auto& x : classes)
    for (const auto& y : classes)
      for (const auto& l : a.cat->classes_with_dim(a.cat->dim_vector(x + y)))
        EXPECT_EQ(a.dh.F_const(DObj::from_module(x), DObj::from_module(y), DObj::from_module(l)),
                  Rational(hall_number(*a.cat, l, x, y)));
}

TEST(DerivedHall, DualConstantsPartitionHom) {
  A2 a;
  auto objs = a.dc->corpus(-1, 1, 2);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      Rational total(0);
      for (const auto& [l, h] : a.dh.dual_product(x, y)) total += h;
      DObj x1 = x.shifted(1);
      EXPECT_EQ(total / a.dc->braces(y, x1), qpow(a.dc->hom_dim(y, x1), 2));
    }
}

TEST(DerivedHall, AssociativitySmall) {
  A2 a;
  auto alg = a.dh.algebra();
  auto objs = a.dc->corpus(-1, 1, 1);
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& z : objs) {
        EXPECT_TRUE(alg.is_associative(u(x), u(y), u(z)));
        EXPECT_TRUE(alg.is_dual_associative(u(x), u(y), u(z)));
      }
}

TEST(DerivedHall, Prop25) {
  A2 a;
  Prop25Values v = a.dh.prop25(a.s2, a.s1, a.p1);
  EXPECT_EQ(v.via_hom_out, Rational(1));
  EXPECT_EQ(v.via_hom_in, Rational(1));
  EXPECT_EQ(v.orbit_sum, Rational(1));
  EXPECT_TRUE(a.dh.prop25(a.s1, a.s1.shifted(1), DObj{}).holds());
  auto objs = a.dc->corpus(-1, 1, 1);
  for (const auto& z : objs)
    for (const auto& l : objs)
      for (const auto& m : objs) EXPECT_TRUE(a.dh.prop25(z, l, m).holds());
}
