#include <gtest/gtest.h>

#include <algorithm>

#include "hallalg/octahedron.hpp"

using namespace hallalg;

namespace {

struct Fixture {
  std::shared_ptr<DerivedCategory> dc;
  Octahedron oc;
  Fixture()
      : dc(std::make_shared<DerivedCategory>(std::make_shared<Catalog>(Quiver::type_a(2), 2))), oc(dc) {}
  DObj operator()(const char* s) const { return dc->parse(s); }
};

}  // namespace

TEST(Octahedron, WorkedInstance) {
  Fixture a;
  OctahedronKey k{a("I[2,2]"), a("I[1,1]"), a("I[2,2]"), a("I[2,2]+I[1,2]"), a("I[1,2]"), a("2*I[2,2]")};
  OctahedronInstance c = a.oc.counts(k);
  EXPECT_TRUE(c.consistent());
  EXPECT_EQ(c.yx_stratum, 1);
  EXPECT_EQ(a.dc->hom_with_cone_count(k.y, k.x.shifted(1), k.l.shifted(1)), 1);
  EXPECT_EQ(c.pair_count, c.lz_total);
  EXPECT_TRUE(a.oc.symmetry1(k).holds());
  Symmetry2Report r = a.oc.symmetry2(k);
  EXPECT_EQ(r.f_fiber_expected, Rational(1));
  EXPECT_EQ(r.f_fiber_sizes, std::vector<std::int64_t>{1});
  EXPECT_TRUE(r.f_surjective);
  EXPECT_TRUE(r.m_surjective);
  EXPECT_TRUE(r.braces_identity());
  EXPECT_TRUE(r.holds());
}

TEST(Octahedron, ZeroZCollapsesStrata) {
  Fixture a;
  auto objs = a.dc->corpus(-1, 1, 1);
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& [c, n] : a.dc->cone_strata(y, x.shifted(1))) {
        DObj l = c.shifted(-1);
        OctahedronKey k{x, y, DObj{}, l, l, x};
        OctahedronInstance ci = a.oc.counts(k);
        EXPECT_TRUE(ci.consistent());
        EXPECT_EQ(ci.yx_stratum, n);
        EXPECT_EQ(ci.lz_total, n);
        Symmetry2Report r = a.oc.symmetry2(k);
        EXPECT_EQ(r.f_fiber_expected, Rational(1));
        EXPECT_TRUE(r.holds());
        EXPECT_TRUE(a.oc.symmetry1(k).holds());
      }
}

TEST(Octahedron, InstancesIncludeWorkedOne) {
  Fixture a;
  auto keys = a.oc.instances(a.dc->corpus(-1, 1, 1));
  EXPECT_GE(keys.size(), 10u);
  OctahedronKey k{a("I[2,2]"), a("I[1,1]"), a("I[2,2]"), a("I[2,2]+I[1,2]"), a("I[1,2]"), a("2*I[2,2]")};
  EXPECT_TRUE(std::binary_search(keys.begin(), keys.end(), k));
}

TEST(Octahedron, SweepCountsAndSymmetryOne) {
  Fixture a;
  for (const auto& k : a.oc.instances(a.dc->corpus(-1, 1, 1))) {
    OctahedronInstance c = a.oc.counts(k);
    EXPECT_TRUE(c.consistent()) << a.oc.to_string(k);
    EXPECT_GT(c.lz_total, 0) << a.oc.to_string(k);
    EXPECT_GT(c.double_out, 0) << a.oc.to_string(k);
    EXPECT_GT(c.double_in, 0) << a.oc.to_string(k);
    Symmetry1Report s = a.oc.symmetry1(k);
    EXPECT_TRUE(s.holds()) << a.oc.to_string(k) << " " << s.lhs << " vs " << s.rhs;
  }
}

TEST(Octahedron, SweepSurjectivityAndSummedIdentity) {
  Fixture a;
  for (const auto& k : a.oc.instances(a.dc->corpus(-1, 1, 1))) {
    Symmetry2Report r = a.oc.symmetry2(k);
    EXPECT_TRUE(r.f_surjective) << a.oc.to_string(k);
    EXPECT_TRUE(r.m_surjective) << a.oc.to_string(k);
    EXPECT_TRUE(r.braces_identity()) << a.oc.to_string(k);
    EXPECT_TRUE(r.summed_identity()) << a.oc.to_string(k);
  }
}

// With X = 0 every fiber of n -> n f is the whole M-stratum of Hom(L, Z[1]),
// which is smaller than |Hom(Y, Z[1])| whenever that space has several cone
// types. Here Hom(P1[1], P1[1]) = F_2 splits into the identity (cone 0) and
// the zero map.
TEST(Octahedron, FiberSizeBelowClosedForm) {
  Fixture a;
  OctahedronKey k{DObj{}, a("I[1,2][1]"), a("I[1,2]"), DObj{}, a("I[1,2][1]"), a("I[1,2]")};
  Symmetry2Report r = a.oc.symmetry2(k);
  EXPECT_EQ(r.f_fiber_expected, Rational(2));
  EXPECT_EQ(r.f_fiber_sizes, std::vector<std::int64_t>{1});
  EXPECT_FALSE(r.f_fibers);
  EXPECT_TRUE(r.f_surjective);
  EXPECT_TRUE(r.summed_identity());
  EXPECT_TRUE(a.oc.symmetry1(k).holds());
}
