#include <gtest/gtest.h>

#include <map>

#include "hallalg/quiver.hpp"

using namespace hallalg;

namespace {

struct A2 {
  Catalog cat;
  ModClass s1, s2, p1;
  explicit A2(int p = 2)
      : cat(Quiver::type_a(2), p), s1(cat.parse("I[1,1]")), s2(cat.parse("I[2,2]")), p1(cat.parse("I[1,2]")) {}
};

Rep a2_rep(int p, int d1, int d2, const FpMatrix& m) {
  Rep r;
  r.p = p;
  r.dims = {d1, d2};
  r.maps = {m};
  return r;
}

}  // namespace

TEST(Quiver, Parse) {
  Quiver q = Quiver::parse("A3:rl");
  EXPECT_EQ(q.vertex_count(), 3);
  EXPECT_TRUE(q.is_type_a());
  EXPECT_TRUE(q.reaches(0, 1));
  EXPECT_FALSE(q.reaches(0, 2));
  EXPECT_TRUE(q.reaches(2, 1));
  EXPECT_THROW(Quiver::parse("D4"), std::invalid_argument);
  Quiver star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(star.is_type_a());
  EXPECT_THROW(Catalog(star, 2), NotTypeA);
}

TEST(Catalog, CountsMatchBruteForce) {
  for (auto [n, cap] : std::vector<std::pair<int, DimVector>>{{1, {1}}, {2, {1, 1}}, {3, {1, 1, 1}}}) {
    Catalog cat(Quiver::type_a(n), 2);
    auto found = indecomposables_bruteforce(cat.quiver(), 2, cap);
    ASSERT_EQ(static_cast<int>(found.size()), cat.size());
    EXPECT_EQ(cat.size(), n * (n + 1) / 2);
    for (int l = 0; l < cat.size(); ++l) {
      int matches = 0;
      for (const auto& r : found) matches += isomorphic_bruteforce(cat.quiver(), r, cat.rep(l)) ? 1 : 0;
      EXPECT_EQ(matches, 1) << cat.label_name(l);
    }
  }
}

TEST(Catalog, NonLinearOrientationBruteForce) {
  Catalog cat(Quiver::type_a(3, "rl"), 2);
  auto found = indecomposables_bruteforce(cat.quiver(), 2, {1, 1, 1});
  EXPECT_EQ(found.size(), 6u);
}

TEST(Catalog, LabelsAndParsing) {
  A2 a;
  EXPECT_EQ(a.cat.to_string(a.p1 + a.s1 + a.s1), "I[1,2]+2*I[1,1]");
  EXPECT_EQ(a.cat.parse("I[1,2]+2*I[1,1]"), a.p1 + a.s1 + a.s1);
  EXPECT_EQ(a.cat.to_string(ModClass{}), "0");
  EXPECT_TRUE(a.cat.is_projective(a.p1.parts[0].first));
  EXPECT_TRUE(a.cat.is_projective(a.s2.parts[0].first));
  EXPECT_FALSE(a.cat.is_projective(a.s1.parts[0].first));
}

TEST(HomExt, SmallValues) {
  A2 a;
  const Quiver& q = a.cat.quiver();
  Rep s1 = a.cat.realize(a.s1), s2 = a.cat.realize(a.s2), p1 = a.cat.realize(a.p1);
  EXPECT_EQ(hom_space(q, s2, p1).size(), 1u);
  EXPECT_EQ(hom_space(q, s1, p1).size(), 0u);
  EXPECT_GE(hom_space(q, p1, p1).size(), 1u);
  EXPECT_EQ(ext1_dim(q, s1, s2), 1);
  EXPECT_EQ(ext1_dim(q, s2, s1), 0);
  for (const Rep* x : {&s1, &s2, &p1}) EXPECT_EQ(ext1_dim(q, p1, *x), 0);
  for (auto& f : hom_space(q, s2, p1)) EXPECT_TRUE(is_morphism(q, s2, p1, f));
}

TEST(HomExt, EulerAgreesWithPresentationOnCatalogPairs) {
  for (int n = 1; n <= 4; ++n)
    for (const char* o : {"", "rl", "lr", "rlr"}) {
      if (std::string(o).size() != static_cast<std::size_t>(n - 1) && std::string(o) != "") continue;
      Catalog cat(Quiver::type_a(n, o), 3);
      for (int x = 0; x < cat.size(); ++x)
        for (int y = 0; y < cat.size(); ++y)
          EXPECT_EQ(cat.hom(x, y) - euler_form(cat.quiver(), cat.dim_vector(x), cat.dim_vector(y)),
                    ext1_dim_presentation(cat.quiver(), cat.rep(x), cat.rep(y)));
    }
}

TEST(Presentation, MinimalForIntervals) {
  A2 a;
  const Presentation& ps1 = a.cat.presentation(a.s1.parts[0].first);
  EXPECT_EQ(ps1.p0, (ProjSum{0}));
  EXPECT_EQ(ps1.p1, (ProjSum{1}));
  EXPECT_TRUE(a.cat.presentation(a.p1.parts[0].first).p1.empty());
}

TEST(Classify, Examples) {
  A2 a;
  EXPECT_EQ(a.cat.classify(a2_rep(2, 1, 1, FpMatrix(2, {{1}}))), a.p1);
  EXPECT_EQ(a.cat.classify(a2_rep(2, 1, 1, FpMatrix(2, {{0}}))), a.s1 + a.s2);
  EXPECT_TRUE(a.cat.classify(zero_rep(a.cat.quiver(), 2)).is_zero());
}

TEST(Classify, FingerprintCompleteUpToTwoTwo) {
  const int p = 2;
  A2 a(p);
  std::vector<Rep> all;
  for (int d1 = 0; d1 <= 2; ++d1)
    for (int d2 = 0; d2 <= 2; ++d2)
      for_each_coords(p, d1 * d2, 1000, [&](const FpVector& c) {
        FpMatrix m(p, d2, d1);
        int k = 0;
        for (int r = 0; r < d2; ++r)
          for (int col = 0; col < d1; ++col) m(r, col) = c[k++];
        all.push_back(a2_rep(p, d1, d2, m));
      });
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      bool same_print = all[i].dims == all[j].dims && a.cat.fingerprint(all[i]) == a.cat.fingerprint(all[j]);
      EXPECT_EQ(same_print, isomorphic_bruteforce(a.cat.quiver(), all[i], all[j]));
    }
}

TEST(Extensions, MiddleTerms) {
  A2 a2(2), a3(3);
  EXPECT_EQ(middle_of_extension(a2.cat, a2.s2, a2.s1, {0}), a2.s1 + a2.s2);
  EXPECT_EQ(middle_of_extension(a2.cat, a2.s2, a2.s1, {1}), a2.p1);
  EXPECT_EQ(middle_of_extension(a3.cat, a3.s2, a3.s1, {1}), a3.p1);
  EXPECT_EQ(middle_of_extension(a3.cat, a3.s2, a3.s1, {2}), a3.p1);
  EXPECT_EQ(ExtSpace(a2.cat, a2.s1, a2.s2).dim(), 0);
}

TEST(Extensions, MiddleTermsPartitionExtSpace) {
  for (int p : {2, 3}) {
    Catalog cat(Quiver::type_a(3), p);
    auto classes = cat.classes_up_to(3);
    for (const auto& x : classes)
      for (const auto& y : classes) {
        if (cat.total_dim(x) + cat.total_dim(y) > 4) continue;
        ExtSpace e(cat, x, y);
        std::map<ModClass, int> strata;
        for_each_coords(p, e.dim(), 1 << 16, [&](const FpVector& c) { ++strata[e.middle(c)]; });
        int total = 0;
        for (auto& [m, n] : strata) {
          total += n;
          EXPECT_EQ(cat.dim_vector(m), cat.dim_vector(x + y));
        }
        int expected = 1;
        for (int i = 0; i < e.dim(); ++i) expected *= p;
        EXPECT_EQ(total, expected);
        EXPECT_EQ(e.dim(), ext1_dim(cat.quiver(), cat.realize(y), cat.realize(x)));
      }
  }
}

TEST(HallNumbers, Examples) {
  A2 a;
  EXPECT_EQ(hall_number(a.cat, a.p1, a.s2, a.s1), 1);
  EXPECT_EQ(hall_number(a.cat, a.p1, a.s1, a.s2), 0);
  EXPECT_EQ(hall_number(a.cat, a.s1 + a.s1, a.s1, a.s1), 3);
}

TEST(HallNumbers, SubmodulesAgreeWithMonomorphisms) {
  struct Case {
    int n, p, max_total;
  };
  int checked = 0, skipped = 0;
  for (auto [n, p, max_total] : {Case{2, 2, 5}, Case{2, 3, 5}, Case{3, 2, 4}, Case{3, 3, 3}}) {
    Catalog cat(Quiver::type_a(n), p);
    auto classes = cat.classes_up_to(max_total);
    for (const auto& l : classes) {
      DimVector dl = cat.dim_vector(l);
      for (const auto& x : classes) {
        DimVector dx = cat.dim_vector(x), dy(dl.size());
        bool ok = true;
        for (std::size_t v = 0; v < dl.size(); ++v) {
          dy[v] = dl[v] - dx[v];
          if (dy[v] < 0) ok = false;
        }
        if (!ok) continue;
        for (const auto& y : cat.classes_with_dim(dy)) {
          Rational monos;
          try {
            monos = hall_number_via_monos(cat, l, x, y, 1 << 16);
          } catch (const EnumerationTooLarge&) {
            ++skipped;
            continue;
          }
          ++checked;
          ASSERT_EQ(Rational(hall_number(cat, l, x, y)), monos)
              << cat.to_string(l) << " " << cat.to_string(x) << " " << cat.to_string(y) << " p=" << p;
        }
      }
    }
  }
  EXPECT_GT(checked, 10 * skipped);
}

TEST(Automorphisms, Examples) {
  A2 a;
  EXPECT_EQ(aut_order(a.cat, a.s1), 1);
  EXPECT_EQ(aut_order(a.cat, a.s1 + a.s1), 6);
  EXPECT_EQ(aut_order(a.cat, a.s1 + a.s2), 1);
  EXPECT_EQ(aut_order_bruteforce(a.cat, a.s1 + a.s1), 6);
}

TEST(Automorphisms, FormulaMatchesUnitCount) {
  for (int n : {2, 3}) {
    Catalog cat(Quiver::type_a(n), 2);
    for (const auto& m : cat.classes_up_to(4)) EXPECT_EQ(aut_order(cat, m), aut_order_bruteforce(cat, m)) << cat.to_string(m);
  }
}
