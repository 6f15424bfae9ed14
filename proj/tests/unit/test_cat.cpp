#include <gtest/gtest.h>

#include <vector>

#include "../support/fixtures.hpp"

using namespace hg;

namespace {

bool has_tag(const CheckReport& r, const std::string& tag) {
  for (const auto& v : r.violations)
    if (v.tag == tag) return true;
  return false;
}

// {e,a,b} with a*a = {e,b}, a*b = a, b*b = e. Hom of this into itself has
// empty star cells.
Hypergroup empty_star_source() {
  Table t(3);
  t.set_identity_cells();
  t.at(1, 1) = {0, 2};
  t.at(1, 2) = {1};
  t.at(2, 1) = {1};
  t.at(2, 2) = {0};
  return Hypergroup::from_table(t);
}

std::vector<Hypergroup> small_tests() { return enumerate_up_to(3); }

}  // namespace

TEST(HomStructure, K2IntoK2) {
  const auto k2 = fx::K2();
  const HomStructure s = hom_structure(k2, k2);
  ASSERT_EQ(s.size(), 2U);
  EXPECT_TRUE(s.elements[s.neutral].is_zero());
  const std::size_t id = 1 - s.neutral;
  EXPECT_EQ(s.elements[id], Morphism::identity(k2));
  EXPECT_EQ(s.at(s.neutral, id), ElementSet::singleton(id));
  EXPECT_EQ(s.at(id, id), (ElementSet{0, 1}));
  EXPECT_TRUE(s.report.passed());
  EXPECT_TRUE(s.associative);
  const auto t = hom_table(s);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(are_isomorphic(Hypergroup::from_table(*t), k2).has_value());
}

TEST(HomStructure, TrivialEnds) {
  for (const auto& g : {fx::V3(), fx::S3(), fx::K2()}) {
    EXPECT_EQ(hom_structure(fx::T(), g).size(), 1U);
    EXPECT_EQ(hom_structure(g, fx::T()).size(), 1U);
    EXPECT_TRUE(hom_structure(g, fx::T()).report.passed());
  }
}

TEST(HomStructure, ZeroIsNeutralAndInverseIsInvolution) {
  const auto gs = enumerate_up_to(2);
  for (const auto& g : gs)
    for (const auto& h : enumerate_up_to(3)) {
      const HomStructure s = hom_structure(g, h);
      for (std::size_t f = 0; f < s.size(); ++f) {
        EXPECT_EQ(s.at(s.neutral, f), ElementSet::singleton(f));
        if (s.inv[f]) {
          EXPECT_EQ(s.inv[*s.inv[f]], f);
        }
      }
    }
}

TEST(HomStructure, InverseCanBeMissingIntoNonAbelian) {
  // r(id)(x) = x^-1 reverses products, so it is not an endomorphism of S3.
  const auto s3 = fx::S3();
  const HomStructure s = hom_structure(s3, s3);
  const auto id = s.index_of(Morphism::identity(s3).map());
  ASSERT_TRUE(id.has_value());
  EXPECT_FALSE(s.inv[*id].has_value());
  EXPECT_TRUE(has_tag(s.report, "inverse"));
  EXPECT_FALSE(hom_table(s).has_value());
}

TEST(HomStructure, StarCellsCanBeEmpty) {
  const auto g = empty_star_source();
  const HomStructure s = hom_structure(g, g);
  EXPECT_EQ(s.size(), 4U);
  EXPECT_TRUE(has_tag(s.report, "nonempty"));
  EXPECT_FALSE(has_tag(s.report, "i"));
  EXPECT_FALSE(has_tag(s.report, "ii"));
  bool empty = false;
  for (const auto& c : s.star) empty = empty || c.empty();
  EXPECT_TRUE(empty);
  EXPECT_FALSE(hom_table(s).has_value());
}

TEST(HomStructure, AxiomsIAndIIOverOrderThreePairs) {
  std::size_t with_empty = 0;
  for (const auto& g : enumerate_up_to(3))
    for (const auto& h : enumerate_up_to(3)) {
      const HomStructure s = hom_structure(g, h);
      EXPECT_FALSE(has_tag(s.report, "i"));
      EXPECT_FALSE(has_tag(s.report, "ii"));
      with_empty += has_tag(s.report, "nonempty");
    }
  EXPECT_EQ(with_empty, 2U);
}

TEST(Bilinearity, HoldsOnSmallTriples) {
  EXPECT_TRUE(bilinearity_check(fx::K2(), fx::K2(), fx::K2()).passed());
  EXPECT_TRUE(bilinearity_check(fx::Z2(), fx::K2(), fx::V3()).passed());
  EXPECT_TRUE(bilinearity_check(fx::T(), fx::V3(), fx::K2()).passed());
}

TEST(ImageFull, Examples) {
  EXPECT_TRUE(check_image_full(fx::v3_inclusion()));
  EXPECT_TRUE(check_image_full(fx::v3_to_k2()));
  EXPECT_TRUE(check_image_full(Morphism::identity(fx::V3())));
  EXPECT_TRUE(check_image_full(Morphism::zero(fx::K2(), fx::V3())));
}

TEST(UniversalKernel, PassesOnExamples) {
  const auto tests = small_tests();
  EXPECT_TRUE(universal_kernel_check(fx::v3_to_k2(), tests).passed());
  EXPECT_TRUE(universal_kernel_check(Morphism::identity(fx::K2()), tests).passed());
  EXPECT_TRUE(universal_kernel_check(Morphism::zero(fx::V3(), fx::K2()), tests).passed());
}

TEST(UniversalCokernel, PassesOnExamples) {
  const auto tests = small_tests();
  EXPECT_TRUE(universal_cokernel_check(fx::v3_inclusion(), tests).passed());
  EXPECT_TRUE(universal_cokernel_check(Morphism::zero(fx::K2(), fx::V3()), tests).passed());
  const Morphism nonfull = Morphism::create(fx::K2(), fx::V3(), {0, 2});
  EXPECT_TRUE(universal_cokernel_check(nonfull, tests, {.force_generated = true}).passed());
}

TEST(Biproduct, TrivialSummandPasses) {
  const auto tests = small_tests();
  for (const auto& g : enumerate_up_to(2)) EXPECT_TRUE(biproduct_check(fx::T(), g, tests).passed());
}

TEST(Biproduct, CoproductMediatorIsNotUnique) {
  // Z2 (+) Z2 -> K2 restricting to g -> g on both summands: (g,g) may go to
  // e or to g, and both choices are morphisms.
  const CheckReport r = biproduct_check(fx::Z2(), fx::Z2(), {fx::K2()});
  ASSERT_FALSE(r.passed());
  EXPECT_TRUE(has_tag(r, "coproduct"));
  EXPECT_FALSE(has_tag(r, "product"));

  const auto sum = direct_sum({fx::Z2(), fx::Z2()}).object;
  const auto gg = sum.find("g.g");
  ASSERT_TRUE(gg.has_value());
  std::size_t mediators = 0;
  for (const auto& m : enumerate_hom(sum, fx::K2()))
    if (m.at(*sum.find("g.e")) == 1 && m.at(*sum.find("e.g")) == 1) ++mediators;
  EXPECT_EQ(mediators, 2U);
}

TEST(ZeroObject, TrivialIsZero) {
  EXPECT_TRUE(zero_object_check({fx::T(), fx::V3(), fx::S3(), fx::K2()}).passed());
}

TEST(Exactness, ShortExactFromSubhypergroup) {
  const auto v3 = fx::V3();
  const auto q = quotient(v3, fx::sub(v3, {0, 1}));
  const Morphism inc = fx::v3_inclusion();
  const ExactSequence s{{inc.dom(), v3, q.quotient},
                        {inc, q.projection},
                        {}};
  EXPECT_TRUE(exactness_check(s).passed());
}

TEST(Exactness, ZeroThenIdentityIsExact) {
  for (const auto& g : {fx::K2(), fx::V3(), fx::Z2()}) {
    EXPECT_TRUE(
        exactness_check({{fx::T(), g, g}, {Morphism::zero(fx::T(), g), Morphism::identity(g)}, {}})
            .passed());
    EXPECT_TRUE(
        exactness_check({{g, g, fx::T()}, {Morphism::identity(g), Morphism::zero(g, fx::T())}, {}})
            .passed());
  }
}

TEST(Exactness, FailuresAndMalformedInput) {
  const auto v3 = fx::V3();
  const CheckReport r = exactness_check(
      {{v3, v3, v3}, {Morphism::identity(v3), Morphism::identity(v3)}, {}});
  EXPECT_TRUE(has_tag(r, "composite"));
  EXPECT_TRUE(has_tag(r, "exact"));
  EXPECT_THROW(exactness_check({{v3}, {}, {}}), domain_error);
  EXPECT_THROW(exactness_check({{fx::S3(), fx::S3()}, {Morphism::identity(fx::S3())}, {}}),
               validation_error);
  const Morphism nonfull = Morphism::create(fx::Z2(), fx::K2(), {0, 1});
  EXPECT_THROW(exactness_check({{fx::Z2(), fx::K2()}, {nonfull}, {true}}), validation_error);
}
