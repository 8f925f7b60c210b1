#include <feq/error.hpp>
#include <feq/function.hpp>
#include <feq/nfe_term.hpp>
#include <feq/simplicial.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using feq::Inclusion;
using feq::ListFunction;
using feq::PermFamily;
using feq::Permutation;

namespace {

using Image = std::vector<std::size_t>;

std::vector<Permutation> all_perms(std::size_t n) {
  Image img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

PermFamily family(unsigned k, std::vector<Image> images) {
  PermFamily f{k, {}};
  for (auto& i : images) f.members.emplace_back(std::move(i));
  return f;
}

}  // namespace

TEST(Simplicial, PermutationValidation) {
  EXPECT_THROW(Permutation({0, 0}), feq::Error);
  EXPECT_THROW(Permutation({1, 2}), feq::Error);
  EXPECT_EQ(Permutation::identity(3).image(), (Image{0, 1, 2}));
  try {
    Inclusion({1, 0}, 3);
    FAIL() << "non-increasing inclusion accepted";
  } catch (const feq::Error& e) {
    EXPECT_EQ(e.code(), feq::ErrorCode::InvalidInclusion);
  }
  EXPECT_THROW(Inclusion({0, 3}, 3), feq::Error);
  EXPECT_EQ(Inclusion({0, 2}, 3).expand(2).points(), (Image{0, 1, 4, 5}));
  EXPECT_EQ(feq::all_inclusions(2, 4).size(), 6u);
  EXPECT_EQ(feq::all_inclusions(0, 3).size(), 1u);
}

TEST(Simplicial, RestrictionExamples) {
  EXPECT_EQ(feq::restrict_perm(Permutation({2, 1, 0}), Inclusion({0, 2}, 3)).image(),
            (Image{1, 0}));
  for (const auto& inc : feq::all_inclusions(2, 4))
    EXPECT_EQ(feq::restrict_perm(Permutation::identity(4), inc), Permutation::identity(2));
  EXPECT_EQ(feq::restrict_perm(Permutation({1, 0}), Inclusion({0}, 2)).image(), (Image{0}));
  EXPECT_EQ(feq::restrict_perm_k(Permutation({2, 3, 0, 1}), Inclusion({0}, 2), 2).image(),
            (Image{0, 1}));
  for (const auto& p : all_perms(4))
    for (const auto& inc : feq::all_inclusions(2, 4))
      EXPECT_EQ(feq::restrict_perm_k(p, inc, 1), feq::restrict_perm(p, inc));
  for (const auto& inc : feq::all_inclusions(1, 3))
    EXPECT_EQ(feq::restrict_perm_k(Permutation::identity(6), inc, 2), Permutation::identity(2));
}

TEST(Simplicial, RestrictionIsFunctorial) {
  for (std::size_t l = 0; l <= 5; ++l) {
    auto perms = all_perms(l);
    for (std::size_t m = 0; m <= l; ++m)
      for (std::size_t n = 0; n <= m; ++n)
        for (const auto& outer : feq::all_inclusions(m, l))
          for (const auto& inner : feq::all_inclusions(n, m)) {
            auto both = feq::compose(outer, inner);
            for (const auto& p : perms)
              ASSERT_EQ(feq::restrict_perm(feq::restrict_perm(p, outer), inner),
                        feq::restrict_perm(p, both));
          }
  }
}

TEST(Simplicial, ReverseFamily) {
  auto fam = feq::family_of_function(ListFunction::builtin(feq::BuiltinKind::Reverse), 1, 4);
  EXPECT_EQ(fam, family(1, {{}, {0}, {1, 0}, {2, 1, 0}, {3, 2, 1, 0}}));
  EXPECT_TRUE(feq::check_cone(fam).passed());
  auto id = feq::family_of_function(ListFunction::identity(), 1, 4);
  EXPECT_EQ(id, family(1, {{}, {0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}}));
  EXPECT_TRUE(feq::check_cone(id).passed());
}

TEST(Simplicial, KNfeFamiliesAreCoherent) {
  auto rr = feq::family_of_function(
      ListFunction::nfe(feq::NfeTerm({{feq::Sign::Neg, 1}, {feq::Sign::Neg, 1}})), 2, 3);
  EXPECT_EQ(rr.members[2].image(), (Image{2, 0, 3, 1}));
  EXPECT_TRUE(feq::check_cone(rr).passed());
  for (unsigned k = 1; k <= 3; ++k)
    for (const auto& t : feq::enumerate_k_nfes(k)) {
      auto fam = feq::family_of_function(ListFunction::nfe(t), k, 4);
      EXPECT_NO_THROW(fam.validate());
      EXPECT_TRUE(feq::check_cone(fam).passed()) << t.to_string();
    }
}

TEST(Simplicial, NonNfesAreRejected) {
  try {
    feq::family_of_function(ListFunction::builtin(feq::BuiltinKind::Triangle), 1, 4);
    FAIL() << "triangle produced a family";
  } catch (const feq::Error& e) {
    EXPECT_EQ(e.code(), feq::ErrorCode::NotAnNfe);
  }
  auto swapped = feq::family_of_function(ListFunction::builtin(feq::BuiltinKind::SwapPairs), 1, 4);
  EXPECT_FALSE(feq::check_cone(swapped).passed());
}

TEST(Simplicial, IncoherentFamilyWitness) {
  auto bad = family(1, {{}, {0}, {1, 0}, {0, 2, 1}});
  auto rep = feq::check_cone(bad);
  ASSERT_FALSE(rep.passed());
  bool found = false;
  for (const auto& v : rep.violations) {
    EXPECT_NE(v.expected, v.restricted);
    EXPECT_EQ(v.expected, bad.members[v.n]);
    EXPECT_EQ(v.restricted, feq::restrict_perm(bad.members[v.m], Inclusion(v.inclusion, v.m)));
    found |= v.n == 2 && v.m == 3;
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(family(2, {{}, {0}}).validate(), feq::Error);
}
