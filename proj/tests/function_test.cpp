#include <feq/equivariance.hpp>
#include <feq/error.hpp>
#include <feq/function.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using feq::BuiltinKind;
using feq::ListFunction;
using feq::ListValue;

namespace {

ListFunction b(BuiltinKind k) { return ListFunction::builtin(k); }

const feq::Scope kSmall{3, 4};

std::vector<ListFunction> fe_sample() {
  return {b(BuiltinKind::Identity),
          b(BuiltinKind::Reverse),
          b(BuiltinKind::Sort),
          b(BuiltinKind::EmptyConst),
          ListFunction::inflate(2),
          ListFunction::filter_by(feq::Predicate({0, 2}))};
}

}  // namespace

TEST(Function, ApplyExamples) {
  EXPECT_EQ(feq::apply(b(BuiltinKind::Reverse), {1, 2, 3}), (ListValue{3, 2, 1}));
  auto idid = feq::pointwise_concat(ListFunction::identity(), ListFunction::identity());
  EXPECT_EQ(feq::apply(idid, {1, 2}), (ListValue{1, 2, 1, 2}));
  auto rr = feq::compose(b(BuiltinKind::Reverse), b(BuiltinKind::Reverse));
  EXPECT_EQ(feq::apply(rr, {4, 5}), (ListValue{4, 5}));
  EXPECT_EQ(feq::apply(b(BuiltinKind::Double), {1, 2}), (ListValue{1, 2, 1, 2}));
  EXPECT_EQ(feq::apply(b(BuiltinKind::Triangle), {3, 7, 5}), (ListValue{3, 7, 7, 5, 5, 5}));
  EXPECT_EQ(feq::apply(ListFunction::map_by(feq::EndoMap({1, 2, 0})), {0, 1, 2}),
            (ListValue{1, 2, 0}));
}

TEST(Function, PointwiseConcatExamples) {
  auto ri = feq::pointwise_concat(b(BuiltinKind::Reverse), ListFunction::identity());
  EXPECT_EQ(ri({1, 2}), (ListValue{2, 1, 1, 2}));
  auto rr = feq::pointwise_concat(b(BuiltinKind::Reverse), b(BuiltinKind::Reverse));
  EXPECT_EQ(rr({1, 2}), (ListValue{2, 1, 2, 1}));
  for (const auto& f : fe_sample())
    EXPECT_TRUE(feq::functions_equal_at_scope(
        feq::pointwise_concat(b(BuiltinKind::EmptyConst), f), f, kSmall));
}

TEST(Function, ComposeExamples) {
  auto ri2 = feq::compose(b(BuiltinKind::Reverse), ListFunction::inflate(2));
  EXPECT_EQ(ri2({1, 2}), (ListValue{2, 2, 1, 1}));
  for (const auto& f : fe_sample())
    EXPECT_TRUE(feq::functions_equal_at_scope(feq::compose(ListFunction::identity(), f), f, kSmall));
  auto even = ListFunction::filter_by(feq::Predicate({0, 2}));
  EXPECT_TRUE(feq::functions_equal_at_scope(feq::compose(even, b(BuiltinKind::Reverse)),
                                            feq::compose(b(BuiltinKind::Reverse), even), kSmall));
}

TEST(Function, MonoidLawsAtScope) {
  auto fs = fe_sample();
  const feq::Scope s{3, 3};
  for (const auto& f : fs) {
    EXPECT_TRUE(feq::functions_equal_at_scope(
        feq::pointwise_concat(f, b(BuiltinKind::EmptyConst)), f, s));
    EXPECT_TRUE(feq::functions_equal_at_scope(feq::compose(f, ListFunction::identity()), f, s));
    for (const auto& g : fs)
      for (const auto& h : fs) {
        EXPECT_TRUE(feq::functions_equal_at_scope(
            feq::pointwise_concat(feq::pointwise_concat(f, g), h),
            feq::pointwise_concat(f, feq::pointwise_concat(g, h)), s));
        EXPECT_TRUE(feq::functions_equal_at_scope(feq::compose(feq::compose(f, g), h),
                                                  feq::compose(f, feq::compose(g, h)), s));
      }
  }
}

TEST(Function, ClosureUnderConcatAndCompose) {
  auto fs = fe_sample();
  const feq::Scope s{3, 4};
  for (const auto& f : fs) ASSERT_TRUE(feq::check_filter_equivariant(f, s).passed());
  for (const auto& f : fs)
    for (const auto& g : fs) {
      EXPECT_TRUE(feq::check_filter_equivariant(feq::pointwise_concat(f, g), s).passed());
      EXPECT_TRUE(feq::check_filter_equivariant(feq::compose(f, g), s).passed());
    }
}

TEST(Function, FoldrExamples) {
  feq::AlphaStep insert{feq::AlphaKind::InsertAscending, {}};
  EXPECT_EQ(feq::foldr_apply(insert, {3, 1, 2}), (ListValue{1, 2, 3}));
  feq::AlphaStep even{feq::AlphaKind::ConditionalCons, feq::Predicate({0, 2, 4})};
  EXPECT_EQ(feq::foldr_apply(even, {1, 2, 3, 4}), (ListValue{2, 4}));
  for (auto k : {feq::AlphaKind::Cons, feq::AlphaKind::Snoc, feq::AlphaKind::InsertAscending,
                 feq::AlphaKind::ConditionalCons, feq::AlphaKind::DuplicateOnOddLength})
    EXPECT_EQ(feq::foldr_apply({k, {}}, {}), ListValue{});
  EXPECT_EQ(feq::foldr_apply({feq::AlphaKind::Cons, {}}, {1, 2, 3}), (ListValue{1, 2, 3}));
  EXPECT_EQ(feq::foldr_apply({feq::AlphaKind::Snoc, {}}, {1, 2, 3}), (ListValue{3, 2, 1}));
  EXPECT_EQ(feq::foldr_fe(insert)({2, 0, 1, 0}), (ListValue{0, 0, 1, 2}));
}

TEST(Function, AlphaConditions) {
  EXPECT_TRUE(feq::alpha_condition_check({feq::AlphaKind::InsertAscending, {}}, {3, 4}).passed());
  EXPECT_TRUE(feq::alpha_condition_check({feq::AlphaKind::Cons, {}}, {3, 4}).passed());
  EXPECT_TRUE(feq::alpha_condition_check({feq::AlphaKind::Snoc, {}}, {3, 4}).passed());
  for (const auto& keep : feq::predicate_universe(3))
    EXPECT_TRUE(feq::alpha_condition_check(
                    {feq::AlphaKind::ConditionalCons, feq::Predicate(keep)}, {3, 4})
                    .passed());
  feq::AlphaStep broken{feq::AlphaKind::DuplicateOnOddLength, {}};
  auto rep = feq::alpha_condition_check(broken, {3, 4});
  EXPECT_EQ(rep.verdict, feq::Verdict::Fail);
  ASSERT_FALSE(rep.witnesses.empty());
  for (const auto& w : rep.witnesses) {
    EXPECT_NE(w.lhs, w.rhs);
    ASSERT_EQ(w.transform.kind, feq::Transform::Kind::Alpha);
    ASSERT_TRUE(w.transform.element.has_value());
    // re-evaluate the left side: filter phi (alpha x xs)
    ListValue stepped = broken(*w.transform.element, w.input);
    EXPECT_EQ(oracle::filter(w.transform.data, stepped), w.lhs);
  }
}

TEST(Function, FoldrFromPassingAlphaIsFe) {
  const feq::Scope s{3, 4};
  for (auto k : {feq::AlphaKind::Cons, feq::AlphaKind::Snoc, feq::AlphaKind::InsertAscending}) {
    feq::AlphaStep a{k, {}};
    ASSERT_TRUE(feq::alpha_condition_check(a, s).passed());
    EXPECT_TRUE(feq::check_filter_equivariant(feq::foldr_fe(a), s).passed());
  }
  feq::AlphaStep c{feq::AlphaKind::ConditionalCons, feq::Predicate({1})};
  EXPECT_TRUE(feq::check_filter_equivariant(feq::foldr_fe(c), s).passed());
  EXPECT_FALSE(feq::check_filter_equivariant(
                   feq::foldr_fe({feq::AlphaKind::DuplicateOnOddLength, {}}), s)
                   .passed());
}

TEST(Function, EqualityAtScope) {
  EXPECT_TRUE(feq::functions_equal_at_scope(
      b(BuiltinKind::Double),
      feq::pointwise_concat(ListFunction::identity(), ListFunction::identity()), kSmall));
  const feq::Scope s22{2, 2};
  EXPECT_FALSE(feq::functions_equal_at_scope(b(BuiltinKind::Reverse), ListFunction::identity(), s22));
  auto d = feq::first_disagreement(b(BuiltinKind::Reverse), ListFunction::identity(), s22);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (ListValue{0, 1}));
  auto p2 = ListFunction::nfe(feq::NfeTerm({{feq::Sign::Pos, 2}}));
  EXPECT_TRUE(feq::functions_equal_at_scope(p2, ListFunction::inflate(2), kSmall));
}

TEST(Function, TableScope) {
  const feq::Scope s{2, 2};
  auto t = ListFunction::tabulate(s, [](const ListValue& xs) { return feq::reverse(xs); });
  EXPECT_TRUE(feq::functions_equal_at_scope(t, b(BuiltinKind::Reverse), s));
  try {
    t({0, 0, 0});
    FAIL() << "table applied outside its scope";
  } catch (const feq::Error& e) {
    EXPECT_EQ(e.code(), feq::ErrorCode::OutOfScope);
  }
  feq::FunctionTable partial{s, {{ListValue{}, ListValue{}}}};
  EXPECT_THROW(ListFunction::table(partial), feq::Error);
}

TEST(Function, NamesAndEquality) {
  for (int i = 0; i <= static_cast<int>(BuiltinKind::SquareMultiplicity); ++i) {
    auto k = static_cast<BuiltinKind>(i);
    EXPECT_EQ(feq::builtin_from_name(feq::builtin_name(k)), k);
  }
  EXPECT_THROW(feq::builtin_from_name("nope"), feq::Error);
  EXPECT_EQ(feq::compose(b(BuiltinKind::Sort), ListFunction::inflate(2)),
            feq::compose(b(BuiltinKind::Sort), ListFunction::inflate(2)));
  EXPECT_FALSE(feq::compose(b(BuiltinKind::Sort), ListFunction::inflate(2)) ==
               feq::compose(ListFunction::inflate(2), b(BuiltinKind::Sort)));
  EXPECT_FALSE(b(BuiltinKind::Reverse).describe().empty());
}
