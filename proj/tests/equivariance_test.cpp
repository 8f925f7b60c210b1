#include <feq/equivariance.hpp>
#include <feq/error.hpp>
#include <feq/function.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using feq::BuiltinKind;
using feq::ListFunction;
using feq::ListValue;
using feq::Verdict;

namespace {

const feq::Scope kDefault{3, 5};

ListFunction b(BuiltinKind k) { return ListFunction::builtin(k); }

ListValue drop_two(const ListValue& xs) {
  return xs.size() <= 2 ? ListValue{} : ListValue(xs.begin() + 2, xs.end());
}

// Recomputes a witness from scratch with the naive oracles.
void expect_sound(const ListFunction& f, const feq::Witness& w) {
  using K = feq::Transform::Kind;
  ListValue lhs, rhs;
  switch (w.transform.kind) {
    case K::Filter:
      lhs = oracle::filter(w.transform.data, f(w.input));
      rhs = f(oracle::filter(w.transform.data, w.input));
      break;
    case K::Map:
      lhs = oracle::map(w.transform.data, f(w.input));
      rhs = f(oracle::map(w.transform.data, w.input));
      break;
    case K::Tail: {
      ListValue fx = f(w.input);
      lhs = f(ListValue(w.input.begin() + 1, w.input.end()));
      rhs = ListValue(fx.begin() + 1, fx.end());
      break;
    }
    default:
      FAIL() << "unexpected transform kind";
  }
  EXPECT_EQ(lhs, w.lhs);
  EXPECT_EQ(rhs, w.rhs);
  EXPECT_NE(lhs, rhs);
}

}  // namespace

TEST(Equivariance, MapExamples) {
  EXPECT_TRUE(feq::check_map_equivariant(b(BuiltinKind::Reverse), kDefault).passed());
  EXPECT_TRUE(feq::check_map_equivariant(b(BuiltinKind::Triangle), kDefault).passed());
  auto sort = feq::check_map_equivariant(b(BuiltinKind::Sort), kDefault);
  ASSERT_EQ(sort.verdict, Verdict::Fail);
  EXPECT_EQ(sort.witnesses.front().input, (ListValue{0, 1}));
  for (const auto& w : sort.witnesses) expect_sound(b(BuiltinKind::Sort), w);
}

TEST(Equivariance, FilterExamples) {
  EXPECT_TRUE(feq::check_filter_equivariant(b(BuiltinKind::Reverse), kDefault).passed());
  EXPECT_TRUE(feq::check_filter_equivariant(b(BuiltinKind::Sort), kDefault).passed());
  auto tri = feq::check_filter_equivariant(b(BuiltinKind::Triangle), kDefault);
  ASSERT_EQ(tri.verdict, Verdict::Fail);
  const auto& w = tri.witnesses.front();
  EXPECT_EQ(w.input, (ListValue{0, 1}));
  EXPECT_EQ(w.transform, feq::Transform::filter({1}));
  EXPECT_EQ(w.lhs, (ListValue{1, 1}));
  EXPECT_EQ(w.rhs, (ListValue{1}));
  for (const auto& x : tri.witnesses) expect_sound(b(BuiltinKind::Triangle), x);
}

TEST(Equivariance, TailExamples) {
  for (const auto& table : feq::endo_map_universe(3))
    EXPECT_TRUE(feq::check_tail_equivariant(ListFunction::map_by(feq::EndoMap(table)), kDefault)
                    .passed());
  auto rev = feq::check_tail_equivariant(b(BuiltinKind::Reverse), kDefault);
  ASSERT_EQ(rev.verdict, Verdict::Fail);
  for (const auto& w : rev.witnesses) expect_sound(b(BuiltinKind::Reverse), w);
  auto dropper = ListFunction::tabulate(kDefault, drop_two);
  EXPECT_TRUE(feq::check_tail_equivariant(dropper, kDefault).passed());
  EXPECT_TRUE(feq::check_tail_equivariant(ListFunction::identity(), kDefault).passed());
  EXPECT_FALSE(feq::check_tail_equivariant(b(BuiltinKind::Sort), kDefault).passed());
}

TEST(Equivariance, NoNewValues) {
  for (auto k : {BuiltinKind::Reverse, BuiltinKind::Sort, BuiltinKind::EmptyConst,
                 BuiltinKind::Identity, BuiltinKind::SquareMultiplicity})
    EXPECT_TRUE(feq::check_no_new_values(b(k), kDefault).passed());
  auto const0 = ListFunction::tabulate(kDefault, [](const ListValue&) { return ListValue{0}; });
  auto rep = feq::check_no_new_values(const0, kDefault);
  ASSERT_EQ(rep.verdict, Verdict::Fail);
  bool saw_one = false;
  for (const auto& w : rep.witnesses) saw_one |= w.input == ListValue{1};
  EXPECT_TRUE(saw_one);
  EXPECT_EQ(rep.witnesses.front().input, ListValue{});
}

TEST(Equivariance, NfeCounts) {
  auto rev = feq::check_nfe_counts(b(BuiltinKind::Reverse), kDefault);
  EXPECT_TRUE(rev.passed());
  EXPECT_NE(rev.note.find("k=1"), std::string::npos);
  auto inf3 = feq::check_nfe_counts(ListFunction::inflate(3), kDefault);
  EXPECT_TRUE(inf3.passed());
  EXPECT_NE(inf3.note.find("k=3"), std::string::npos);
  auto rr = feq::check_nfe_counts(
      feq::pointwise_concat(b(BuiltinKind::Reverse), b(BuiltinKind::Reverse)), kDefault);
  EXPECT_TRUE(rr.passed());
  EXPECT_NE(rr.note.find("k=2"), std::string::npos);
  EXPECT_EQ(feq::check_nfe_counts(b(BuiltinKind::Sort), kDefault).verdict,
            Verdict::PreconditionFailed);
  EXPECT_EQ(feq::check_nfe_counts(b(BuiltinKind::Triangle), kDefault).verdict,
            Verdict::PreconditionFailed);
}

TEST(Equivariance, KnownClassifications) {
  struct Row {
    ListFunction f;
    bool map;
    bool filter;
  };
  std::vector<Row> rows{
      {b(BuiltinKind::Reverse), true, true},
      {ListFunction::inflate(2), true, true},
      {b(BuiltinKind::Sort), false, true},
      {ListFunction::filter_by(feq::Predicate({0, 2})), false, true},
      {b(BuiltinKind::Triangle), true, false},
      {b(BuiltinKind::SwapPairs), true, false},
      {b(BuiltinKind::SwapBlocks), true, false},
      {b(BuiltinKind::UniqueValues), false, true},
  };
  for (const auto& r : rows) {
    SCOPED_TRACE(r.f.describe());
    EXPECT_EQ(feq::check_map_equivariant(r.f, kDefault).passed(), r.map);
    EXPECT_EQ(feq::check_filter_equivariant(r.f, kDefault).passed(), r.filter);
  }
}

TEST(Equivariance, WitnessesAreSound) {
  for (auto k : {BuiltinKind::Sort, BuiltinKind::Triangle, BuiltinKind::SwapPairs,
                 BuiltinKind::SwapBlocks}) {
    auto f = b(k);
    for (const auto& rep : {feq::check_map_equivariant(f, {3, 4}),
                            feq::check_filter_equivariant(f, {3, 4}),
                            feq::check_tail_equivariant(f, {3, 4})}) {
      EXPECT_EQ(rep.verdict == Verdict::Fail, !rep.witnesses.empty());
      for (const auto& w : rep.witnesses) expect_sound(f, w);
    }
  }
}

TEST(Equivariance, WitnessOrderIsShortlex) {
  auto rep = feq::check_filter_equivariant(b(BuiltinKind::SwapPairs), {3, 4});
  for (std::size_t i = 1; i < rep.witnesses.size(); ++i)
    EXPECT_FALSE(feq::shortlex_less(rep.witnesses[i].input, rep.witnesses[i - 1].input));
}

TEST(Equivariance, FailureIsMonotoneInScope) {
  const std::vector<feq::Scope> ladder{{3, 3}, {3, 4}, {4, 3}, {3, 5}, {4, 4}};
  for (auto k : {BuiltinKind::Triangle, BuiltinKind::SwapPairs, BuiltinKind::SwapBlocks}) {
    ASSERT_FALSE(feq::check_filter_equivariant(b(k), ladder.front()).passed());
    for (const auto& s : ladder) EXPECT_FALSE(feq::check_filter_equivariant(b(k), s).passed());
  }
  ASSERT_FALSE(feq::check_map_equivariant(b(BuiltinKind::Sort), ladder.front()).passed());
  for (const auto& s : ladder)
    EXPECT_FALSE(feq::check_map_equivariant(b(BuiltinKind::Sort), s).passed());
}

TEST(Equivariance, FilterPassImpliesEmptyToEmpty) {
  std::vector<ListFunction> fs{b(BuiltinKind::Reverse), b(BuiltinKind::Sort),
                               b(BuiltinKind::EmptyConst), b(BuiltinKind::Double),
                               b(BuiltinKind::SquareMultiplicity), ListFunction::inflate(3)};
  for (const auto& keep : feq::predicate_universe(3))
    fs.push_back(ListFunction::filter_by(feq::Predicate(keep)));
  for (const auto& f : fs) {
    ASSERT_TRUE(feq::check_filter_equivariant(f, kDefault).passed()) << f.describe();
    EXPECT_EQ(f({}), ListValue{});
  }
}

TEST(Equivariance, TableOutsideScopeThrows) {
  auto small = ListFunction::tabulate({2, 2}, [](const ListValue& xs) { return xs; });
  try {
    feq::check_filter_equivariant(small, kDefault);
    FAIL() << "expected OutOfScope";
  } catch (const feq::Error& e) {
    EXPECT_EQ(e.code(), feq::ErrorCode::OutOfScope);
  }
}

TEST(Equivariance, LawNames) {
  for (auto l : {feq::Law::Map, feq::Law::Filter, feq::Law::Tail, feq::Law::NoNewValues,
                 feq::Law::NfeCounts, feq::Law::MultisetProfile})
    EXPECT_EQ(feq::law_from_name(feq::law_name(l)), l);
  EXPECT_THROW(feq::law_from_name("bogus"), feq::Error);
  EXPECT_EQ(feq::check_law(b(BuiltinKind::Reverse), feq::Law::Tail, {2, 3}).verdict,
            Verdict::Fail);
}
