#include "feq/function.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "feq/amalgamation.hpp"
#include "feq/error.hpp"

namespace feq {

namespace {

struct BuiltinEntry {
  BuiltinKind kind;
  const char* name;
};

constexpr std::array<BuiltinEntry, 10> kBuiltins{{
    {BuiltinKind::Identity, "identity"},
    {BuiltinKind::Reverse, "reverse"},
    {BuiltinKind::Sort, "sort"},
    {BuiltinKind::Triangle, "triangle"},
    {BuiltinKind::SwapPairs, "swap_pairs"},
    {BuiltinKind::SwapBlocks, "swap_blocks"},
    {BuiltinKind::UniqueValues, "unique_values"},
    {BuiltinKind::Double, "double"},
    {BuiltinKind::EmptyConst, "empty_const"},
    {BuiltinKind::SquareMultiplicity, "square_multiplicity"},
}};

struct AlphaEntry {
  AlphaKind kind;
  const char* name;
};

constexpr std::array<AlphaEntry, 5> kAlphas{{
    {AlphaKind::Cons, "cons"},
    {AlphaKind::Snoc, "snoc"},
    {AlphaKind::InsertAscending, "insert"},
    {AlphaKind::ConditionalCons, "conditional_cons"},
    {AlphaKind::DuplicateOnOddLength, "duplicate_on_odd_length"},
}};

ListValue apply_builtin(BuiltinKind kind, const ListValue& xs) {
  switch (kind) {
    case BuiltinKind::Identity: return xs;
    case BuiltinKind::Reverse: return reverse(xs);
    case BuiltinKind::Sort: return sort_list(xs);
    case BuiltinKind::Triangle: return triangle(xs);
    case BuiltinKind::SwapPairs: return swap_pairs(xs);
    case BuiltinKind::SwapBlocks: return swap_blocks(xs);
    case BuiltinKind::UniqueValues: return unique_values(xs);
    case BuiltinKind::Double: return concat(xs, xs);
    case BuiltinKind::EmptyConst: return {};
    case BuiltinKind::SquareMultiplicity: return square_multiplicity_counterexample(xs);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown builtin");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ListFunction make(FunctionNode node) {
  return ListFunction(std::make_shared<const FunctionNode>(std::move(node)));
}

}  // namespace

const char* builtin_name(BuiltinKind kind) noexcept {
  for (const auto& e : kBuiltins)
    if (e.kind == kind) return e.name;
  return "unknown";
}

BuiltinKind builtin_from_name(std::string_view name) {
  for (const auto& e : kBuiltins)
    if (name == e.name) return e.kind;
  throw Error(ErrorCode::Parse, "unknown builtin '" + std::string(name) + "'");
}

const char* alpha_name(AlphaKind kind) noexcept {
  for (const auto& e : kAlphas)
    if (e.kind == kind) return e.name;
  return "unknown";
}

AlphaKind alpha_from_name(std::string_view name) {
  for (const auto& e : kAlphas)
    if (name == e.name) return e.kind;
  throw Error(ErrorCode::Parse, "unknown alpha step '" + std::string(name) + "'");
}

Predicate::Predicate(ListValue keep) : keep_(std::move(keep)) {
  std::sort(keep_.begin(), keep_.end());
  keep_.erase(std::unique(keep_.begin(), keep_.end()), keep_.end());
}

Elem EndoMap::operator()(Elem x) const {
  if (x >= table_.size())
    throw Error(ErrorCode::OutOfScope,
                "endo-map has no image for " + std::to_string(x));
  return table_[x];
}

ListValue AlphaStep::operator()(Elem x, const ListValue& acc) const {
  ListValue out;
  switch (kind) {
    case AlphaKind::Cons:
      out.reserve(acc.size() + 1);
      out.push_back(x);
      out.insert(out.end(), acc.begin(), acc.end());
      return out;
    case AlphaKind::Snoc:
      out = acc;
      out.push_back(x);
      return out;
    case AlphaKind::InsertAscending: {
      out = acc;
      auto pos = std::upper_bound(out.begin(), out.end(), x);
      out.insert(pos, x);
      return out;
    }
    case AlphaKind::ConditionalCons:
      if (!keep(x)) return acc;
      out.push_back(x);
      out.insert(out.end(), acc.begin(), acc.end());
      return out;
    case AlphaKind::DuplicateOnOddLength:
      out.push_back(x);
      if (acc.size() % 2 == 1) out.push_back(x);
      out.insert(out.end(), acc.begin(), acc.end());
      return out;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown alpha step");
}

void FunctionTable::validate() const {
  scope.validate();
  const auto universe = lists_in_scope(scope);
  if (universe.size() != entries.size())
    throw Error(ErrorCode::InvalidArgument,
                "table has " + std::to_string(entries.size()) + " entries, scope needs " +
                    std::to_string(universe.size()));
  for (const auto& xs : universe)
    if (!entries.count(xs))
      throw Error(ErrorCode::InvalidArgument, "table missing entry for " + to_string(xs));
}

ListFunction::ListFunction(std::shared_ptr<const FunctionNode> node) : node_(std::move(node)) {
  if (!node_) throw Error(ErrorCode::InvalidArgument, "null function node");
}

ListFunction ListFunction::builtin(BuiltinKind kind) { return make({fn::Builtin{kind}}); }
ListFunction ListFunction::inflate(unsigned n) { return make({fn::Inflate{n}}); }
ListFunction ListFunction::filter_by(Predicate phi) { return make({fn::FilterBy{std::move(phi)}}); }
ListFunction ListFunction::map_by(EndoMap psi) { return make({fn::MapBy{std::move(psi)}}); }
ListFunction ListFunction::nfe(NfeTerm term) { return make({fn::Nfe{std::move(term)}}); }
ListFunction ListFunction::foldr_alpha(AlphaStep alpha) {
  return make({fn::FoldrAlpha{std::move(alpha)}});
}

ListFunction ListFunction::table(FunctionTable table) {
  table.validate();
  return make({fn::Table{std::make_shared<const FunctionTable>(std::move(table))}});
}

ListFunction ListFunction::compose(ListFunction outer, ListFunction inner) {
  return make({fn::Compose{std::move(outer), std::move(inner)}});
}

ListFunction ListFunction::pointwise_concat(ListFunction left, ListFunction right) {
  return make({fn::PointwiseConcat{std::move(left), std::move(right)}});
}

ListValue ListFunction::operator()(const ListValue& xs) const {
  return std::visit(
      Overloaded{
          [&](const fn::Builtin& b) { return apply_builtin(b.kind, xs); },
          [&](const fn::Inflate& i) { return feq::inflate(i.n, xs); },
          [&](const fn::FilterBy& f) { return filter_list(f.phi, xs); },
          [&](const fn::MapBy& m) { return map_list(m.psi, xs); },
          [&](const fn::Nfe& n) { return n.term(xs); },
          [&](const fn::FoldrAlpha& a) { return foldr_apply(a.alpha, xs); },
          [&](const fn::Table& t) {
            auto it = t.table->entries.find(xs);
            if (it == t.table->entries.end())
              throw Error(ErrorCode::OutOfScope, "table has no entry for " + to_string(xs));
            return it->second;
          },
          [&](const fn::Compose& c) { return c.outer(c.inner(xs)); },
          [&](const fn::PointwiseConcat& p) { return concat(p.left(xs), p.right(xs)); },
      },
      node_->value);
}

std::string ListFunction::describe() const {
  return std::visit(
      Overloaded{
          [](const fn::Builtin& b) { return std::string(builtin_name(b.kind)); },
          [](const fn::Inflate& i) { return "inflate " + std::to_string(i.n); },
          [](const fn::FilterBy& f) { return "filter" + to_string(f.phi.keep()); },
          [](const fn::MapBy& m) { return "map" + to_string(m.psi.table()); },
          [](const fn::Nfe& n) { return "[[" + n.term.to_string() + "]]"; },
          [](const fn::FoldrAlpha& a) {
            std::string s = "foldr " + std::string(alpha_name(a.alpha.kind));
            if (a.alpha.kind == AlphaKind::ConditionalCons) s += to_string(a.alpha.keep.keep());
            return s;
          },
          [](const fn::Table& t) {
            return "table(" + std::to_string(t.table->entries.size()) + " entries)";
          },
          [](const fn::Compose& c) {
            return "(" + c.outer.describe() + " . " + c.inner.describe() + ")";
          },
          [](const fn::PointwiseConcat& p) {
            return "(" + p.left.describe() + " ++ " + p.right.describe() + ")";
          },
      },
      node_->value);
}

bool operator==(const ListFunction& a, const ListFunction& b) {
  return a.node_ == b.node_ || a.node_->value == b.node_->value;
}

ListValue apply(const ListFunction& f, const ListValue& xs) { return f(xs); }

ListFunction pointwise_concat(ListFunction f, ListFunction g) {
  return ListFunction::pointwise_concat(std::move(f), std::move(g));
}

ListFunction compose(ListFunction f, ListFunction g) {
  return ListFunction::compose(std::move(f), std::move(g));
}

ListFunction foldr_fe(AlphaStep alpha) { return ListFunction::foldr_alpha(std::move(alpha)); }

ListValue foldr_apply(const AlphaStep& alpha, const ListValue& xs) {
  ListValue acc;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = alpha(*it, acc);
  return acc;
}

Report alpha_condition_check(const AlphaStep& alpha, const Scope& scope) {
  Report report{"alpha_conditions", scope, Verdict::Pass, {}, {}};
  // Only accumulators that foldr can actually build are quantified over.
  std::vector<ListValue> accs;
  for (const auto& ys : lists_in_scope(scope)) accs.push_back(foldr_apply(alpha, ys));
  std::sort(accs.begin(), accs.end(), shortlex_less);
  accs.erase(std::unique(accs.begin(), accs.end()), accs.end());
  const auto predicates = predicate_universe(scope.alphabet_size);
  for (const auto& xs : accs) {
    for (Elem x = 0; x < scope.alphabet_size; ++x) {
      const ListValue stepped = alpha(x, xs);
      for (const auto& keep : predicates) {
        const Predicate phi(keep);
        ListValue lhs = filter_list(phi, stepped);
        ListValue rhs = phi(x) ? alpha(x, filter_list(phi, xs)) : filter_list(phi, xs);
        if (lhs != rhs) report.add({xs, Transform::alpha(x, keep), std::move(lhs), std::move(rhs)});
      }
    }
  }
  return report;
}

std::optional<ListValue> first_disagreement(const ListFunction& f, const ListFunction& g,
                                            const Scope& scope) {
  for (const auto& xs : lists_in_scope(scope))
    if (f(xs) != g(xs)) return xs;
  return std::nullopt;
}

bool functions_equal_at_scope(const ListFunction& f, const ListFunction& g, const Scope& scope) {
  return !first_disagreement(f, g, scope).has_value();
}

}  // namespace feq
