#ifndef FEQ_FUNCTION_HPP
#define FEQ_FUNCTION_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "feq/lists.hpp"
#include "feq/nfe_term.hpp"
#include "feq/scope.hpp"

namespace feq {

enum class BuiltinKind {
  Identity,
  Reverse,
  Sort,
  Triangle,
  SwapPairs,
  SwapBlocks,
  UniqueValues,
  Double,
  EmptyConst,
  SquareMultiplicity,
};

const char* builtin_name(BuiltinKind kind) noexcept;

/// Throws Error(Parse) for an unknown name.
BuiltinKind builtin_from_name(std::string_view name);

/// A predicate given by the subset of the alphabet it keeps.
class Predicate {
 public:
  Predicate() = default;
  explicit Predicate(ListValue keep);

  bool operator()(Elem x) const { return contains(keep_, x); }
  const ListValue& keep() const { return keep_; }

  friend bool operator==(const Predicate&, const Predicate&) = default;

 private:
  ListValue keep_;  // sorted, distinct
};

/// An endo-map of the alphabet given by its image table.
class EndoMap {
 public:
  EndoMap() = default;
  explicit EndoMap(ListValue table) : table_(std::move(table)) {}

  /// Throws Error(OutOfScope) for x outside the table's domain.
  Elem operator()(Elem x) const;
  const ListValue& table() const { return table_; }

  friend bool operator==(const EndoMap&, const EndoMap&) = default;

 private:
  ListValue table_;
};

/// Steps for foldr-built functions. `foldr step []` yields:
///   Cons -> identity, Snoc -> reverse, InsertAscending -> sort,
///   ConditionalCons -> filter keep.
/// DuplicateOnOddLength deliberately breaks the filter conditions.
enum class AlphaKind { Cons, Snoc, InsertAscending, ConditionalCons, DuplicateOnOddLength };

const char* alpha_name(AlphaKind kind) noexcept;
AlphaKind alpha_from_name(std::string_view name);

struct AlphaStep {
  AlphaKind kind = AlphaKind::Cons;
  Predicate keep;  // ConditionalCons only

  ListValue operator()(Elem x, const ListValue& acc) const;

  friend bool operator==(const AlphaStep&, const AlphaStep&) = default;
};

/// A function known only on an explicit finite scope.
struct FunctionTable {
  Scope scope;
  std::map<ListValue, ListValue> entries;

  /// Throws Error(InvalidArgument) unless the entries cover exactly the scope.
  void validate() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

struct FunctionNode;

/// Immutable, evaluable description of a list function. Copies share nodes.
class ListFunction {
 public:
  explicit ListFunction(std::shared_ptr<const FunctionNode> node);

  static ListFunction builtin(BuiltinKind kind);
  static ListFunction identity() { return builtin(BuiltinKind::Identity); }
  static ListFunction inflate(unsigned n);
  static ListFunction filter_by(Predicate phi);
  static ListFunction map_by(EndoMap psi);
  static ListFunction nfe(NfeTerm term);
  static ListFunction foldr_alpha(AlphaStep alpha);
  static ListFunction table(FunctionTable table);
  /// Tabulates `fn` over every list in scope.
  template <typename Fn>
  static ListFunction tabulate(const Scope& scope, Fn&& fn) {
    FunctionTable t{scope, {}};
    for (const auto& xs : lists_in_scope(scope)) t.entries.emplace(xs, fn(xs));
    return table(std::move(t));
  }
  static ListFunction compose(ListFunction outer, ListFunction inner);
  static ListFunction pointwise_concat(ListFunction left, ListFunction right);

  /// Throws Error(OutOfScope) when a Table is applied outside its scope.
  ListValue operator()(const ListValue& xs) const;

  const FunctionNode& node() const { return *node_; }

  std::string describe() const;

  friend bool operator==(const ListFunction& a, const ListFunction& b);

 private:
  std::shared_ptr<const FunctionNode> node_;
};

namespace fn {

struct Builtin {
  BuiltinKind kind;
  friend bool operator==(const Builtin&, const Builtin&) = default;
};
struct Inflate {
  unsigned n;
  friend bool operator==(const Inflate&, const Inflate&) = default;
};
struct FilterBy {
  Predicate phi;
  friend bool operator==(const FilterBy&, const FilterBy&) = default;
};
struct MapBy {
  EndoMap psi;
  friend bool operator==(const MapBy&, const MapBy&) = default;
};
struct Nfe {
  NfeTerm term;
  friend bool operator==(const Nfe&, const Nfe&) = default;
};
struct FoldrAlpha {
  AlphaStep alpha;
  friend bool operator==(const FoldrAlpha&, const FoldrAlpha&) = default;
};
struct Table {
  std::shared_ptr<const FunctionTable> table;
  friend bool operator==(const Table& a, const Table& b) { return *a.table == *b.table; }
};
// outer after inner
struct Compose {
  ListFunction outer;
  ListFunction inner;
  friend bool operator==(const Compose&, const Compose&) = default;
};
struct PointwiseConcat {
  ListFunction left;
  ListFunction right;
  friend bool operator==(const PointwiseConcat&, const PointwiseConcat&) = default;
};

}  // namespace fn

struct FunctionNode {
  std::variant<fn::Builtin, fn::Inflate, fn::FilterBy, fn::MapBy, fn::Nfe, fn::FoldrAlpha,
               fn::Table, fn::Compose, fn::PointwiseConcat>
      value;
};

ListValue apply(const ListFunction& f, const ListValue& xs);
ListFunction pointwise_concat(ListFunction f, ListFunction g);
ListFunction compose(ListFunction f, ListFunction g);
ListFunction foldr_fe(AlphaStep alpha);

/// foldr alpha [] xs, folding from the right end of xs.
ListValue foldr_apply(const AlphaStep& alpha, const ListValue& xs);

/// Checks, for every element x, keep set phi and accumulator xs reachable as
/// foldr alpha [] ys for some ys in scope:
///   phi x false:  filter phi (alpha x xs) == filter phi xs
///   phi x true:   filter phi (alpha x xs) == alpha x (filter phi xs)
/// Witness input is xs, lhs/rhs the two sides.
Report alpha_condition_check(const AlphaStep& alpha, const Scope& scope);

/// Extensional equality on every list in scope.
bool functions_equal_at_scope(const ListFunction& f, const ListFunction& g, const Scope& scope);

/// The first list in shortlex order where f and g disagree, if any.
std::optional<ListValue> first_disagreement(const ListFunction& f, const ListFunction& g,
                                            const Scope& scope);

}  // namespace feq

#endif  // FEQ_FUNCTION_HPP
