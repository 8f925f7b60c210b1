#ifndef FEQ_AMALGAMATION_HPP
#define FEQ_AMALGAMATION_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feq/function.hpp"
#include "feq/lists.hpp"

namespace feq {

/// An unordered key of one element or two distinct elements.
class CollectionKey {
 public:
  static CollectionKey single(Elem x) { return CollectionKey(x, x, false); }
  /// Throws Error(InvalidArgument) if x == y.
  static CollectionKey pair(Elem x, Elem y);

  std::size_t size() const { return is_pair_ ? 2 : 1; }
  Elem first() const { return lo_; }
  Elem second() const { return hi_; }
  bool contains(Elem e) const { return e == lo_ || e == hi_; }
  ListValue elements() const { return is_pair_ ? ListValue{lo_, hi_} : ListValue{lo_}; }

  std::string to_string() const;

  friend auto operator<=>(const CollectionKey&, const CollectionKey&) = default;

 private:
  CollectionKey(Elem lo, Elem hi, bool is_pair) : lo_(lo), hi_(hi), is_pair_(is_pair) {}

  Elem lo_;
  Elem hi_;
  bool is_pair_;
};

/// How a collection's keys relate to its lists.
///   Removed: the list keyed by K is a list with every element of K filtered out.
///   Kept:    the list keyed by K is a list with only the elements of K kept.
enum class KeyKind { Removed, Kept };

/// A complete family of filtered lists over the universe X.
struct Collection {
  KeyKind kind = KeyKind::Removed;
  ListValue universe;  // sorted, distinct
  std::map<CollectionKey, ListValue> lists;

  bool all_empty() const;

  /// Key size shared by all keys (1 or 2); 0 for an empty collection.
  std::size_t key_size() const;

  /// Why the collection breaks its invariants (incomplete key set, mixed key
  /// sizes, lists carrying excluded values), or nullopt when it is valid.
  std::optional<std::string> invalid_reason() const;

  friend bool operator==(const Collection&, const Collection&) = default;
};

enum class AmalgamationFailure {
  None,
  NoUniqueHead,
  Inconsistent,
  UniverseTooSmall,
  MissingSublist,
  InvalidExample,
};

const char* failure_name(AmalgamationFailure f) noexcept;

struct AmalgamationOutcome {
  ListValue result;
  AmalgamationFailure failure = AmalgamationFailure::None;
  std::string detail;

  bool ok() const { return failure == AmalgamationFailure::None; }

  static AmalgamationOutcome success(ListValue result) { return {std::move(result), {}, {}}; }
  static AmalgamationOutcome fail(AmalgamationFailure why, std::string detail) {
    return {{}, why, std::move(detail)};
  }
};

/// Filters `ys` by every key of the given size drawn from `universe`.
Collection decompose(const ListValue& ys, ListValue universe, KeyKind kind,
                     std::size_t key_size);

/// x -> filter (/= x) xs for every distinct x of xs.
Collection decompose_pi(const ListValue& xs);

struct StepResult {
  bool amalgamable = false;
  std::optional<Elem> head;
};

/// Whether a unique next head exists.
///   Removed keys: x0 heads every nonempty list whose key excludes x0 (and
///   at least one such list is nonempty).
///   Kept keys: x0 has the strictly largest count of list heads.
/// Throws Error(UniverseTooSmall) if |X| < 3.
StepResult is_amalgamable_step(const Collection& chi);

/// Tails every nonempty list whose head is x0.
Collection delta_step(const Collection& chi, Elem x0);

/// One majority-vote round of extrapolation.
struct VoteRound {
  Elem winner;
  std::size_t winner_score;
  std::size_t runner_up_score;
  // nonempty lists whose key includes the winner, before the round
  std::size_t lists_with_winner_key;
};

/// Repeatedly takes the unique head and applies delta_step until every list
/// is empty. A success is re-decomposed and must reproduce `chi` exactly.
AmalgamationOutcome amal(const Collection& chi, std::vector<VoteRound>* trace = nullptr);

/// For each unordered pair {x, y} of distinct values of xs, the sublist of xs
/// keeping only x and y. Throws Error(UniverseTooSmall) if xs has fewer than
/// three distinct values.
Collection two_unique_sublists(const ListValue& xs);

/// Outputs of f keyed by the set of values kept from xs.
using SublistTable = std::map<CollectionKey, ListValue>;

/// f on every sublist of xs with two distinct values (or on xs itself when it
/// has fewer than two).
SublistTable sublist_outputs(const ListFunction& f, const ListValue& xs);

/// Keys each (input, output) example by the value set of its input, keeping
/// only inputs that are actual sublists of xs needed for extrapolation.
SublistTable resolve_examples(const std::vector<std::pair<ListValue, ListValue>>& examples,
                              const ListValue& xs);

/// Reconstructs f xs for a filter-equivariant f from its outputs on the
/// sublists of xs with two distinct values.
///   |X| <= 2: read from the table.
///   |X| == 3: amalgamates {x -> f (sublist without x)}.
///   |X| >= 4: majority vote over all pair sublists in one pass.
AmalgamationOutcome extrapolate_fe(const SublistTable& outputs, const ListValue& xs,
                                   std::vector<VoteRound>* trace = nullptr);

/// Reconstructs f xs for a natural filter-equivariant f from the single example
/// f [x, y] = example_out, with x != y.
AmalgamationOutcome extrapolate_nfe_from_doubleton(const ListValue& example_in,
                                                   const ListValue& example_out,
                                                   const ListValue& xs);

/// For each distinct x in first-occurrence order, (count of x)^2 copies of x.
ListValue square_multiplicity_counterexample(const ListValue& xs);

}  // namespace feq

#endif  // FEQ_AMALGAMATION_HPP
