#ifndef FEQ_SCOPE_HPP
#define FEQ_SCOPE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "feq/lists.hpp"

namespace feq {

/// Finite test universe: every list over {0..alphabet_size-1} with length at
/// most max_len. Verdicts computed over a scope hold only at that scope.
struct Scope {
  unsigned alphabet_size = 3;
  unsigned max_len = 5;

  /// Throws Error(InvalidScope) when the alphabet is empty or the universe
  /// would exceed max_universe() lists.
  void validate() const;

  std::size_t list_count() const;

  static constexpr std::size_t max_universe() { return std::size_t{1} << 22; }

  friend bool operator==(const Scope&, const Scope&) = default;
};

/// All lists of exactly length n over the alphabet, lexicographic.
std::vector<ListValue> lists_of_length(unsigned alphabet_size, unsigned n);

/// All lists in scope in shortlex order.
std::vector<ListValue> lists_in_scope(const Scope& scope);

/// Subset predicates as sorted "keep" sets, in bitmask order.
std::vector<ListValue> predicate_universe(unsigned alphabet_size);

/// Endo-maps of the alphabet as image tables, in lexicographic order.
/// Throws Error(InvalidScope) above max_endo_maps().
std::vector<ListValue> endo_map_universe(unsigned alphabet_size);
constexpr std::size_t max_endo_maps() { return 46656; }  // 6^6

/// The transformation a witness was found under.
struct Transform {
  enum class Kind { None, Map, Filter, Tail, Alpha };

  Kind kind = Kind::None;
  // Map: image table. Filter/Alpha: keep set.
  ListValue data;
  // Alpha: the element folded onto the list.
  std::optional<Elem> element;

  static Transform none() { return {}; }
  static Transform map(ListValue table) { return {Kind::Map, std::move(table), {}}; }
  static Transform filter(ListValue keep) { return {Kind::Filter, std::move(keep), {}}; }
  static Transform tail() { return {Kind::Tail, {}, {}}; }
  static Transform alpha(Elem x, ListValue keep) { return {Kind::Alpha, std::move(keep), x}; }

  std::string describe() const;

  friend bool operator==(const Transform&, const Transform&) = default;
};

struct Witness {
  ListValue input;
  Transform transform;
  ListValue lhs;
  ListValue rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Verdict { Pass, Fail, PreconditionFailed };

const char* verdict_name(Verdict v) noexcept;

/// Outcome of a finite-scope law check. Pass means "holds at scope" only.
struct Report {
  std::string law;
  Scope scope;
  Verdict verdict = Verdict::Pass;
  std::vector<Witness> witnesses;
  std::string note;

  bool passed() const { return verdict == Verdict::Pass; }

  void add(Witness w) {
    witnesses.push_back(std::move(w));
    verdict = Verdict::Fail;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace feq

#endif  // FEQ_SCOPE_HPP
