#ifndef FEQ_LISTS_HPP
#define FEQ_LISTS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace feq {

/// An element of the finite alphabet {0..A-1}.
using Elem = std::uint32_t;

/// A finite list of elements; order is significant and duplicates allowed.
using ListValue = std::vector<Elem>;

/// An element paired with its original position, as produced by enumerate().
struct TaggedElem {
  Elem value;
  std::size_t index;

  friend bool operator==(const TaggedElem&, const TaggedElem&) = default;
};

template <typename Fn>
ListValue map_list(Fn&& psi, const ListValue& xs) {
  ListValue out;
  out.reserve(xs.size());
  for (Elem x : xs) out.push_back(static_cast<Elem>(psi(x)));
  return out;
}

template <typename Pred>
ListValue filter_list(Pred&& phi, const ListValue& xs) {
  ListValue out;
  for (Elem x : xs)
    if (phi(x)) out.push_back(x);
  return out;
}

/// Stable sort under `less`, which must be a strict weak order.
template <typename Less>
ListValue sort_list(Less&& less, ListValue xs) {
  std::stable_sort(xs.begin(), xs.end(), less);
  return xs;
}

inline ListValue sort_list(ListValue xs) {
  std::stable_sort(xs.begin(), xs.end());
  return xs;
}

ListValue reverse(ListValue xs);

/// Throws Error(EmptyList) on [].
ListValue tail(const ListValue& xs);

ListValue repeat_elem(std::size_t n, Elem x);
ListValue inflate(std::size_t n, const ListValue& xs);

/// Element at 1-based position i is repeated i times.
ListValue triangle(const ListValue& xs);

/// Distinct values in first-occurrence order.
ListValue unique_values(const ListValue& xs);

std::vector<TaggedElem> enumerate(const ListValue& xs);
ListValue unenumerate(const std::vector<TaggedElem>& ts);

/// Exchanges positions 2i and 2i+1; a trailing odd element stays put.
ListValue swap_pairs(ListValue xs);

/// Second half followed by first half; the first half has ceil(n/2) items.
ListValue swap_blocks(const ListValue& xs);

ListValue concat(ListValue xs, const ListValue& ys);

std::size_t count_of(Elem x, const ListValue& xs);
bool contains(const ListValue& xs, Elem x);
bool same_multiset(ListValue a, ListValue b);
bool has_duplicates(const ListValue& xs);

/// Length first, then lexicographic.
bool shortlex_less(const ListValue& a, const ListValue& b);

std::string to_string(const ListValue& xs);

}  // namespace feq

#endif  // FEQ_LISTS_HPP
