#include "feq/lists.hpp"

#include <sstream>

#include "feq/error.hpp"

namespace feq {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::OutOfScope: return "OutOfScope";
    case ErrorCode::InvalidScope: return "InvalidScope";
    case ErrorCode::InvalidBlock: return "InvalidBlock";
    case ErrorCode::InvalidInclusion: return "InvalidInclusion";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotAnNfe: return "NotAnNfe";
    case ErrorCode::UniverseTooSmall: return "UniverseTooSmall";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

ListValue reverse(ListValue xs) {
  std::reverse(xs.begin(), xs.end());
  return xs;
}

ListValue tail(const ListValue& xs) {
  if (xs.empty()) throw Error(ErrorCode::EmptyList, "tail of empty list");
  return ListValue(xs.begin() + 1, xs.end());
}

ListValue repeat_elem(std::size_t n, Elem x) { return ListValue(n, x); }

ListValue inflate(std::size_t n, const ListValue& xs) {
  ListValue out;
  out.reserve(n * xs.size());
  for (Elem x : xs) out.insert(out.end(), n, x);
  return out;
}

ListValue triangle(const ListValue& xs) {
  ListValue out;
  for (std::size_t i = 0; i < xs.size(); ++i) out.insert(out.end(), i + 1, xs[i]);
  return out;
}

ListValue unique_values(const ListValue& xs) {
  ListValue out;
  for (Elem x : xs)
    if (!contains(out, x)) out.push_back(x);
  return out;
}

std::vector<TaggedElem> enumerate(const ListValue& xs) {
  std::vector<TaggedElem> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({xs[i], i});
  return out;
}

ListValue unenumerate(const std::vector<TaggedElem>& ts) {
  ListValue out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.value);
  return out;
}

ListValue swap_pairs(ListValue xs) {
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) std::swap(xs[i], xs[i + 1]);
  return xs;
}

ListValue swap_blocks(const ListValue& xs) {
  const std::size_t first = (xs.size() + 1) / 2;
  ListValue out(xs.begin() + static_cast<std::ptrdiff_t>(first), xs.end());
  out.insert(out.end(), xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(first));
  return out;
}

ListValue concat(ListValue xs, const ListValue& ys) {
  xs.insert(xs.end(), ys.begin(), ys.end());
  return xs;
}

std::size_t count_of(Elem x, const ListValue& xs) {
  return static_cast<std::size_t>(std::count(xs.begin(), xs.end(), x));
}

bool contains(const ListValue& xs, Elem x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

bool same_multiset(ListValue a, ListValue b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool has_duplicates(const ListValue& xs) {
  return unique_values(xs).size() != xs.size();
}

bool shortlex_less(const ListValue& a, const ListValue& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string to_string(const ListValue& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
  return os.str();
}

}  // namespace feq
