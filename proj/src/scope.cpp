#include "feq/scope.hpp"

#include <sstream>

#include "feq/error.hpp"

namespace feq {

std::size_t Scope::list_count() const {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (unsigned n = 0; n <= max_len; ++n) {
    total += layer;
    if (total > max_universe()) return total;
    layer *= alphabet_size;
  }
  return total;
}

void Scope::validate() const {
  if (alphabet_size == 0)
    throw Error(ErrorCode::InvalidScope, "alphabet size must be at least 1");
  if (list_count() > max_universe())
    throw Error(ErrorCode::InvalidScope, "scope universe too large");
}

std::vector<ListValue> lists_of_length(unsigned alphabet_size, unsigned n) {
  std::vector<ListValue> out;
  if (alphabet_size == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  ListValue cur(n, 0);
  while (true) {
    out.push_back(cur);
    // odometer, last position fastest
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] < alphabet_size) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<ListValue> lists_in_scope(const Scope& scope) {
  scope.validate();
  std::vector<ListValue> out;
  out.reserve(scope.list_count());
  for (unsigned n = 0; n <= scope.max_len; ++n) {
    auto layer = lists_of_length(scope.alphabet_size, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<ListValue> predicate_universe(unsigned alphabet_size) {
  if (alphabet_size > 20)
    throw Error(ErrorCode::InvalidScope, "predicate universe too large");
  std::vector<ListValue> out;
  for (std::uint32_t mask = 0; mask < (1u << alphabet_size); ++mask) {
    ListValue keep;
    for (Elem x = 0; x < alphabet_size; ++x)
      if (mask & (1u << x)) keep.push_back(x);
    out.push_back(std::move(keep));
  }
  return out;
}

std::vector<ListValue> endo_map_universe(unsigned alphabet_size) {
  std::size_t count = 1;
  for (unsigned i = 0; i < alphabet_size; ++i) {
    count *= alphabet_size;
    if (count > max_endo_maps())
      throw Error(ErrorCode::InvalidScope, "endo-map universe too large for alphabet " +
                                               std::to_string(alphabet_size));
  }
  return lists_of_length(alphabet_size, alphabet_size);
}

std::string Transform::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::None: return "-";
    case Kind::Map: os << "map" << to_string(data); break;
    case Kind::Filter: os << "keep" << to_string(data); break;
    case Kind::Tail: return "tail";
    case Kind::Alpha: os << "x=" << element.value_or(0) << " keep" << to_string(data); break;
  }
  return os.str();
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::PreconditionFailed: return "precondition_failed";
  }
  return "unknown";
}

}  // namespace feq
