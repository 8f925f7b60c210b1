#ifndef FEQ_TESTS_SUPPORT_HPP
#define FEQ_TESTS_SUPPORT_HPP

#include <feq/function.hpp>
#include <feq/lists.hpp>
#include <feq/nfe_term.hpp>

#include <set>
#include <vector>

// Naive reference implementations, written without the library's list
// combinators so that tests compare against independent code.
namespace oracle {

using feq::Elem;
using feq::ListValue;

inline bool keeps(const ListValue& keep, Elem x) {
  for (Elem k : keep)
    if (k == x) return true;
  return false;
}

inline ListValue filter(const ListValue& keep, const ListValue& xs) {
  ListValue out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (keeps(keep, xs[i])) out.push_back(xs[i]);
  return out;
}

inline ListValue map(const ListValue& table, const ListValue& xs) {
  ListValue out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = table[xs[i]];
  return out;
}

inline ListValue reversed(const ListValue& xs) {
  ListValue out;
  for (std::size_t i = xs.size(); i > 0; --i) out.push_back(xs[i - 1]);
  return out;
}

inline ListValue inflated(unsigned k, const ListValue& xs) {
  ListValue out;
  for (Elem x : xs)
    for (unsigned c = 0; c < k; ++c) out.push_back(x);
  return out;
}

inline std::size_t distinct_count(const ListValue& xs) {
  return std::set<Elem>(xs.begin(), xs.end()).size();
}

// Odometer over every list of length <= max_len; callback receives each list.
template <typename Fn>
void for_each_list(unsigned alphabet, unsigned max_len, Fn&& fn) {
  for (unsigned len = 0; len <= max_len; ++len) {
    ListValue xs(len, 0);
    while (true) {
      fn(static_cast<const ListValue&>(xs));
      std::size_t pos = len;
      while (pos > 0 && xs[pos - 1] + 1 == alphabet) xs[--pos] = 0;
      if (pos == 0) break;
      ++xs[pos - 1];
    }
  }
}

// Direct semantics of a signed block list.
inline ListValue eval_blocks(const std::vector<feq::Block>& blocks, const ListValue& xs) {
  ListValue out;
  for (const auto& b : blocks) {
    ListValue part = inflated(b.size, xs);
    if (b.sign == feq::Sign::Neg) part = reversed(part);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Every signed composition of k, built from cut-point bitmasks.
inline std::vector<std::vector<feq::Block>> signed_compositions(unsigned k) {
  std::vector<std::vector<feq::Block>> out;
  if (k == 0) return {{}};
  for (unsigned cuts = 0; cuts < (1u << (k - 1)); ++cuts) {
    std::vector<unsigned> sizes;
    unsigned run = 1;
    for (unsigned i = 0; i + 1 < k; ++i) {
      if (cuts & (1u << i)) {
        sizes.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    sizes.push_back(run);
    for (unsigned signs = 0; signs < (1u << sizes.size()); ++signs) {
      std::vector<feq::Block> bs;
      for (std::size_t i = 0; i < sizes.size(); ++i)
        bs.push_back({(signs >> i) & 1u ? feq::Sign::Neg : feq::Sign::Pos, sizes[i]});
      out.push_back(bs);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // FEQ_TESTS_SUPPORT_HPP
