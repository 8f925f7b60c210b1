#ifndef FEQ_NFE_TERM_HPP
#define FEQ_NFE_TERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "feq/lists.hpp"

namespace feq {

enum class Sign { Pos, Neg };

/// One constructor application: Pos n contributes `inflate n xs`, Neg n
/// contributes `reverse (inflate n xs)`. Size is always at least 1.
struct Block {
  Sign sign;
  unsigned size;

  friend bool operator==(const Block&, const Block&) = default;
};

/// A natural filter-equivariant function in its inductive form
/// `Z | P n rest | N n rest`, stored as the flat block list. The empty block
/// list is Z, the constant-empty function.
class NfeTerm {
 public:
  NfeTerm() = default;

  /// Throws Error(InvalidBlock) if any block has size 0.
  explicit NfeTerm(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }

  /// Output length on a singleton input (the k of a k-NFE).
  unsigned inflation_factor() const;

  ListValue operator()(const ListValue& xs) const;

  /// Nested constructor form, e.g. "P 2 (N 1 Z)".
  std::string to_string() const;

  friend bool operator==(const NfeTerm&, const NfeTerm&) = default;

 private:
  std::vector<Block> blocks_;
};

ListValue interpret_nfe(const NfeTerm& term, const ListValue& xs);

std::vector<Block> nfe_to_blocks(const NfeTerm& term);

/// Throws Error(InvalidBlock) on a zero-sized block.
NfeTerm blocks_to_nfe(std::vector<Block> blocks);

/// Parses the nested constructor form produced by NfeTerm::to_string().
/// Throws Error(Parse) or Error(InvalidBlock).
NfeTerm parse_nfe_constructors(const std::string& text);

/// Every k-NFE: each integer composition of k, each part signed Pos or Neg.
/// Ordered by block count, then block sizes, then signs with Pos before Neg.
/// k = 0 yields the single term Z.
std::vector<NfeTerm> enumerate_k_nfes(unsigned k);

/// 2 * 3^(k-1) for k >= 1, and 1 for k = 0.
std::uint64_t count_k_nfes(unsigned k);

}  // namespace feq

#endif  // FEQ_NFE_TERM_HPP
