#include "feq/nfe_term.hpp"

#include <cctype>
#include <sstream>

#include "feq/error.hpp"

namespace feq {

NfeTerm::NfeTerm(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (const Block& b : blocks_)
    if (b.size == 0) throw Error(ErrorCode::InvalidBlock, "NFE block size must be >= 1");
}

unsigned NfeTerm::inflation_factor() const {
  unsigned k = 0;
  for (const Block& b : blocks_) k += b.size;
  return k;
}

ListValue NfeTerm::operator()(const ListValue& xs) const {
  ListValue out;
  out.reserve(inflation_factor() * xs.size());
  for (const Block& b : blocks_) {
    ListValue part = inflate(b.size, xs);
    if (b.sign == Sign::Neg) part = reverse(std::move(part));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string NfeTerm::to_string() const {
  // P 2 (N 1 Z): every constructor after the first is parenthesised
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '(';
    out += blocks_[i].sign == Sign::Pos ? "P " : "N ";
    out += std::to_string(blocks_[i].size);
    out += ' ';
  }
  out += 'Z';
  if (!blocks_.empty()) out.append(blocks_.size() - 1, ')');
  return out;
}

ListValue interpret_nfe(const NfeTerm& term, const ListValue& xs) { return term(xs); }

std::vector<Block> nfe_to_blocks(const NfeTerm& term) { return term.blocks(); }

NfeTerm blocks_to_nfe(std::vector<Block> blocks) { return NfeTerm(std::move(blocks)); }

namespace {

class ConstructorParser {
 public:
  explicit ConstructorParser(const std::string& text) : text_(text) {}

  NfeTerm parse() {
    std::vector<Block> blocks;
    parse_term(blocks);
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return NfeTerm(std::move(blocks));
  }

 private:
  void parse_term(std::vector<Block>& blocks) {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      parse_term(blocks);
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return;
    }
    char c = peek();
    if (c == 'Z') {
      ++pos_;
      return;
    }
    if (c != 'P' && c != 'N') fail("expected Z, P or N");
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected block size");
    unsigned long n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (n > 1000000) fail("block size too large");
    }
    if (n == 0) throw Error(ErrorCode::InvalidBlock, "NFE block size must be >= 1");
    blocks.push_back({c == 'P' ? Sign::Pos : Sign::Neg, static_cast<unsigned>(n)});
    parse_term(blocks);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse,
                "NFE term: " + why + " at offset " + std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// Compositions of `total` into exactly `parts` positive parts, lexicographic.
void compositions(unsigned total, unsigned parts, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (unsigned first = 1; first + (parts - 1) <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

NfeTerm parse_nfe_constructors(const std::string& text) {
  return ConstructorParser(text).parse();
}

std::vector<NfeTerm> enumerate_k_nfes(unsigned k) {
  std::vector<NfeTerm> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (k > 20) throw Error(ErrorCode::InvalidArgument, "k too large to enumerate");
  for (unsigned parts = 1; parts <= k; ++parts) {
    std::vector<std::vector<unsigned>> comps;
    std::vector<unsigned> cur;
    compositions(k, parts, cur, comps);
    for (const auto& comp : comps) {
      // sign patterns as binary numbers, first block most significant, Pos = 0
      for (std::uint32_t mask = 0; mask < (1u << parts); ++mask) {
        std::vector<Block> blocks;
        for (unsigned i = 0; i < parts; ++i) {
          bool neg = (mask >> (parts - 1 - i)) & 1u;
          blocks.push_back({neg ? Sign::Neg : Sign::Pos, comp[i]});
        }
        out.emplace_back(std::move(blocks));
      }
    }
  }
  return out;
}

std::uint64_t count_k_nfes(unsigned k) {
  if (k == 0) return 1;
  std::uint64_t n = 2;
  for (unsigned i = 1; i < k; ++i) n *= 3;
  return n;
}

}  // namespace feq
