#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "necip/kernels.hpp"

namespace necip {

using Word = kernels::Word;

// One value per variable, 0 or 1, in variable order x_1 .. x_n.
using Assignment = std::vector<std::uint8_t>;

// Dense truth table of an n-ary Boolean function.
//
// Bit i holds f(a) for the input a whose big-endian value bin_n(a) is i, so
// x_1 is the most significant input bit and index 0 is the all-zero input.
// Bits are packed little-endian inside 64-bit words; bits past 2^n in the
// last word are kept at zero.
class TruthTable {
 public:
  static constexpr unsigned kMaxArity = 26;

  TruthTable() : TruthTable(0) {}
  explicit TruthTable(unsigned arity);

  static TruthTable constant(unsigned arity, bool value);
  // Table of x_{var+1} (var is 0-based).
  static TruthTable projection(unsigned arity, unsigned var);
  static TruthTable from_function(unsigned arity,
                                  const std::function<bool(std::uint64_t)>& f);
  // Bit string b_0 b_1 ... b_{2^n - 1}, four bits per hex digit, most
  // significant bit of the first digit = b_0. Short tables are right-padded
  // with zero bits to a whole digit.
  static TruthTable from_hex(unsigned arity, std::string_view hex);
  std::string to_hex() const;

  unsigned arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }

  bool bit(std::uint64_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  void set(std::uint64_t index, bool value) {
    const Word mask = Word{1} << (index & 63);
    if (value)
      words_[index >> 6] |= mask;
    else
      words_[index >> 6] &= ~mask;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::uint64_t count_ones() const;
  bool is_constant() const;

  TruthTable operator~() const;
  TruthTable operator&(const TruthTable& rhs) const;
  TruthTable operator|(const TruthTable& rhs) const;
  TruthTable operator^(const TruthTable& rhs) const;

  bool operator==(const TruthTable& rhs) const;

  // Restores the zero-padding invariant after raw word writes.
  void clear_padding();

 private:
  unsigned arity_;
  std::vector<Word> words_;
};

struct TruthTableHash {
  std::size_t operator()(const TruthTable& t) const noexcept;
};

inline std::size_t word_count(unsigned arity) {
  return arity <= 6 ? 1 : (std::size_t{1} << (arity - 6));
}

// Position of variable `var` (0-based) inside a table index of width `arity`.
inline unsigned index_bit(unsigned arity, unsigned var) { return arity - 1 - var; }

std::uint64_t index_of(std::span<const std::uint8_t> a);
Assignment assignment_of(std::uint64_t index, unsigned arity);

}  // namespace necip
