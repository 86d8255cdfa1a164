#include "necip/truth_table.hpp"

#include <cstdlib>
#include <stdexcept>

#include "necip/errors.hpp"

namespace necip {

std::uint64_t default_budget() {
  static const std::uint64_t budget = [] {
    if (const char* env = std::getenv("NECIP_BUDGET")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return kDefaultBudget;
  }();
  return budget;
}

TruthTable::TruthTable(unsigned arity) : arity_(arity) {
  if (arity > kMaxArity)
    throw std::invalid_argument("truth table arity " + std::to_string(arity) +
                                " exceeds the cap of " + std::to_string(kMaxArity));
  words_.assign(word_count(arity), 0);
}

TruthTable TruthTable::constant(unsigned arity, bool value) {
  TruthTable t(arity);
  if (value) {
    for (Word& w : t.words_) w = ~Word{0};
    t.clear_padding();
  }
  return t;
}

TruthTable TruthTable::projection(unsigned arity, unsigned var) {
  if (var >= arity) throw std::invalid_argument("projection variable out of range");
  TruthTable t(arity);
  const unsigned pos = index_bit(arity, var);
  if (pos >= 6) {
    const std::size_t stride = std::size_t{1} << (pos - 6);
    for (std::size_t i = 0; i < t.words_.size(); ++i)
      if ((i / stride) & 1u) t.words_[i] = ~Word{0};
  } else {
    static constexpr Word kPatterns[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    for (Word& w : t.words_) w = kPatterns[pos];
  }
  t.clear_padding();
  return t;
}

TruthTable TruthTable::from_function(unsigned arity,
                                     const std::function<bool(std::uint64_t)>& f) {
  TruthTable t(arity);
  const std::uint64_t n = t.size();
  for (std::uint64_t i = 0; i < n; ++i)
    if (f(i)) t.words_[i >> 6] |= Word{1} << (i & 63);
  return t;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

TruthTable TruthTable::from_hex(unsigned arity, std::string_view hex) {
  TruthTable t(arity);
  const std::uint64_t bits = t.size();
  const std::uint64_t digits = (bits + 3) / 4;
  if (hex.size() != digits)
    throw std::invalid_argument("bits_hex has " + std::to_string(hex.size()) +
                                " digits, expected " + std::to_string(digits));
  for (std::uint64_t d = 0; d < digits; ++d) {
    const int v = hex_value(hex[d]);
    if (v < 0) throw std::invalid_argument("bits_hex contains a non-hex character");
    for (unsigned j = 0; j < 4; ++j) {
      const std::uint64_t idx = d * 4 + j;
      const bool b = (v >> (3 - j)) & 1;
      if (idx >= bits) {
        if (b) throw std::invalid_argument("bits_hex padding bits must be zero");
        continue;
      }
      t.set(idx, b);
    }
  }
  return t;
}

std::string TruthTable::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t bits = size();
  const std::uint64_t digits = (bits + 3) / 4;
  std::string out(digits, '0');
  for (std::uint64_t d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (unsigned j = 0; j < 4; ++j) {
      const std::uint64_t idx = d * 4 + j;
      v = (v << 1) | ((idx < bits && bit(idx)) ? 1u : 0u);
    }
    out[d] = kDigits[v];
  }
  return out;
}

std::uint64_t TruthTable::count_ones() const {
  return kernels::active().popcount(words_);
}

bool TruthTable::is_constant() const {
  const std::uint64_t ones = count_ones();
  return ones == 0 || ones == size();
}

void TruthTable::clear_padding() {
  if (arity_ < 6) words_[0] &= (Word{1} << size()) - 1;
}

TruthTable TruthTable::operator~() const {
  TruthTable t(arity_);
  for (std::size_t i = 0; i < words_.size(); ++i) t.words_[i] = ~words_[i];
  t.clear_padding();
  return t;
}

namespace {

void check_same_arity(const TruthTable& a, const TruthTable& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("truth table arity mismatch");
}

}  // namespace

TruthTable TruthTable::operator&(const TruthTable& rhs) const {
  check_same_arity(*this, rhs);
  TruthTable t(arity_);
  kernels::active().and_words(t.words_, words_, rhs.words_);
  return t;
}

TruthTable TruthTable::operator|(const TruthTable& rhs) const {
  check_same_arity(*this, rhs);
  TruthTable t(arity_);
  kernels::active().or_words(t.words_, words_, rhs.words_);
  return t;
}

TruthTable TruthTable::operator^(const TruthTable& rhs) const {
  check_same_arity(*this, rhs);
  TruthTable t(arity_);
  kernels::active().xor_words(t.words_, words_, rhs.words_);
  return t;
}

bool TruthTable::operator==(const TruthTable& rhs) const {
  return arity_ == rhs.arity_ && kernels::active().equal(words_, rhs.words_);
}

std::size_t TruthTableHash::operator()(const TruthTable& t) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ t.arity();
  for (Word w : t.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

std::uint64_t index_of(std::span<const std::uint8_t> a) {
  if (a.size() > 63) throw std::invalid_argument("assignment too wide for a table index");
  std::uint64_t idx = 0;
  for (std::uint8_t v : a) idx = (idx << 1) | (v & 1u);
  return idx;
}

Assignment assignment_of(std::uint64_t index, unsigned arity) {
  Assignment a(arity);
  for (unsigned i = 0; i < arity; ++i) a[i] = (index >> index_bit(arity, i)) & 1u;
  return a;
}

}  // namespace necip
