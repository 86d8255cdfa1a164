#include "necip/kernels.hpp"

#include <bit>

namespace necip::kernels {
namespace {

void and_scalar(Words dst, CWords a, CWords b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void or_scalar(Words dst, CWords a, CWords b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] | b[i];
}

void xor_scalar(Words dst, CWords a, CWords b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] ^ b[i];
}

void andnot_scalar(Words dst, CWords a, CWords b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ~a[i] & b[i];
}

void mux_scalar(Words dst, CWords sel, CWords zero, CWords one) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = (sel[i] & one[i]) | (~sel[i] & zero[i]);
}

inline Word all_if(unsigned gate, unsigned bit) {
  return ((gate >> bit) & 1u) ? ~Word{0} : Word{0};
}

void gate_scalar(Words dst, unsigned gate, CWords a, CWords b) {
  const Word g00 = all_if(gate, 3), g01 = all_if(gate, 2);
  const Word g10 = all_if(gate, 1), g11 = all_if(gate, 0);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const Word x = a[i], y = b[i];
    dst[i] = (~x & ~y & g00) | (~x & y & g01) | (x & ~y & g10) | (x & y & g11);
  }
}

std::uint64_t popcount_scalar(CWords a) {
  std::uint64_t n = 0;
  for (Word w : a) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

bool equal_scalar(CWords a, CWords b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool any_scalar(CWords a) {
  for (Word w : a)
    if (w) return true;
  return false;
}

std::uint64_t pext_soft(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  unsigned k = 0;
  while (mask) {
    const std::uint64_t low = mask & (~mask + 1);
    if (x & low) out |= std::uint64_t{1} << k;
    ++k;
    mask &= mask - 1;
  }
  return out;
}

void scatter_scalar(Words dst, CWords src, unsigned bits,
                    std::uint64_t high_mask, std::uint64_t low_mask) {
  const unsigned low_count = static_cast<unsigned>(std::popcount(low_mask));
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::size_t w = 0; w < src.size(); ++w) {
    Word word = src[w];
    while (word) {
      const unsigned b = static_cast<unsigned>(std::countr_zero(word));
      word &= word - 1;
      const std::uint64_t i = (static_cast<std::uint64_t>(w) << 6) | b;
      if (i >= total) break;
      const std::uint64_t j =
          (pext_soft(i, high_mask) << low_count) | pext_soft(i, low_mask);
      dst[j >> 6] |= Word{1} << (j & 63);
    }
  }
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{
      "scalar",      and_scalar,      or_scalar,   xor_scalar,
      andnot_scalar, mux_scalar,      gate_scalar, popcount_scalar,
      equal_scalar,  any_scalar,      scatter_scalar,
  };
  return table;
}

}  // namespace necip::kernels
