#pragma once

// Word-parallel bit-vector kernels.
//
// Every kernel exists as a scalar reference implementation and, on x86-64,
// as an AVX2/BMI2 variant. The variant is chosen once at startup from the
// CPU feature flags (override with NECIP_SIMD=scalar). Both tables expose
// the same contract and are equivalence-tested against each other.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace necip::kernels {

using Word = std::uint64_t;
using Words = std::span<Word>;
using CWords = std::span<const Word>;

struct KernelTable {
  std::string_view name;

  // dst = a op b, element-wise; all spans have equal length.
  void (*and_words)(Words dst, CWords a, CWords b);
  void (*or_words)(Words dst, CWords a, CWords b);
  void (*xor_words)(Words dst, CWords a, CWords b);
  // dst = ~a & b
  void (*andnot_words)(Words dst, CWords a, CWords b);
  // dst = sel ? one : zero, bit by bit
  void (*mux_words)(Words dst, CWords sel, CWords zero, CWords one);
  // dst = gate(a, b) for the 2-ary gate whose truth vector over
  // (a,b) = 00,01,10,11 is the 4-bit big-endian value `gate`.
  void (*gate_words)(Words dst, unsigned gate, CWords a, CWords b);

  std::uint64_t (*popcount)(CWords a);
  bool (*equal)(CWords a, CWords b);
  bool (*any)(CWords a);

  // Truth-table variable permutation. For every source index i < 2^bits,
  // writes bit i of src to position
  //   (pext(i, high_mask) << popcount(low_mask)) | pext(i, low_mask)
  // of dst. high_mask and low_mask are disjoint and cover [0, bits).
  // dst must be zeroed by the caller.
  void (*scatter_bits)(Words dst, CWords src, unsigned bits,
                       std::uint64_t high_mask, std::uint64_t low_mask);
};

const KernelTable& scalar();

// nullptr when the CPU or the build lacks AVX2+BMI2.
const KernelTable* avx2();

// The table selected for this process.
const KernelTable& active();

}  // namespace necip::kernels
