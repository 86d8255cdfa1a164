#include "necip/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define NECIP_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace necip::kernels {

#ifdef NECIP_HAVE_AVX2_KERNELS
namespace {

#define NECIP_AVX2 __attribute__((target("avx2,bmi,bmi2,popcnt")))

NECIP_AVX2 inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

NECIP_AVX2 inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

template <typename VecOp, typename WordOp>
NECIP_AVX2 inline void binary(Words dst, CWords a, CWords b, VecOp vop,
                              WordOp wop) {
  const std::size_t n = dst.size();
  Word* d = dst.data();
  const Word* x = a.data();
  const Word* y = b.data();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(d + i, vop(load(x + i), load(y + i)));
  for (; i < n; ++i) d[i] = wop(x[i], y[i]);
}

NECIP_AVX2 void and_avx2(Words dst, CWords a, CWords b) {
  binary(
      dst, a, b, [](__m256i x, __m256i y) NECIP_AVX2 { return _mm256_and_si256(x, y); },
      [](Word x, Word y) { return x & y; });
}

NECIP_AVX2 void or_avx2(Words dst, CWords a, CWords b) {
  binary(
      dst, a, b, [](__m256i x, __m256i y) NECIP_AVX2 { return _mm256_or_si256(x, y); },
      [](Word x, Word y) { return x | y; });
}

NECIP_AVX2 void xor_avx2(Words dst, CWords a, CWords b) {
  binary(
      dst, a, b, [](__m256i x, __m256i y) NECIP_AVX2 { return _mm256_xor_si256(x, y); },
      [](Word x, Word y) { return x ^ y; });
}

NECIP_AVX2 void andnot_avx2(Words dst, CWords a, CWords b) {
  binary(
      dst, a, b,
      [](__m256i x, __m256i y) NECIP_AVX2 { return _mm256_andnot_si256(x, y); },
      [](Word x, Word y) { return ~x & y; });
}

NECIP_AVX2 void mux_avx2(Words dst, CWords sel, CWords zero, CWords one) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s = load(sel.data() + i);
    const __m256i hi = _mm256_and_si256(s, load(one.data() + i));
    const __m256i lo = _mm256_andnot_si256(s, load(zero.data() + i));
    store(dst.data() + i, _mm256_or_si256(hi, lo));
  }
  for (; i < n; ++i) dst[i] = (sel[i] & one[i]) | (~sel[i] & zero[i]);
}

NECIP_AVX2 void gate_avx2(Words dst, unsigned gate, CWords a, CWords b) {
  auto splat = [gate](unsigned bit) NECIP_AVX2 {
    return _mm256_set1_epi64x(((gate >> bit) & 1u) ? -1 : 0);
  };
  const __m256i g00 = splat(3), g01 = splat(2), g10 = splat(1), g11 = splat(0);
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = load(a.data() + i);
    const __m256i y = load(b.data() + i);
    const __m256i nx_ny = _mm256_andnot_si256(_mm256_or_si256(x, y), g00);
    const __m256i nx_y = _mm256_and_si256(_mm256_andnot_si256(x, y), g01);
    const __m256i x_ny = _mm256_and_si256(_mm256_andnot_si256(y, x), g10);
    const __m256i x_y = _mm256_and_si256(_mm256_and_si256(x, y), g11);
    store(dst.data() + i,
          _mm256_or_si256(_mm256_or_si256(nx_ny, nx_y), _mm256_or_si256(x_ny, x_y)));
  }
  for (; i < n; ++i) {
    const Word x = a[i], y = b[i];
    Word r = 0;
    if ((gate >> 3) & 1u) r |= ~x & ~y;
    if ((gate >> 2) & 1u) r |= ~x & y;
    if ((gate >> 1) & 1u) r |= x & ~y;
    if (gate & 1u) r |= x & y;
    dst[i] = r;
  }
}

NECIP_AVX2 std::uint64_t popcount_avx2(CWords a) {
  std::uint64_t n = 0;
  for (Word w : a) n += static_cast<std::uint64_t>(_mm_popcnt_u64(w));
  return n;
}

NECIP_AVX2 bool equal_avx2(CWords a, CWords b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
    if (!_mm256_testz_si256(d, d)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

NECIP_AVX2 bool any_avx2(CWords a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(a.data() + i);
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i)
    if (a[i]) return true;
  return false;
}

NECIP_AVX2 void scatter_avx2(Words dst, CWords src, unsigned bits,
                             std::uint64_t high_mask, std::uint64_t low_mask) {
  const unsigned low_count = static_cast<unsigned>(_mm_popcnt_u64(low_mask));
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::size_t w = 0; w < src.size(); ++w) {
    Word word = src[w];
    while (word) {
      const unsigned b = static_cast<unsigned>(_tzcnt_u64(word));
      word = _blsr_u64(word);
      const std::uint64_t i = (static_cast<std::uint64_t>(w) << 6) | b;
      if (i >= total) break;
      const std::uint64_t j =
          (_pext_u64(i, high_mask) << low_count) | _pext_u64(i, low_mask);
      dst[j >> 6] |= Word{1} << (j & 63);
    }
  }
}

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi2") &&
         __builtin_cpu_supports("popcnt");
}

}  // namespace

const KernelTable* avx2() {
  static const KernelTable table{
      "avx2",      and_avx2,    or_avx2,       xor_avx2,
      andnot_avx2, mux_avx2,    gate_avx2,     popcount_avx2,
      equal_avx2,  any_avx2,    scatter_avx2,
  };
  static const bool supported = cpu_has_avx2();
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2() { return nullptr; }

#endif

}  // namespace necip::kernels
