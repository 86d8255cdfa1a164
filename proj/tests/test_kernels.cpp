#include <random>
#include <vector>

#include "doctest.h"
#include "necip/kernels.hpp"

using necip::kernels::KernelTable;
using necip::kernels::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> v(n);
  for (auto& w : v) w = rng();
  return v;
}

std::uint64_t pext_ref(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  unsigned k = 0;
  for (unsigned b = 0; b < 64; ++b)
    if ((mask >> b) & 1u) out |= ((x >> b) & 1u) << k++;
  return out;
}

void check_binary(const KernelTable& t, std::mt19937_64& rng) {
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 17u, 64u, 131u}) {
    const auto a = random_words(rng, n), b = random_words(rng, n), c = random_words(rng, n);
    std::vector<Word> d(n);
    t.and_words(d, a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(d[i] == (a[i] & b[i]));
    t.or_words(d, a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(d[i] == (a[i] | b[i]));
    t.xor_words(d, a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(d[i] == (a[i] ^ b[i]));
    t.andnot_words(d, a, b);
    for (std::size_t i = 0; i < n; ++i) CHECK(d[i] == (~a[i] & b[i]));
    t.mux_words(d, a, b, c);
    for (std::size_t i = 0; i < n; ++i) CHECK(d[i] == ((a[i] & c[i]) | (~a[i] & b[i])));
    for (unsigned g = 0; g < 16; ++g) {
      t.gate_words(d, g, a, b);
      for (std::size_t i = 0; i < n; ++i) {
        Word e = 0;
        for (unsigned bit = 0; bit < 64; ++bit) {
          const unsigned x = (a[i] >> bit) & 1u, y = (b[i] >> bit) & 1u;
          e |= Word{(g >> (3 - (2 * x + y))) & 1u} << bit;
        }
        CHECK(d[i] == e);
      }
    }
    std::uint64_t pop = 0;
    for (Word w : a) pop += __builtin_popcountll(w);
    CHECK(t.popcount(a) == pop);
    CHECK(t.equal(a, a));
    if (n) {
      auto e = a;
      e[n - 1] ^= Word{1} << 63;
      CHECK_FALSE(t.equal(a, e));
      std::vector<Word> z(n);
      CHECK_FALSE(t.any(z));
      z[n / 2] = 4;
      CHECK(t.any(z));
    }
  }
}

void check_scatter(const KernelTable& t, std::mt19937_64& rng) {
  for (unsigned bits : {1u, 3u, 6u, 7u, 9u, 12u}) {
    const std::size_t words = bits <= 6 ? 1 : std::size_t{1} << (bits - 6);
    for (int trial = 0; trial < 8; ++trial) {
      const std::uint64_t full = (std::uint64_t{1} << bits) - 1;
      const std::uint64_t high = rng() & full, low = full & ~high;
      auto src = random_words(rng, words);
      if (bits < 6) src[0] &= (Word{1} << (1u << bits)) - 1;
      std::vector<Word> dst(words), expect(words);
      t.scatter_bits(dst, src, bits, high, low);
      const unsigned low_count = __builtin_popcountll(low);
      for (std::uint64_t i = 0; i <= full; ++i) {
        if (!((src[i >> 6] >> (i & 63)) & 1u)) continue;
        const std::uint64_t j = (pext_ref(i, high) << low_count) | pext_ref(i, low);
        expect[j >> 6] |= Word{1} << (j & 63);
      }
      CHECK(dst == expect);
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels match bitwise definitions") {
  std::mt19937_64 rng(7);
  check_binary(necip::kernels::scalar(), rng);
  check_scatter(necip::kernels::scalar(), rng);
}

TEST_CASE("avx2 kernels match bitwise definitions") {
  const KernelTable* t = necip::kernels::avx2();
  if (!t) {
    MESSAGE("AVX2 unavailable on this host; skipped");
    return;
  }
  std::mt19937_64 rng(11);
  check_binary(*t, rng);
  check_scatter(*t, rng);
}

TEST_CASE("avx2 and scalar agree on long random inputs") {
  const KernelTable* v = necip::kernels::avx2();
  if (!v) return;
  const KernelTable& s = necip::kernels::scalar();
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 9u, 255u, 1024u}) {
    const auto a = random_words(rng, n), b = random_words(rng, n), c = random_words(rng, n);
    std::vector<Word> x(n), y(n);
    for (unsigned g = 0; g < 16; ++g) {
      s.gate_words(x, g, a, b);
      v->gate_words(y, g, a, b);
      CHECK(x == y);
    }
    s.mux_words(x, a, b, c);
    v->mux_words(y, a, b, c);
    CHECK(x == y);
    CHECK(s.popcount(a) == v->popcount(a));
  }
  for (unsigned bits = 6; bits <= 16; ++bits) {
    const std::size_t words = std::size_t{1} << (bits - 6);
    const std::uint64_t full = (std::uint64_t{1} << bits) - 1;
    const std::uint64_t high = rng() & full;
    const auto src = random_words(rng, words);
    std::vector<Word> x(words), y(words);
    s.scatter_bits(x, src, bits, high, full & ~high);
    v->scatter_bits(y, src, bits, high, full & ~high);
    CHECK(x == y);
  }
}

TEST_CASE("active table is one of the compiled variants") {
  const auto& a = necip::kernels::active();
  const bool known = &a == &necip::kernels::scalar() || &a == necip::kernels::avx2();
  CHECK(known);
}
