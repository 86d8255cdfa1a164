#include "necip/boolfn.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "necip/errors.hpp"

namespace necip {

PartialAssignment PartialAssignment::from_pairs(
    std::vector<std::pair<unsigned, std::uint8_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  PartialAssignment rho;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].first == pairs[i - 1].first)
      throw std::invalid_argument("partial assignment fixes a variable twice");
    rho.domain.push_back(pairs[i].first);
    rho.values.push_back(pairs[i].second & 1u);
  }
  return rho;
}

IndexSet normalize_index_set(std::vector<unsigned> v, unsigned n) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument("index set contains a repeated index");
  if (!v.empty() && v.back() >= n)
    throw std::invalid_argument("index " + std::to_string(v.back() + 1) +
                                " out of range [1, " + std::to_string(n) + "]");
  return v;
}

IndexSet complement(const IndexSet& v, unsigned n) {
  IndexSet out;
  std::size_t j = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (j < v.size() && v[j] == i) {
      ++j;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Partition::Partition(unsigned n, std::vector<IndexSet> blocks) : n_(n) {
  std::vector<bool> seen(n, false);
  for (IndexSet& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    b = normalize_index_set(std::move(b), n);
    for (unsigned i : b) {
      if (seen[i])
        throw std::invalid_argument("index " + std::to_string(i + 1) +
                                    " appears in two blocks");
      seen[i] = true;
    }
  }
  for (unsigned i = 0; i < n; ++i)
    if (!seen[i])
      throw std::invalid_argument("index " + std::to_string(i + 1) +
                                  " is not covered by the partition");
  blocks_ = std::move(blocks);
}

Partition Partition::singletons(unsigned n) {
  std::vector<IndexSet> blocks;
  for (unsigned i = 0; i < n; ++i) blocks.push_back({i});
  return Partition(n, std::move(blocks));
}

Partition Partition::whole(unsigned n) {
  if (n == 0) return Partition(0, {});
  IndexSet all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i;
  return Partition(n, {all});
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << '|';
    os << '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) os << ',';
      os << blocks_[b][i] + 1;
    }
    os << '}';
  }
  return os.str();
}

Partition Partition::parse(unsigned n, const std::string& text) {
  std::vector<IndexSet> blocks;
  IndexSet current;
  std::string number;
  auto flush_number = [&] {
    if (number.empty()) return;
    const unsigned long v = std::stoul(number);
    if (v == 0) throw std::invalid_argument("partition indices are 1-based");
    current.push_back(static_cast<unsigned>(v - 1));
    number.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      number.push_back(c);
    } else if (c == ',' || c == ' ') {
      flush_number();
    } else if (c == '|') {
      flush_number();
      blocks.push_back(std::move(current));
      current.clear();
    } else if (c == '{' || c == '}') {
      flush_number();
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in partition");
    }
  }
  flush_number();
  blocks.push_back(std::move(current));
  return Partition(n, std::move(blocks));
}

bool eval(const TruthTable& f, std::span<const std::uint8_t> a) {
  if (a.size() != f.arity())
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) +
                                " bits, function arity is " + std::to_string(f.arity()));
  return f.bit(index_of(a));
}

namespace {

std::uint64_t index_mask(const IndexSet& vars, unsigned n) {
  std::uint64_t m = 0;
  for (unsigned v : vars) m |= std::uint64_t{1} << index_bit(n, v);
  return m;
}

// Inverse of pext: spreads the low bits of x over the set bits of mask.
std::uint64_t deposit(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    const std::uint64_t low = mask & (~mask + 1);
    if (x & 1u) out |= low;
    x >>= 1;
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

TruthTable restrict(const TruthTable& f, const PartialAssignment& rho) {
  const unsigned n = f.arity();
  if (rho.domain.size() != rho.values.size())
    throw std::invalid_argument("partial assignment domain/value length mismatch");
  for (std::size_t i = 0; i < rho.domain.size(); ++i) {
    if (rho.domain[i] >= n)
      throw std::invalid_argument("restriction index " + std::to_string(rho.domain[i] + 1) +
                                  " out of range");
    if (i > 0 && rho.domain[i] <= rho.domain[i - 1])
      throw std::invalid_argument("partial assignment domain must be strictly increasing");
  }
  std::uint64_t fixed = 0;
  for (std::size_t i = 0; i < rho.domain.size(); ++i)
    if (rho.values[i]) fixed |= std::uint64_t{1} << index_bit(n, rho.domain[i]);

  const IndexSet free = complement(rho.domain, n);
  const std::uint64_t free_mask = index_mask(free, n);
  const unsigned m = static_cast<unsigned>(free.size());
  TruthTable out(m);
  for (std::uint64_t y = 0; y < out.size(); ++y)
    if (f.bit(fixed | deposit(y, free_mask))) out.set(y, true);
  return out;
}

TruthTable group_variables(const TruthTable& f, const IndexSet& v) {
  const unsigned n = f.arity();
  const IndexSet rest = complement(v, n);
  TruthTable out(n);
  kernels::active().scatter_bits(out.words(), f.words(), n, index_mask(rest, n),
                                 index_mask(v, n));
  return out;
}

namespace {

struct WordVecHash {
  std::size_t operator()(const std::vector<Word>& v) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ull;
    for (Word w : v) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

SubfunctionCount count_subfunctions(const TruthTable& f, const IndexSet& v_in,
                                    bool collect, std::uint64_t budget) {
  const unsigned n = f.arity();
  const IndexSet v = normalize_index_set(v_in, n);
  const unsigned k = static_cast<unsigned>(v.size());
  const unsigned rest = n - k;
  if (budget == 0) budget = default_budget();
  if (rest >= 63 || (std::uint64_t{1} << rest) > budget)
    throw BudgetExceeded("subfunction enumeration needs 2^" + std::to_string(rest) +
                         " restrictions, budget is " + std::to_string(budget));

  const TruthTable grouped = group_variables(f, v);
  const auto words = grouped.words();
  const std::uint64_t restrictions = std::uint64_t{1} << rest;
  SubfunctionCount result;

  if (k <= 6) {
    const unsigned width = 1u << k;
    const Word mask = width == 64 ? ~Word{0} : ((Word{1} << width) - 1);
    std::unordered_set<Word> seen;
    for (std::uint64_t r = 0; r < restrictions; ++r) {
      const std::uint64_t bit = r * width;
      seen.insert((words[bit >> 6] >> (bit & 63)) & mask);
    }
    result.count = seen.size();
    if (collect) {
      std::vector<TruthTable> tables;
      for (Word w : seen) {
        TruthTable t(k);
        t.words()[0] = w;
        tables.push_back(std::move(t));
      }
      result.tables = std::move(tables);
    }
  } else {
    const std::size_t per = std::size_t{1} << (k - 6);
    std::unordered_set<std::vector<Word>, WordVecHash> seen;
    for (std::uint64_t r = 0; r < restrictions; ++r) {
      const auto first = words.begin() + static_cast<std::ptrdiff_t>(r * per);
      seen.emplace(first, first + static_cast<std::ptrdiff_t>(per));
    }
    result.count = seen.size();
    if (collect) {
      std::vector<TruthTable> tables;
      for (const auto& key : seen) {
        TruthTable t(k);
        std::copy(key.begin(), key.end(), t.words().begin());
        tables.push_back(std::move(t));
      }
      result.tables = std::move(tables);
    }
  }
  if (result.tables) {
    std::sort(result.tables->begin(), result.tables->end(),
              [](const TruthTable& a, const TruthTable& b) { return a.to_hex() < b.to_hex(); });
  }
  return result;
}

bool depends_on(const TruthTable& f, unsigned var) {
  const unsigned n = f.arity();
  if (var >= n)
    throw std::invalid_argument("variable index " + std::to_string(var + 1) +
                                " out of range");
  const unsigned pos = index_bit(n, var);
  const auto words = f.words();
  if (pos >= 6) {
    const std::size_t stride = std::size_t{1} << (pos - 6);
    const auto& k = kernels::active();
    for (std::size_t base = 0; base < words.size(); base += 2 * stride) {
      if (!k.equal(words.subspan(base, stride), words.subspan(base + stride, stride)))
        return true;
    }
    return false;
  }
  static constexpr Word kLow[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
      0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
  const unsigned shift = 1u << pos;
  for (Word w : words)
    if (((w >> shift) ^ w) & kLow[pos]) return true;
  return false;
}

IndexSet support(const TruthTable& f) {
  IndexSet out;
  for (unsigned i = 0; i < f.arity(); ++i)
    if (depends_on(f, i)) out.push_back(i);
  return out;
}

TruthTable pad(const TruthTable& f, unsigned new_arity) {
  if (new_arity < f.arity())
    throw std::invalid_argument("pad target arity " + std::to_string(new_arity) +
                                " is smaller than " + std::to_string(f.arity()));
  const unsigned extra = new_arity - f.arity();
  TruthTable out(new_arity);
  const std::uint64_t run = std::uint64_t{1} << extra;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (!f.bit(i)) continue;
    for (std::uint64_t j = 0; j < run; ++j) out.set((i << extra) | j, true);
  }
  return out;
}

TruthTable or_project_suffix(const TruthTable& g, unsigned delta) {
  if (delta > g.arity()) throw std::invalid_argument("more guess variables than inputs");
  const unsigned n = g.arity() - delta;
  if (delta == 0) return g;
  IndexSet inputs(n);
  for (unsigned i = 0; i < n; ++i) inputs[i] = i;
  // Guess bits become the high index bits: slice s holds g(., s).
  const TruthTable grouped = group_variables(g, inputs);
  TruthTable out(n);
  const std::uint64_t slices = std::uint64_t{1} << delta;
  if (n >= 6) {
    const std::size_t per = word_count(n);
    const auto& k = kernels::active();
    for (std::uint64_t s = 0; s < slices; ++s)
      k.or_words(out.words(), out.words(), grouped.words().subspan(s * per, per));
  } else {
    const unsigned width = 1u << n;
    const Word mask = (Word{1} << width) - 1;
    Word acc = 0;
    for (std::uint64_t s = 0; s < slices; ++s) {
      const std::uint64_t bit = s * width;
      acc |= (grouped.words()[bit >> 6] >> (bit & 63)) & mask;
    }
    out.words()[0] = acc;
  }
  return out;
}

BigInt hamming_ball_volume(std::uint64_t m, std::uint64_t r) {
  if (r >= m) return BigInt(1) << static_cast<unsigned>(m);
  BigInt term = 1;
  BigInt total = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    term = term * (m - i) / (i + 1);
    total += term;
  }
  return total;
}

}  // namespace necip
