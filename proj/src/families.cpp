#include "necip/families.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "necip/errors.hpp"

namespace necip {

unsigned ceil_log2(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("ceil_log2 of zero");
  unsigned b = 0;
  while ((std::uint64_t{1} << b) < m) ++b;
  return b;
}

IsaLayout::IsaLayout(unsigned k_, unsigned l_) : k(k_), l(l_) {
  if (k == 0 || l == 0) throw std::invalid_argument("ISA needs k, l >= 1");
  if (k > 24 || l > 24) throw std::invalid_argument("ISA parameters too large");
}

namespace {

template <typename Bit>
bool ed_eval_with(unsigned N, unsigned m, Bit bit) {
  const unsigned width = ceil_log2(m);
  std::vector<std::uint64_t> values;
  values.reserve(N);
  for (unsigned i = 0; i < N; ++i) {
    std::uint64_t v = 0;
    for (unsigned j = 0; j < width; ++j) v = (v << 1) | (bit(i * width + j) ? 1u : 0u);
    // Field value v encodes the element v + 1 of [m].
    if (v + 1 > m) return false;
    values.push_back(v);
  }
  std::unordered_set<std::uint64_t> seen(values.begin(), values.end());
  return seen.size() == values.size();
}

template <typename Bit>
bool isa_eval_with(const IsaLayout& lay, Bit bit) {
  std::uint64_t alpha = 0;
  for (unsigned i = 0; i < lay.k; ++i) alpha = (alpha << 1) | (bit(lay.primary(i)) ? 1u : 0u);
  std::uint64_t beta = 0;
  for (unsigned j = 0; j < lay.l; ++j)
    beta = (beta << 1) | (bit(lay.secondary(static_cast<unsigned>(alpha), j)) ? 1u : 0u);
  return bit(lay.data(beta));
}

unsigned ed_arity(unsigned N, unsigned m) { return N * ceil_log2(m); }

void check_arity(std::size_t got, unsigned want) {
  if (got != want)
    throw std::invalid_argument("assignment has " + std::to_string(got) +
                                " bits, expected " + std::to_string(want));
}

IsaLayout family_layout(unsigned k) { return IsaLayout(k, k + ceil_log2(k)); }

}  // namespace

bool ed_eval(unsigned N, unsigned m, std::span<const std::uint8_t> a) {
  check_arity(a.size(), ed_arity(N, m));
  return ed_eval_with(N, m, [&](unsigned pos) { return a[pos] != 0; });
}

bool isa_eval(unsigned k, unsigned l, std::span<const std::uint8_t> a) {
  const IsaLayout lay(k, l);
  check_arity(a.size(), lay.arity());
  return isa_eval_with(lay, [&](unsigned pos) { return a[pos] != 0; });
}

std::uint64_t h_isa(unsigned m) {
  if (m == 0) throw std::invalid_argument("h_isa is defined for m >= 1");
  const unsigned l = m + ceil_log2(m);
  if (l >= 60) throw std::overflow_error("h_isa overflows 64 bits");
  return m + (std::uint64_t{1} << m) * l + (std::uint64_t{1} << l);
}

unsigned isa_family_level(unsigned n) {
  if (n < 5) throw std::invalid_argument("ISA_n pointer structure needs n >= 5");
  unsigned k = 1;
  while (h_isa(k + 1) <= n) ++k;
  return k;
}

bool isa_family_eval(unsigned n, std::span<const std::uint8_t> a) {
  check_arity(a.size(), n);
  if (n < 5) return false;
  const IsaLayout lay = family_layout(isa_family_level(n));
  return isa_eval_with(lay, [&](unsigned pos) { return a[pos] != 0; });
}

Partition isa_partition(unsigned k, unsigned l) {
  const IsaLayout lay(k, l);
  std::vector<IndexSet> blocks;
  IndexSet rest;
  for (unsigned i = 0; i < k; ++i) rest.push_back(lay.primary(i));
  for (unsigned p = 0; p < lay.pointers(); ++p) {
    IndexSet b;
    for (unsigned j = 0; j < l; ++j) b.push_back(lay.secondary(p, j));
    blocks.push_back(std::move(b));
  }
  for (unsigned b = 0; b < lay.data_bits(); ++b) rest.push_back(lay.data(b));
  blocks.push_back(std::move(rest));
  return Partition(lay.arity(), std::move(blocks));
}

IsaFamilyPartition isa_n_partition(unsigned n) {
  const unsigned k = isa_family_level(n);
  const IsaLayout lay = family_layout(k);
  std::vector<IndexSet> blocks = isa_partition(lay.k, lay.l).blocks();
  for (unsigned i = lay.arity(); i < n; ++i) blocks.back().push_back(i);
  IsaFamilyPartition out;
  out.partition = Partition(n, std::move(blocks));
  out.p = lay.pointers();
  out.q = std::uint64_t{1} << lay.l;
  out.k = k;
  return out;
}

Partition ed_partition(unsigned N, unsigned m) {
  const unsigned width = ceil_log2(m);
  if (width == 0) throw std::invalid_argument("ED with m = 1 has no input bits");
  std::vector<IndexSet> blocks;
  for (unsigned i = 0; i < N; ++i) {
    IndexSet b;
    for (unsigned j = 0; j < width; ++j) b.push_back(i * width + j);
    blocks.push_back(std::move(b));
  }
  return Partition(N * width, std::move(blocks));
}

FunctionSpec FunctionSpec::ed(unsigned N, unsigned m) {
  if (N == 0 || m < N) throw std::invalid_argument("ED needs 1 <= N <= m");
  return FunctionSpec(EdKind{N, m}, ed_arity(N, m));
}

FunctionSpec FunctionSpec::isa(unsigned k, unsigned l) {
  const IsaLayout lay(k, l);
  return FunctionSpec(IsaKind{k, l}, lay.arity());
}

FunctionSpec FunctionSpec::isa_family(unsigned n) { return FunctionSpec(IsaFamilyKind{n}, n); }

FunctionSpec FunctionSpec::table(TruthTable t) {
  const unsigned n = t.arity();
  return FunctionSpec(TableKind{std::move(t)}, n);
}

std::string FunctionSpec::name() const {
  struct Visitor {
    std::string operator()(const EdKind& e) const {
      return "ed:" + std::to_string(e.N) + "," + std::to_string(e.m);
    }
    std::string operator()(const IsaKind& i) const {
      return "isa:" + std::to_string(i.k) + "," + std::to_string(i.l);
    }
    std::string operator()(const IsaFamilyKind& i) const { return "isan:" + std::to_string(i.n); }
    std::string operator()(const TableKind&) const { return "table"; }
  };
  return std::visit(Visitor{}, kind_);
}

namespace {

template <typename Bit>
bool eval_kind(const FunctionSpec::Kind& kind, unsigned arity, Bit bit,
               std::uint64_t table_index) {
  if (const auto* e = std::get_if<EdKind>(&kind)) return ed_eval_with(e->N, e->m, bit);
  if (const auto* i = std::get_if<IsaKind>(&kind)) return isa_eval_with(IsaLayout(i->k, i->l), bit);
  if (std::get_if<IsaFamilyKind>(&kind)) {
    if (arity < 5) return false;
    return isa_eval_with(family_layout(isa_family_level(arity)), bit);
  }
  return std::get<TableKind>(kind).table.bit(table_index);
}

}  // namespace

bool FunctionSpec::eval(std::span<const std::uint8_t> a) const {
  check_arity(a.size(), arity_);
  const std::uint64_t idx = std::holds_alternative<TableKind>(kind_) ? index_of(a) : 0;
  return eval_kind(kind_, arity_, [&](unsigned pos) { return a[pos] != 0; }, idx);
}

bool FunctionSpec::eval_index(std::uint64_t index) const {
  if (arity_ > 63) throw std::invalid_argument("eval_index needs arity <= 63");
  const unsigned n = arity_;
  return eval_kind(
      kind_, arity_, [&](unsigned pos) { return ((index >> (n - 1 - pos)) & 1u) != 0; }, index);
}

TruthTable FunctionSpec::to_table() const {
  if (const auto* t = std::get_if<TableKind>(&kind_)) return t->table;
  if (!tabulable())
    throw BudgetExceeded(name() + " has arity " + std::to_string(arity_) +
                         ", beyond the truth-table cap");
  return TruthTable::from_function(arity_, [this](std::uint64_t i) { return eval_index(i); });
}

Partition FunctionSpec::canonical_partition() const {
  if (const auto* e = std::get_if<EdKind>(&kind_)) return ed_partition(e->N, e->m);
  if (const auto* i = std::get_if<IsaKind>(&kind_)) return isa_partition(i->k, i->l);
  if (const auto* f = std::get_if<IsaFamilyKind>(&kind_)) return isa_n_partition(f->n).partition;
  throw std::invalid_argument("table-backed functions have no canonical partition");
}

namespace {

struct KeyHash {
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

std::uint64_t count_subfunctions(const FunctionSpec& f, const IndexSet& v_in,
                                 std::uint64_t budget) {
  const unsigned n = f.arity();
  const IndexSet v = normalize_index_set(v_in, n);
  if (budget == 0) budget = default_budget();
  const unsigned rest = n - static_cast<unsigned>(v.size());
  if (rest >= 63 || (std::uint64_t{1} << rest) > budget)
    throw BudgetExceeded("subfunction enumeration needs 2^" + std::to_string(rest) +
                         " restrictions, budget is " + std::to_string(budget));
  if (f.tabulable()) return count_subfunctions(f.to_table(), v, false, budget).count;

  if (v.size() > TruthTable::kMaxArity)
    throw BudgetExceeded("block of " + std::to_string(v.size()) + " variables is too wide");
  const IndexSet others = complement(v, n);
  const std::uint64_t points = std::uint64_t{1} << v.size();
  std::unordered_set<std::vector<Word>, KeyHash> seen;
  Assignment a(n, 0);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << rest); ++r) {
    for (unsigned i = 0; i < rest; ++i) a[others[i]] = (r >> (rest - 1 - i)) & 1u;
    std::vector<Word> key(word_count(static_cast<unsigned>(v.size())), 0);
    for (std::uint64_t y = 0; y < points; ++y) {
      for (std::size_t i = 0; i < v.size(); ++i)
        a[v[i]] = (y >> (v.size() - 1 - i)) & 1u;
      if (f.eval(a)) key[y >> 6] |= Word{1} << (y & 63);
    }
    seen.insert(std::move(key));
  }
  return seen.size();
}

}  // namespace necip
