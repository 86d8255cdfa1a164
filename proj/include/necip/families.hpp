#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>

#include "necip/boolfn.hpp"
#include "necip/truth_table.hpp"

namespace necip {

// Smallest b with 2^b >= m (m >= 1).
unsigned ceil_log2(std::uint64_t m);

// Variable positions (0-based) of an ISA_{k,l} instance.
//   primary pointer:       [0, k)
//   secondary pointer p:   k + l*p + [0, l)        for p in [0, 2^k)
//   data bit b:            k + l*2^k + b           for b in [0, 2^l)
struct IsaLayout {
  unsigned k = 1;
  unsigned l = 1;

  IsaLayout(unsigned k, unsigned l);

  unsigned arity() const { return k + (1u << k) * l + (1u << l); }
  unsigned primary(unsigned i) const { return i; }
  unsigned secondary(unsigned p, unsigned j) const { return k + l * p + j; }
  unsigned data(std::uint64_t b) const {
    return k + l * (1u << k) + static_cast<unsigned>(b);
  }
  unsigned pointers() const { return 1u << k; }
  unsigned data_bits() const { return 1u << l; }
};

bool ed_eval(unsigned N, unsigned m, std::span<const std::uint8_t> a);
bool isa_eval(unsigned k, unsigned l, std::span<const std::uint8_t> a);
std::uint64_t h_isa(unsigned m);
bool isa_family_eval(unsigned n, std::span<const std::uint8_t> a);

// The k with h_isa(k) <= n < h_isa(k + 1); requires n >= 5.
unsigned isa_family_level(unsigned n);

// Blocks V_1..V_{2^k} (secondary pointers) followed by U (everything else).
Partition isa_partition(unsigned k, unsigned l);

struct IsaFamilyPartition {
  Partition partition;
  std::uint64_t p = 0;  // number of pointer blocks
  std::uint64_t q = 0;  // log2 of the subfunction count on each pointer block
  unsigned k = 0;
};
IsaFamilyPartition isa_n_partition(unsigned n);

Partition ed_partition(unsigned N, unsigned m);

struct EdKind {
  unsigned N;
  unsigned m;
};
struct IsaKind {
  unsigned k;
  unsigned l;
};
struct IsaFamilyKind {
  unsigned n;
};
struct TableKind {
  TruthTable table;
};

// A Boolean function given either by a hard-function generator or a table.
// Generators are evaluated lazily, so arities beyond the table cap work for
// pointwise evaluation and (budget permitting) subfunction counting.
class FunctionSpec {
 public:
  using Kind = std::variant<EdKind, IsaKind, IsaFamilyKind, TableKind>;

  static FunctionSpec ed(unsigned N, unsigned m);
  static FunctionSpec isa(unsigned k, unsigned l);
  static FunctionSpec isa_family(unsigned n);
  static FunctionSpec table(TruthTable t);

  const Kind& kind() const { return kind_; }
  unsigned arity() const { return arity_; }
  // ed:N,m / isa:k,l / isan:n / table
  std::string name() const;

  bool eval(std::span<const std::uint8_t> a) const;
  // Evaluates at the input whose big-endian value is `index` (arity <= 63).
  bool eval_index(std::uint64_t index) const;

  bool tabulable() const { return arity_ <= TruthTable::kMaxArity; }
  TruthTable to_table() const;

  // The partition the function family is built around, if it has one.
  Partition canonical_partition() const;

 private:
  FunctionSpec(Kind kind, unsigned arity) : kind_(std::move(kind)), arity_(arity) {}
  Kind kind_;
  unsigned arity_;
};

// r_V(f) for a lazily evaluated function. Tabulates when the arity allows,
// otherwise evaluates restriction by restriction.
std::uint64_t count_subfunctions(const FunctionSpec& f, const IndexSet& v,
                                 std::uint64_t budget = 0);

}  // namespace necip
