#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "necip/truth_table.hpp"

namespace necip {

using BigInt = boost::multiprecision::cpp_int;

// Sorted, duplicate-free list of 0-based variable indices.
using IndexSet = std::vector<unsigned>;

// Fixes the variables of `domain` (0-based, strictly increasing) to `values`.
struct PartialAssignment {
  IndexSet domain;
  std::vector<std::uint8_t> values;

  static PartialAssignment from_pairs(std::vector<std::pair<unsigned, std::uint8_t>> pairs);
};

// Disjoint nonempty blocks covering [0, n). Block order is meaningful (it is
// the order reports list them in); indices inside a block are sorted.
class Partition {
 public:
  Partition() = default;
  Partition(unsigned n, std::vector<IndexSet> blocks);

  static Partition singletons(unsigned n);
  static Partition whole(unsigned n);

  unsigned arity() const { return n_; }
  const std::vector<IndexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  // "{1,2}|{3}" with 1-based indices.
  std::string to_string() const;
  // Parses "1,2|3" or "{1,2}|{3}" (1-based).
  static Partition parse(unsigned n, const std::string& text);

  bool operator==(const Partition&) const = default;

 private:
  unsigned n_ = 0;
  std::vector<IndexSet> blocks_;
};

IndexSet normalize_index_set(std::vector<unsigned> v, unsigned n);
IndexSet complement(const IndexSet& v, unsigned n);

bool eval(const TruthTable& f, std::span<const std::uint8_t> a);

TruthTable restrict(const TruthTable& f, const PartialAssignment& rho);

// Table of f with its variables reordered: index = (rho << |v|) | y where
// rho ranges over assignments to the complement of v (in index order) and
// y over assignments to v (in index order). Every restriction f|_rho on v is
// then the contiguous bit range [rho * 2^|v|, (rho + 1) * 2^|v|).
TruthTable group_variables(const TruthTable& f, const IndexSet& v);

struct SubfunctionCount {
  std::uint64_t count = 0;
  std::optional<std::vector<TruthTable>> tables;  // sorted by to_hex()
};

// r_V(f): the number of distinct restrictions of f to V. Throws
// BudgetExceeded when 2^(n-|V|) exceeds `budget`.
SubfunctionCount count_subfunctions(const TruthTable& f, const IndexSet& v,
                                    bool collect = false,
                                    std::uint64_t budget = 0);

bool depends_on(const TruthTable& f, unsigned var);
IndexSet support(const TruthTable& f);

// f'(a_1..a_m) = f(a_1..a_n) for m >= n.
TruthTable pad(const TruthTable& f, unsigned new_arity);

// f(a) = OR over all 2^delta suffixes b of g(a, b); g has arity n + delta.
TruthTable or_project_suffix(const TruthTable& g, unsigned delta);

// sum_{i=0}^{r} C(m, i)
BigInt hamming_ball_volume(std::uint64_t m, std::uint64_t r);

}  // namespace necip
