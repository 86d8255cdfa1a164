#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "necip/boolfn.hpp"
#include "necip/families.hpp"

namespace necip {

// Bounding functions take m through log2(m) so that m = 2^64 and beyond stay
// representable. Every function is 0 for m < 4.
std::uint64_t b_simple_nbp_log(double log2m);
std::uint64_t b_bp_log(double log2m);
std::uint64_t b_lnbp_log(unsigned delta, double log2m);
std::uint64_t b_lnbf_log(unsigned delta, double log2m);

std::uint64_t b_simple_nbp(std::uint64_t m);
std::uint64_t b_bp(std::uint64_t m);
std::uint64_t b_lnbp(unsigned delta, std::uint64_t m);
std::uint64_t b_lnbf(unsigned delta, std::uint64_t m);
std::uint64_t b_bf(std::uint64_t m);

// max{log2 m / (2^delta (log2 log2 m - delta)), log2 log2 m} when
// 2^{2^{delta+1}} <= m, else log2 log2 m.
double h_lnbp_log(unsigned delta, double log2m);

// max{x^2 / (2^delta (log2 x - delta) log2 x), x} when 2^{delta+1} <= x, else x.
double xi_lnbp(double x, unsigned delta);

// alpha * g(log2 log2 m) / log2 m.
double meta_function_cap_log(const std::function<double(double)>& g, double alpha,
                             double log2m);
// alpha * (4 + h(floor(x0))) * (n / log2 n) * h(2^n), with h given as a
// function of log2 of its argument.
double meta_limitation_cap(const std::function<double(double)>& h_of_log2, double alpha,
                           double x0, double n);

enum class BoundKind { SimpleNBP, LNBP, BP, LNBF, BF, Custom };

class BoundingFunction {
 public:
  static BoundingFunction simple_nbp() { return BoundingFunction(BoundKind::SimpleNBP, 0); }
  static BoundingFunction lnbp(unsigned delta) { return BoundingFunction(BoundKind::LNBP, delta); }
  static BoundingFunction bp() { return BoundingFunction(BoundKind::BP, 0); }
  static BoundingFunction lnbf(unsigned delta) { return BoundingFunction(BoundKind::LNBF, delta); }
  static BoundingFunction bf() { return BoundingFunction(BoundKind::BF, 0); }
  // Step function: value at m is the value of the largest key <= m (0 below
  // the first key). Throws unless values are non-decreasing in m.
  static BoundingFunction custom(std::map<std::uint64_t, std::uint64_t> table);

  // simple-nbp | bp | bf | lnbp:D | lnbf:D
  static BoundingFunction parse(const std::string& text);

  BoundKind kind() const { return kind_; }
  unsigned delta() const { return delta_; }
  std::string name() const;

  std::uint64_t operator()(std::uint64_t m) const;

 private:
  BoundingFunction(BoundKind kind, unsigned delta) : kind_(kind), delta_(delta) {}
  BoundKind kind_;
  unsigned delta_;
  std::map<std::uint64_t, std::uint64_t> table_;
};

// True if b is non-decreasing on every m <= exact_limit and on a geometric
// grid up to max_m.
bool is_non_decreasing(const BoundingFunction& b, std::uint64_t exact_limit = 4096,
                       std::uint64_t max_m = std::uint64_t{1} << 20);

struct BoundReport {
  std::string function;
  Partition partition;
  std::vector<std::uint64_t> r;
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> cost;  // b, or max{|V_i|, b} with the simple method
  std::uint64_t total = 0;
  std::string bounding_function;
  bool simple_method = false;
};

// sum_i b(r_{V_i}(f)). With simple_method each block contributes
// max{|V_i|, b(r_{V_i}(f))}, which needs f to depend on all its inputs.
BoundReport neciporuk_bound(const FunctionSpec& f, const Partition& partition,
                            const BoundingFunction& b, bool simple_method = false,
                            std::uint64_t budget = 0);

enum class SearchMode { Exact, Greedy };

struct PartitionSearchResult {
  Partition partition;
  std::uint64_t total = 0;
  std::uint64_t partitions_visited = 0;
};

// Exact: every set partition of [n] (n <= 10), first maximum in
// restricted-growth order. Greedy: from singletons, repeatedly apply the
// merge with the best resulting total while it does not decrease it; ties
// go to the lexicographically smallest pair of blocks.
PartitionSearchResult best_partition(const FunctionSpec& f, const BoundingFunction& b,
                                     SearchMode mode, bool simple_method = false);

inline constexpr unsigned kExactPartitionMaxArity = 10;

}  // namespace necip
