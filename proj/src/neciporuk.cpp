#include "necip/neciporuk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace necip {

namespace {

constexpr double kEps = 1e-9;

std::uint64_t ceil_eps(double x) {
  if (x <= 0) return 0;
  return static_cast<std::uint64_t>(std::ceil(x - kEps));
}

double log2_u64(std::uint64_t m) { return std::log2(static_cast<double>(m)); }

}  // namespace

std::uint64_t b_simple_nbp_log(double lg) {
  if (lg < 2) return 0;
  return ceil_eps(std::sqrt(0.5 * lg) - 1);
}

std::uint64_t b_bp_log(double lg) {
  if (lg < 2) return 0;
  return ceil_eps(lg / std::log2(lg) / 6);
}

double h_lnbp_log(unsigned delta, double lg) {
  const double llg = std::log2(lg);
  if (std::ldexp(1.0, static_cast<int>(delta) + 1) <= lg + kEps)
    return std::max(lg / (std::ldexp(1.0, static_cast<int>(delta)) * (llg - delta)), llg);
  return llg;
}

std::uint64_t b_lnbp_log(unsigned delta, double lg) {
  if (lg < 2) return 0;
  return ceil_eps(h_lnbp_log(delta, lg) / 6);
}

std::uint64_t b_lnbf_log(unsigned delta, double lg) {
  if (lg < 2) return 0;
  return ceil_eps(0.25 * std::max(lg / std::ldexp(1.0, static_cast<int>(delta)), std::log2(lg)));
}

std::uint64_t b_simple_nbp(std::uint64_t m) { return m < 4 ? 0 : b_simple_nbp_log(log2_u64(m)); }
std::uint64_t b_bp(std::uint64_t m) { return m < 4 ? 0 : b_bp_log(log2_u64(m)); }
std::uint64_t b_lnbp(unsigned delta, std::uint64_t m) {
  return m < 4 ? 0 : b_lnbp_log(delta, log2_u64(m));
}
std::uint64_t b_lnbf(unsigned delta, std::uint64_t m) {
  return m < 4 ? 0 : b_lnbf_log(delta, log2_u64(m));
}
std::uint64_t b_bf(std::uint64_t m) { return b_lnbf(0, m); }

double xi_lnbp(double x, unsigned delta) {
  if (x < 2) throw std::invalid_argument("xi_lnbp needs x >= 2");
  const double lx = std::log2(x);
  if (std::ldexp(1.0, static_cast<int>(delta) + 1) <= x)
    return std::max(x * x / (std::ldexp(1.0, static_cast<int>(delta)) * (lx - delta) * lx), x);
  return x;
}

double meta_function_cap_log(const std::function<double(double)>& g, double alpha,
                             double log2m) {
  if (log2m < 2) throw std::invalid_argument("meta_function_cap needs m >= 4");
  return alpha * g(std::log2(log2m)) / log2m;
}

double meta_limitation_cap(const std::function<double(double)>& h_of_log2, double alpha,
                           double x0, double n) {
  if (x0 < 256) throw std::invalid_argument("meta_limitation_cap needs x0 >= 2^8");
  if (n < std::log2(x0)) throw std::invalid_argument("meta_limitation_cap needs n >= log2 x0");
  return alpha * (4 + h_of_log2(std::log2(std::floor(x0)))) * (n / std::log2(n)) * h_of_log2(n);
}

BoundingFunction BoundingFunction::custom(std::map<std::uint64_t, std::uint64_t> table) {
  std::uint64_t prev = 0;
  for (const auto& [m, v] : table) {
    if (v < prev)
      throw std::invalid_argument("custom bounding function decreases at m = " +
                                  std::to_string(m));
    prev = v;
  }
  BoundingFunction b(BoundKind::Custom, 0);
  b.table_ = std::move(table);
  return b;
}

BoundingFunction BoundingFunction::parse(const std::string& text) {
  auto param = [&](const std::string& prefix) -> unsigned {
    return static_cast<unsigned>(std::stoul(text.substr(prefix.size())));
  };
  if (text == "simple-nbp" || text == "nbp" || text == "pbp") return simple_nbp();
  if (text == "bp") return bp();
  if (text == "bf") return bf();
  if (text.rfind("lnbp:", 0) == 0) return lnbp(param("lnbp:"));
  if (text.rfind("lnbf:", 0) == 0) return lnbf(param("lnbf:"));
  throw std::invalid_argument("unknown bounding function '" + text + "'");
}

std::string BoundingFunction::name() const {
  switch (kind_) {
    case BoundKind::SimpleNBP: return "simple-nbp";
    case BoundKind::LNBP: return "lnbp:" + std::to_string(delta_);
    case BoundKind::BP: return "bp";
    case BoundKind::LNBF: return "lnbf:" + std::to_string(delta_);
    case BoundKind::BF: return "bf";
    case BoundKind::Custom: return "custom";
  }
  return "?";
}

std::uint64_t BoundingFunction::operator()(std::uint64_t m) const {
  switch (kind_) {
    case BoundKind::SimpleNBP: return b_simple_nbp(m);
    case BoundKind::LNBP: return b_lnbp(delta_, m);
    case BoundKind::BP: return b_bp(m);
    case BoundKind::LNBF: return b_lnbf(delta_, m);
    case BoundKind::BF: return b_bf(m);
    case BoundKind::Custom: {
      auto it = table_.upper_bound(m);
      if (it == table_.begin()) return 0;
      return std::prev(it)->second;
    }
  }
  return 0;
}

bool is_non_decreasing(const BoundingFunction& b, std::uint64_t exact_limit,
                       std::uint64_t max_m) {
  std::uint64_t prev = 0;
  for (std::uint64_t m = 1; m <= exact_limit; ++m) {
    const auto v = b(m);
    if (v < prev) return false;
    prev = v;
  }
  for (double x = static_cast<double>(exact_limit); x <= static_cast<double>(max_m); x *= 1.01) {
    const auto v = b(static_cast<std::uint64_t>(x));
    if (v < prev) return false;
    prev = v;
  }
  return b(max_m) >= prev;
}

namespace {

std::uint64_t block_cost(const BoundingFunction& b, std::uint64_t r, std::size_t width,
                         bool simple) {
  const std::uint64_t v = b(r);
  return simple ? std::max<std::uint64_t>(v, width) : v;
}

void require_full_support(const TruthTable& t) {
  if (support(t).size() != t.arity())
    throw std::invalid_argument(
        "the simple method needs a function that depends on all its inputs");
}

}  // namespace

BoundReport neciporuk_bound(const FunctionSpec& f, const Partition& partition,
                            const BoundingFunction& b, bool simple_method,
                            std::uint64_t budget) {
  if (partition.arity() != f.arity())
    throw std::invalid_argument("partition arity does not match the function");
  BoundReport rep;
  rep.function = f.name();
  rep.partition = partition;
  rep.bounding_function = b.name();
  rep.simple_method = simple_method;
  std::optional<TruthTable> table;
  if (f.tabulable()) table = f.to_table();
  if (simple_method) {
    if (!table) throw std::invalid_argument("the simple method needs a tabulable function");
    require_full_support(*table);
  }
  for (const IndexSet& block : partition.blocks()) {
    const std::uint64_t r = table ? count_subfunctions(*table, block, false, budget).count
                                  : count_subfunctions(f, block, budget);
    rep.r.push_back(r);
    rep.b.push_back(b(r));
    rep.cost.push_back(block_cost(b, r, block.size(), simple_method));
    rep.total += rep.cost.back();
  }
  return rep;
}

namespace {

IndexSet mask_to_set(std::uint32_t mask) {
  IndexSet out;
  for (unsigned i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

class CostCache {
 public:
  CostCache(const TruthTable& t, const BoundingFunction& b, bool simple)
      : t_(t), b_(b), simple_(simple) {}

  std::uint64_t operator()(std::uint32_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    const IndexSet v = mask_to_set(mask);
    const std::uint64_t r = count_subfunctions(t_, v).count;
    const std::uint64_t c = block_cost(b_, r, v.size(), simple_);
    cache_.emplace(mask, c);
    return c;
  }

 private:
  const TruthTable& t_;
  const BoundingFunction& b_;
  bool simple_;
  std::unordered_map<std::uint32_t, std::uint64_t> cache_;
};

Partition from_masks(unsigned n, std::vector<std::uint32_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_ctz(a) < __builtin_ctz(b);
  });
  std::vector<IndexSet> blocks;
  for (auto m : masks) blocks.push_back(mask_to_set(m));
  return Partition(n, std::move(blocks));
}

}  // namespace

PartitionSearchResult best_partition(const FunctionSpec& f, const BoundingFunction& b,
                                     SearchMode mode, bool simple_method) {
  const unsigned n = f.arity();
  if (n == 0) throw std::invalid_argument("partition search needs n >= 1");
  if (!f.tabulable()) throw std::invalid_argument("partition search needs a tabulable function");
  const TruthTable t = f.to_table();
  if (simple_method) require_full_support(t);
  CostCache cost(t, b, simple_method);
  PartitionSearchResult out;

  if (mode == SearchMode::Exact) {
    if (n > kExactPartitionMaxArity)
      throw std::invalid_argument("exact partition search supports n <= " +
                                  std::to_string(kExactPartitionMaxArity));
    // Restricted growth strings a[0..n) with a[0] = 0, a[i] <= max(a[<i]) + 1.
    std::vector<unsigned> a(n, 0), mx(n, 0);
    std::vector<std::uint32_t> best_masks;
    bool have = false;
    while (true) {
      std::vector<std::uint32_t> masks(mx[n - 1] + 1, 0);
      for (unsigned i = 0; i < n; ++i) masks[a[i]] |= 1u << i;
      std::uint64_t total = 0;
      for (auto m : masks) total += cost(m);
      ++out.partitions_visited;
      if (!have || total > out.total) {
        have = true;
        out.total = total;
        best_masks = masks;
      }
      int i = static_cast<int>(n) - 1;
      while (i > 0 && a[i] == mx[i - 1] + 1) --i;
      if (i == 0) break;
      ++a[i];
      mx[i] = std::max(mx[i - 1], a[i]);
      for (unsigned j = i + 1; j < n; ++j) {
        a[j] = 0;
        mx[j] = mx[i];
      }
    }
    out.partition = from_masks(n, best_masks);
    return out;
  }

  std::vector<std::uint32_t> blocks;
  for (unsigned i = 0; i < n; ++i) blocks.push_back(1u << i);
  std::uint64_t total = 0;
  for (auto m : blocks) total += cost(m);
  out.partitions_visited = 1;
  while (blocks.size() > 1) {
    std::size_t bi = 0, bj = 0;
    std::int64_t best_delta = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        const std::int64_t d = static_cast<std::int64_t>(cost(blocks[i] | blocks[j])) -
                               static_cast<std::int64_t>(cost(blocks[i])) -
                               static_cast<std::int64_t>(cost(blocks[j]));
        ++out.partitions_visited;
        if (d > best_delta) {
          best_delta = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (best_delta < 0) break;
    total = static_cast<std::uint64_t>(static_cast<std::int64_t>(total) + best_delta);
    blocks[bi] |= blocks[bj];
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  out.total = total;
  out.partition = from_masks(n, blocks);
  return out;
}

}  // namespace necip
