#include "necip/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "necip/errors.hpp"
#include "necip/formula.hpp"

namespace necip::oracle {

namespace {

using Fn = std::uint64_t;  // truth table over 2^n <= 16 inputs

Fn all_ones(unsigned n) { return (Fn{1} << (1u << n)) - 1; }

// Inputs where x_{var+1} = 1.
Fn projection(unsigned n, unsigned var) {
  Fn out = 0;
  for (unsigned i = 0; i < (1u << n); ++i)
    if ((i >> (n - 1 - var)) & 1u) out |= Fn{1} << i;
  return out;
}

void check_budget(unsigned n, unsigned s, Model model, bool allow_huge) {
  if (n > kMaxOracleArity)
    throw BudgetExceeded("oracle supports n <= " + std::to_string(kMaxOracleArity));
  const Budget b = default_budget(model);
  if (!allow_huge && (n > b.max_n || s > b.max_s))
    throw BudgetExceeded("oracle instance (n=" + std::to_string(n) + ", s=" +
                         std::to_string(s) + ") exceeds the " + model_name(model) +
                         " budget (n<=" + std::to_string(b.max_n) +
                         ", s<=" + std::to_string(b.max_s) + ")");
}

void record(std::vector<int>& best, Fn f, unsigned s) {
  if (best[f] < 0 || static_cast<unsigned>(best[f]) > s) best[f] = static_cast<int>(s);
}

// Programs on v_1..v_s plus t1 (index s); v_1 is the start vertex. Arcs
// never enter v_1 or leave to t0 (such arcs do not change the semantics).
void nondeterministic_sizes(unsigned n, unsigned s, bool parity, std::vector<int>& best) {
  const unsigned t1 = s;
  const Fn ones = all_ones(n);
  std::vector<Fn> proj(n);
  for (unsigned i = 0; i < n; ++i) proj[i] = projection(n, i);

  // Candidate successors of vertex v: v_2..v_s except v itself, and t1.
  std::vector<std::vector<unsigned>> cand(s);
  for (unsigned v = 0; v < s; ++v) {
    for (unsigned u = 1; u < s; ++u)
      if (u != v) cand[v].push_back(u);
    cand[v].push_back(t1);
  }
  std::vector<unsigned> var(s, 0);
  std::vector<std::uint32_t> succ[2] = {std::vector<std::uint32_t>(s, 0),
                                        std::vector<std::uint32_t>(s, 0)};
  std::vector<Fn> acc(s + 1, 0);

  auto to_mask = [&](unsigned v, std::uint32_t choice) {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < cand[v].size(); ++j)
      if ((choice >> j) & 1u) m |= 1u << cand[v][j];
    return m;
  };

  auto evaluate = [&]() -> std::optional<Fn> {
    std::vector<std::uint32_t> m0(s), m1(s);
    for (unsigned v = 0; v < s; ++v) {
      m0[v] = to_mask(v, succ[0][v]);
      m1[v] = to_mask(v, succ[1][v]);
    }
    if (parity) {
      // Kahn order; reject cyclic programs.
      std::vector<unsigned> indeg(s + 1, 0);
      for (unsigned v = 0; v < s; ++v)
        for (unsigned u = 0; u <= s; ++u)
          indeg[u] += ((m0[v] >> u) & 1u) + ((m1[v] >> u) & 1u);
      std::vector<unsigned> order;
      for (unsigned v = 0; v <= s; ++v)
        if (indeg[v] == 0) order.push_back(v);
      for (std::size_t h = 0; h < order.size(); ++h) {
        const unsigned v = order[h];
        if (v == t1) continue;
        for (unsigned u = 0; u <= s; ++u) {
          const unsigned c = ((m0[v] >> u) & 1u) + ((m1[v] >> u) & 1u);
          if (c && (indeg[u] -= c) == 0) order.push_back(u);
        }
      }
      if (order.size() != s + 1) return std::nullopt;
      std::fill(acc.begin(), acc.end(), 0);
      acc[t1] = ones;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const unsigned v = *it;
        if (v == t1) continue;
        Fn b0 = 0, b1 = 0;
        for (unsigned u = 0; u <= s; ++u) {
          if ((m0[v] >> u) & 1u) b0 ^= acc[u];
          if ((m1[v] >> u) & 1u) b1 ^= acc[u];
        }
        acc[v] = (b0 & ~proj[var[v]]) | (b1 & proj[var[v]]);
      }
      return acc[0] & ones;
    }
    std::fill(acc.begin(), acc.end(), 0);
    acc[t1] = ones;
    bool changed = true;
    while (changed) {
      changed = false;
      for (unsigned v = 0; v < s; ++v) {
        Fn b0 = 0, b1 = 0;
        for (unsigned u = 0; u <= s; ++u) {
          if ((m0[v] >> u) & 1u) b0 |= acc[u];
          if ((m1[v] >> u) & 1u) b1 |= acc[u];
        }
        const Fn nv = (b0 & ~proj[var[v]]) | (b1 & proj[var[v]]);
        if (nv != acc[v]) {
          acc[v] = nv;
          changed = true;
        }
      }
    }
    return acc[0] & ones;
  };

  // Odometer over (var, succ0, succ1) for every vertex.
  std::function<void(unsigned)> rec = [&](unsigned v) {
    if (v == s) {
      if (auto f = evaluate()) record(best, *f, s);
      return;
    }
    const std::uint32_t choices = 1u << cand[v].size();
    for (unsigned x = 0; x < n; ++x) {
      var[v] = x;
      for (std::uint32_t c0 = 0; c0 < choices; ++c0) {
        succ[0][v] = c0;
        for (std::uint32_t c1 = 0; c1 < choices; ++c1) {
          succ[1][v] = c1;
          rec(v + 1);
        }
      }
    }
  };
  if (n > 0) rec(0);
}

struct VecHash {
  std::size_t operator()(const std::vector<Fn>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Fn x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Deterministic BPs as sets of distinct non-constant vertex functions, each
// ITE(x, a, b) of members added earlier or constants.
void deterministic_sizes(unsigned n, unsigned s_max, std::vector<int>& best) {
  const Fn ones = all_ones(n);
  std::vector<Fn> proj(n);
  for (unsigned i = 0; i < n; ++i) proj[i] = projection(n, i);
  std::unordered_set<std::vector<Fn>, VecHash> level{{}};
  for (unsigned s = 1; s <= s_max && n > 0; ++s) {
    std::unordered_set<std::vector<Fn>, VecHash> next;
    for (const auto& set : level) {
      std::vector<Fn> pool = set;
      pool.push_back(0);
      pool.push_back(ones);
      for (unsigned x = 0; x < n; ++x) {
        for (Fn a : pool) {
          for (Fn b : pool) {
            if (a == b) continue;
            const Fn g = (a & ~proj[x]) | (b & proj[x]);
            if (g == 0 || g == ones || std::find(set.begin(), set.end(), g) != set.end())
              continue;
            record(best, g, s);
            if (s == s_max) continue;
            std::vector<Fn> grown = set;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), g), g);
            next.insert(std::move(grown));
          }
        }
      }
    }
    level = std::move(next);
  }
}

void formula_sizes(unsigned n, unsigned s_max, std::vector<int>& best) {
  const Fn ones = all_ones(n);
  const std::size_t total = std::size_t{1} << (1u << n);
  // by_size[s]: functions with a formula of exactly s literal leaves.
  std::vector<std::vector<Fn>> by_size(s_max + 1);
  std::vector<std::vector<std::uint8_t>> seen(s_max + 1, std::vector<std::uint8_t>(total, 0));
  auto add = [&](unsigned s, Fn f) {
    if (!seen[s][f]) {
      seen[s][f] = 1;
      by_size[s].push_back(f);
    }
  };
  add(0, 0);
  add(0, ones);
  if (s_max >= 1)
    for (unsigned i = 0; i < n; ++i) {
      add(1, projection(n, i));
      add(1, ones & ~projection(n, i));
    }
  for (unsigned s = 2; s <= s_max; ++s)
    for (unsigned i = 1; i < s; ++i)
      for (Fn a : by_size[i])
        for (Fn b : by_size[s - i])
          for (unsigned g = 0; g < 16; ++g) {
            Fn out = 0;
            if (g & 8u) out |= ~a & ~b;
            if (g & 4u) out |= ~a & b;
            if (g & 2u) out |= a & ~b;
            if (g & 1u) out |= a & b;
            add(s, out & ones);
          }
  for (unsigned s = 0; s <= s_max; ++s)
    for (Fn f : by_size[s]) record(best, f, s);
}

}  // namespace

std::string model_name(Model m) {
  switch (m) {
    case Model::NBP: return "nbp";
    case Model::ParityBP: return "pbp";
    case Model::DetBP: return "bp";
    case Model::BF: return "bf";
  }
  return "?";
}

Model parse_model(const std::string& text) {
  for (Model m : {Model::NBP, Model::ParityBP, Model::DetBP, Model::BF})
    if (model_name(m) == text) return m;
  throw std::invalid_argument("unknown oracle model '" + text + "'");
}

Budget default_budget(Model m) {
  switch (m) {
    case Model::NBP:
    case Model::ParityBP: return {2, 3};
    case Model::DetBP:
    case Model::BF: return {3, 4};
  }
  return {0, 0};
}

std::vector<int> min_size_table(unsigned n, Model model, unsigned s_max, bool allow_huge) {
  check_budget(n, s_max, model, allow_huge);
  std::vector<int> best(std::size_t{1} << (1u << n), -1);
  best[0] = 0;
  best[all_ones(n)] = 0;
  switch (model) {
    case Model::NBP:
    case Model::ParityBP:
      for (unsigned s = 1; s <= s_max; ++s)
        nondeterministic_sizes(n, s, model == Model::ParityBP, best);
      break;
    case Model::DetBP: deterministic_sizes(n, s_max, best); break;
    case Model::BF: formula_sizes(n, s_max, best); break;
  }
  return best;
}

std::uint64_t enumerate_semantic(unsigned n, unsigned s, Model model, bool allow_huge) {
  const auto best = min_size_table(n, model, s, allow_huge);
  return static_cast<std::uint64_t>(
      std::count_if(best.begin(), best.end(), [](int v) { return v >= 0; }));
}

std::uint64_t function_id(const TruthTable& f) {
  if (f.arity() > kMaxOracleArity)
    throw BudgetExceeded("oracle supports n <= " + std::to_string(kMaxOracleArity));
  return f.words()[0];
}

std::optional<unsigned> min_size(const TruthTable& f, Model model, unsigned s_max,
                                 bool allow_huge) {
  const auto best = min_size_table(f.arity(), model, s_max, allow_huge);
  const int v = best[function_id(f)];
  if (v < 0) return std::nullopt;
  return static_cast<unsigned>(v);
}

}  // namespace necip::oracle
