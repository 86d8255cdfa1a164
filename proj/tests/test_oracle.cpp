#include <cmath>
#include <set>

#include "doctest.h"
#include "necip/boolfn.hpp"
#include "necip/errors.hpp"
#include "necip/oracle.hpp"
#include "oracles.hpp"

using namespace necip;
using oracle::Model;

namespace {

std::uint64_t id_of(const std::vector<bool>& t) {
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < t.size(); ++i) id |= std::uint64_t{t[i]} << i;
  return id;
}

// Every deterministic program with s query vertices on n variables.
std::set<std::uint64_t> det_functions(unsigned n, unsigned s) {
  std::set<std::uint64_t> out{0, (std::uint64_t{1} << (1u << n)) - 1};
  if (s == 0) return out;
  // Vertices: 0 = t0, 1 = t1, 2 = start, 3.. = others. Successors avoid the start.
  const unsigned succ = s + 1, per = n * succ * succ;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < s; ++i) total *= per;
  for (std::uint64_t code = 0; code < total; ++code) {
    ref::Graph g;
    g.vertices = s + 2;
    g.start = 2;
    g.var.assign(s + 2, -1);
    std::uint64_t c = code;
    for (unsigned v = 2; v < s + 2; ++v) {
      auto pick = [&](unsigned m) {
        const unsigned x = c % m;
        c /= m;
        return x;
      };
      g.var[v] = pick(n);
      auto target = [&](unsigned x) { return x < 2 ? x : x + 1; };
      g.a0.emplace_back(v, target(pick(succ)));
      g.a1.emplace_back(v, target(pick(succ)));
    }
    std::vector<bool> t(std::size_t{1} << n);
    bool ok = true;
    for (std::uint64_t i = 0; i < t.size() && ok; ++i) {
      const long p = ref::paths(g, ref::bits_of(i, n));
      ok = p >= 0;
      t[i] = p == 1;
    }
    if (ok) out.insert(id_of(t));
  }
  return out;
}

// Every nondeterministic program with s vertices on n variables; arcs into
// the start vertex are excluded.
std::set<std::uint64_t> nondet_functions(unsigned n, unsigned s, bool parity) {
  std::set<std::uint64_t> out{0, (std::uint64_t{1} << (1u << n)) - 1};
  if (s == 0) return out;
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned u = 2; u < s + 2; ++u)
    for (unsigned w = 0; w < s + 2; ++w)
      if (w != 2) slots.emplace_back(u, w);
  const std::uint64_t arc_sets = std::uint64_t{1} << (2 * slots.size());
  for (std::uint64_t vars = 0; vars < std::uint64_t(std::pow(n, s)); ++vars) {
    ref::Graph g;
    g.vertices = s + 2;
    g.start = 2;
    g.var.assign(s + 2, -1);
    std::uint64_t c = vars;
    for (unsigned v = 2; v < s + 2; ++v) g.var[v] = c % n, c /= n;
    for (std::uint64_t mask = 0; mask < arc_sets; ++mask) {
      g.a0.clear();
      g.a1.clear();
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((mask >> i) & 1u) g.a0.push_back(slots[i]);
        if ((mask >> (i + slots.size())) & 1u) g.a1.push_back(slots[i]);
      }
      std::vector<bool> t(std::size_t{1} << n);
      bool ok = true;
      for (std::uint64_t i = 0; i < t.size() && ok; ++i) {
        const auto a = ref::bits_of(i, n);
        if (parity) {
          const long p = ref::paths(g, a);
          ok = p >= 0;
          t[i] = p % 2 == 1;
        } else {
          t[i] = ref::reaches(g, a);
        }
      }
      if (ok) out.insert(id_of(t));
    }
  }
  return out;
}

// Functions of formulas with at most s literal leaves, by size classes.
std::vector<std::set<std::uint64_t>> formula_functions(unsigned n, unsigned s_max) {
  const std::uint64_t all = (std::uint64_t{1} << (1u << n)) - 1;
  std::vector<std::set<std::uint64_t>> exact(s_max + 1);
  exact[0] = {0, all};
  if (s_max >= 1)
    for (unsigned v = 0; v < n; ++v) {
      std::vector<bool> t(std::size_t{1} << n);
      for (std::uint64_t i = 0; i < t.size(); ++i) t[i] = ref::bits_of(i, n)[v];
      exact[1].insert(id_of(t));
      exact[1].insert(all & ~id_of(t));
    }
  auto combine = [&](unsigned g, std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < (1u << n); ++i)
      r |= std::uint64_t{ref::gate(g, (a >> i) & 1u, (b >> i) & 1u)} << i;
    return r;
  };
  for (unsigned s = 1; s <= s_max; ++s)
    for (unsigned i = 0; i <= s; ++i)
      for (auto a : exact[i])
        for (auto b : exact[s - i])
          for (unsigned g = 0; g < 16; ++g) exact[s].insert(combine(g, a, b));
  std::vector<std::set<std::uint64_t>> upto(s_max + 1);
  for (unsigned s = 0; s <= s_max; ++s) {
    if (s) upto[s] = upto[s - 1];
    upto[s].insert(exact[s].begin(), exact[s].end());
  }
  return upto;
}

}  // namespace

TEST_CASE("semantic counts match independent enumeration") {
  for (unsigned s = 0; s <= 3; ++s) {
    CHECK(oracle::enumerate_semantic(2, s, Model::DetBP) == det_functions(2, s).size());
    CHECK(oracle::enumerate_semantic(3, s, Model::DetBP) == det_functions(3, s).size());
  }
  for (unsigned s = 0; s <= 2; ++s) {
    CHECK(oracle::enumerate_semantic(2, s, Model::NBP) == nondet_functions(2, s, false).size());
    CHECK(oracle::enumerate_semantic(2, s, Model::ParityBP) == nondet_functions(2, s, true).size());
    CHECK(oracle::enumerate_semantic(1, s, Model::NBP) == nondet_functions(1, s, false).size());
  }
  const auto bf = formula_functions(3, 4);
  for (unsigned s = 0; s <= 4; ++s) CHECK(oracle::enumerate_semantic(3, s, Model::BF) == bf[s].size());
}

TEST_CASE("small semantic counts") {
  CHECK(oracle::enumerate_semantic(1, 1, Model::NBP) == 4);
  CHECK(oracle::enumerate_semantic(1, 1, Model::BF) == 4);
  for (auto m : {Model::NBP, Model::ParityBP, Model::DetBP, Model::BF})
    for (unsigned n = 1; n <= 2; ++n) CHECK(oracle::enumerate_semantic(n, 0, m) == 2);
}

TEST_CASE("semantic counts are monotone and within the syntactic bound") {
  for (auto m : {Model::NBP, Model::ParityBP, Model::DetBP, Model::BF}) {
    const auto budget = oracle::default_budget(m);
    for (unsigned n = 1; n <= budget.max_n; ++n) {
      std::uint64_t prev = 0;
      for (unsigned s = 0; s <= budget.max_s; ++s) {
        const auto c = oracle::enumerate_semantic(n, s, m);
        CHECK(c >= prev);
        prev = c;
        CHECK(c <= (std::uint64_t{1} << (1u << n)));
        if (n > 1) CHECK(c >= oracle::enumerate_semantic(n - 1, s, m));
        const double syntactic = std::pow(2.0, 2.0 * s * s) * s * std::exp(double(s));
        if (s > 0) CHECK(double(c) <= syntactic);
        if (m == Model::NBP || m == Model::ParityBP) {
          CHECK(double(c) < std::pow(2.0, 2.0 * (s + 1) * (s + 1)));
          if (s >= 3 && n >= 2 * std::floor(std::log2(s / 3.0)))
            CHECK(double(c) > std::pow(2.0, s * s / 36.0));
        }
      }
    }
  }
}

TEST_CASE("min_size") {
  for (auto m : {Model::NBP, Model::ParityBP, Model::DetBP, Model::BF})
    CHECK(oracle::min_size(TruthTable::constant(2, true), m, 3) == 0u);
  CHECK(oracle::min_size(TruthTable::projection(1, 0), Model::DetBP, 3) == 1u);
  const auto x = TruthTable::from_function(2, [](std::uint64_t i) { return i == 1 || i == 2; });
  const auto xor_bf = oracle::min_size(x, Model::BF, 4);
  REQUIRE(xor_bf);
  CHECK(*xor_bf >= 2);
  CHECK(*xor_bf == 2);
  CHECK(oracle::function_id(x) == 6);
}

TEST_CASE("min_size is at least the number of relevant variables") {
  for (auto m : {Model::DetBP, Model::BF}) {
    const auto sizes = oracle::min_size_table(3, m, 4);
    for (std::uint64_t id = 0; id < sizes.size(); ++id) {
      if (sizes[id] < 0) continue;
      const auto t = TruthTable::from_function(3, [&](std::uint64_t i) { return (id >> i) & 1u; });
      CHECK(sizes[id] >= int(support(t).size()));
    }
  }
}

TEST_CASE("oracle budgets") {
  CHECK_THROWS_AS(oracle::enumerate_semantic(3, 2, Model::NBP), BudgetExceeded);
  CHECK_THROWS_AS(oracle::enumerate_semantic(2, 5, Model::DetBP), BudgetExceeded);
  CHECK_THROWS_AS(oracle::enumerate_semantic(5, 1, Model::BF, true), BudgetExceeded);
  CHECK(oracle::parse_model(oracle::model_name(Model::ParityBP)) == Model::ParityBP);
}
