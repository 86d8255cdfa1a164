#include <functional>
#include <random>

#include "doctest.h"
#include "necip/builders.hpp"
#include "necip/formula.hpp"
#include "oracles.hpp"

using namespace necip;

namespace {

// Random formula plus an independent evaluator for it.
struct Sample {
  Formula formula;
  std::function<bool(const ref::Bits&)> eval;
};

Sample random_formula(std::mt19937_64& rng, unsigned vars, unsigned guesses, int depth) {
  FormulaBuilder b(vars - guesses, guesses);
  std::function<std::pair<FormulaBuilder::Ref, std::function<bool(const ref::Bits&)>>(int)> rec =
      [&](int d) -> std::pair<FormulaBuilder::Ref, std::function<bool(const ref::Bits&)>> {
    if (d == 0 || rng() % 4 == 0) {
      if (rng() % 8 == 0) {
        const bool c = rng() & 1u;
        return {b.constant(c), [c](const ref::Bits&) { return c; }};
      }
      const unsigned v = rng() % vars;
      const bool pos = rng() & 1u;
      return {b.literal(v, pos), [v, pos](const ref::Bits& a) { return bool(a[v]) == pos; }};
    }
    const unsigned g = rng() % 16;
    auto [l, fl] = rec(d - 1);
    auto [r, fr] = rec(d - 1);
    return {b.gate(g, l, r), [g, fl, fr](const ref::Bits& a) { return ref::gate(g, fl(a), fr(a)); }};
  };
  auto [root, f] = rec(depth);
  return {std::move(b).finish(root), f};
}

}  // namespace

TEST_CASE("gate encoding") {
  CHECK(apply_gate(gates::kAnd, true, true));
  CHECK_FALSE(apply_gate(gates::kAnd, true, false));
  CHECK(apply_gate(gates::kXor, true, false));
  CHECK(apply_gate(gates::kNotAAndB, false, true));
  CHECK_FALSE(apply_gate(gates::kNotAAndB, true, true));
  for (unsigned g = 0; g < 16; ++g)
    for (bool a : {false, true})
      for (bool b : {false, true}) {
        CHECK(apply_gate(g, a, b) == ref::gate(g, a, b));
        CHECK(apply_gate(dual_gate(g), !a, !b) == !apply_gate(g, a, b));
      }
}

TEST_CASE("eval_formula and size") {
  FormulaBuilder b(2, 0);
  const auto phi = std::move(b).finish(b.and_(b.literal(0), b.literal(1)));
  CHECK(eval_formula(phi, std::vector<std::uint8_t>{1, 1}));
  CHECK_FALSE(eval_formula(phi, std::vector<std::uint8_t>{0, 1}));
  CHECK(phi.size() == 2);
  const auto c = Formula::constant(3, true);
  CHECK(c.size() == 0);
  CHECK(eval_formula(c, std::vector<std::uint8_t>{0, 0, 0}));
  CHECK_THROWS(eval_formula(phi, std::vector<std::uint8_t>{1}));
}

TEST_CASE("random formulas evaluate like their trees") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned vars = 1 + rng() % 5;
    const auto s = random_formula(rng, vars, 0, 1 + rng() % 5);
    const auto t = to_truth_table(s.formula);
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      const auto a = ref::bits_of(i, vars);
      CHECK(eval_formula(s.formula, a) == s.eval(a));
      CHECK(t.bit(i) == s.eval(a));
      CHECK(eval_lnbf(s.formula, a, 0) == s.eval(a));
    }
  }
}

TEST_CASE("lnbf ORs over trailing guesses") {
  FormulaBuilder b(1, 1);
  const auto guess = std::move(b).finish(b.literal(1));
  CHECK(to_truth_table(guess) == TruthTable::constant(1, true));

  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned guesses = 1 + rng() % 2, vars = guesses + 1 + rng() % 3;
    const auto s = random_formula(rng, vars, guesses, 4);
    const unsigned n = vars - guesses;
    const auto t = to_truth_table(s.formula);
    REQUIRE(t.arity() == n);
    for (std::uint64_t i = 0; i < t.size(); ++i) {
      bool any = false;
      for (std::uint64_t g = 0; g < (1u << guesses); ++g) any |= s.eval(ref::bits_of((i << guesses) | g, vars));
      CHECK(t.bit(i) == any);
      CHECK(eval_lnbf(s.formula, ref::bits_of(i, n), guesses) == any);
    }
  }
}

TEST_CASE("de Morgan dual computes the complement") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned vars = 1 + rng() % 5;
    const auto s = random_formula(rng, vars, 0, 1 + rng() % 5);
    const auto d = de_morgan_dual(s.formula);
    CHECK(d.size() == s.formula.size());
    CHECK(to_truth_table(d) == ~to_truth_table(s.formula));
  }
}

TEST_CASE("formula sizes of the isa constructions") {
  FormulaBuilder b(6, 0);
  const unsigned v[] = {0, 1, 2}, y[] = {3, 4, 5};
  const auto eq = std::move(b).finish(build::equality_formula(b, v, y));
  CHECK(eq.size() == 12);
  CHECK(build::isa_bf(1, 1).size() < 28);
}
