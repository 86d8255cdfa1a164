#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "necip/truth_table.hpp"

namespace necip {

// 2-ary gate g in 0..15, indexed by its truth vector over (a,b) = 00,01,10,11
// read big-endian: AND = 1, XOR = 6, OR = 7.
inline bool apply_gate(unsigned g, bool a, bool b) {
  return ((g >> (3 - (2 * unsigned(a) + unsigned(b)))) & 1u) != 0;
}

namespace gates {
inline constexpr unsigned kAnd = 0b0001;
inline constexpr unsigned kXor = 0b0110;
inline constexpr unsigned kOr = 0b0111;
inline constexpr unsigned kNotAAndB = 0b0100;
inline constexpr unsigned kXnor = 0b1001;
}  // namespace gates

// Gate computing not g(not a, not b).
unsigned dual_gate(unsigned g);

// Binary formula over all sixteen 2-ary gates. Leaves are literals over
// x_1..x_{n+delta} or constants; the last delta variables are guesses.
// Nodes live in an arena with children stored before their parent.
class Formula {
 public:
  enum class Kind : std::uint8_t { Gate, Literal, Const };
  struct Node {
    Kind kind = Kind::Const;
    std::uint8_t gate = 0;   // Gate
    bool value = false;      // Const; Literal: true for a positive literal
    std::uint32_t var = 0;   // Literal, 0-based
    std::uint32_t left = 0;  // Gate
    std::uint32_t right = 0;
  };

  Formula(unsigned inputs, unsigned guesses, std::vector<Node> nodes, std::uint32_t root);

  static Formula constant(unsigned inputs, bool value);

  unsigned inputs() const { return inputs_; }
  unsigned guesses() const { return guesses_; }
  unsigned variable_count() const { return inputs_ + guesses_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::uint32_t root() const { return root_; }

  // Number of literal leaves.
  std::size_t size() const;

 private:
  unsigned inputs_;
  unsigned guesses_;
  std::vector<Node> nodes_;
  std::uint32_t root_;
};

class FormulaBuilder {
 public:
  using Ref = std::uint32_t;

  FormulaBuilder(unsigned inputs, unsigned guesses) : inputs_(inputs), guesses_(guesses) {}

  Ref literal(unsigned var, bool positive = true);
  Ref constant(bool value);
  Ref gate(unsigned g, Ref left, Ref right);
  Ref and_(Ref a, Ref b) { return gate(gates::kAnd, a, b); }
  Ref or_(Ref a, Ref b) { return gate(gates::kOr, a, b); }

  Formula finish(Ref root) &&;

 private:
  unsigned inputs_;
  unsigned guesses_;
  std::vector<Formula::Node> nodes_;
};

std::size_t formula_size(const Formula& f);

// `a` assigns all n + delta variables.
bool eval_formula(const Formula& f, std::span<const std::uint8_t> a);
// `a` assigns the n inputs; OR over all 2^delta guess suffixes.
bool eval_lnbf(const Formula& f, std::span<const std::uint8_t> a, unsigned delta);

// Table over the inputs with guesses OR-ed out.
TruthTable to_truth_table(const Formula& f);
// Table over inputs and guesses.
TruthTable to_full_truth_table(const Formula& f);

// Gate-wise dual with negated leaves; computes the complement of f's
// guess-free semantics.
Formula de_morgan_dual(const Formula& f);

}  // namespace necip
