#include "necip/formula.hpp"

#include <optional>
#include <stdexcept>

#include "necip/boolfn.hpp"

namespace necip {

unsigned dual_gate(unsigned g) {
  unsigned out = 0;
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 2; ++b)
      if (!apply_gate(g, !a, !b)) out |= 1u << (3 - (2 * a + b));
  return out;
}

Formula::Formula(unsigned inputs, unsigned guesses, std::vector<Node> nodes, std::uint32_t root)
    : inputs_(inputs), guesses_(guesses), nodes_(std::move(nodes)), root_(root) {
  if (nodes_.empty() || root_ >= nodes_.size()) throw std::invalid_argument("formula has no root");
  std::vector<std::uint8_t> parents(nodes_.size(), 0);
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Kind::Gate:
        if (n.gate > 15) throw std::invalid_argument("gate index out of range");
        if (n.left >= i || n.right >= i)
          throw std::invalid_argument("gate children must precede the gate");
        if (n.left == n.right) throw std::invalid_argument("a formula is a tree");
        if (++parents[n.left] > 1 || ++parents[n.right] > 1)
          throw std::invalid_argument("a formula is a tree");
        break;
      case Kind::Literal:
        if (n.var >= variable_count())
          throw std::invalid_argument("literal x" + std::to_string(n.var + 1) +
                                      " exceeds the " + std::to_string(variable_count()) +
                                      " declared variables");
        break;
      case Kind::Const:
        break;
    }
  }
}

Formula Formula::constant(unsigned inputs, bool value) {
  Node n;
  n.kind = Kind::Const;
  n.value = value;
  return Formula(inputs, 0, {n}, 0);
}

std::size_t Formula::size() const {
  std::size_t s = 0;
  // Only nodes reachable from the root count.
  std::vector<std::uint32_t> stack{root_};
  while (!stack.empty()) {
    const Node& n = nodes_[stack.back()];
    stack.pop_back();
    if (n.kind == Kind::Literal) ++s;
    if (n.kind == Kind::Gate) {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
  return s;
}

FormulaBuilder::Ref FormulaBuilder::literal(unsigned var, bool positive) {
  if (var >= inputs_ + guesses_) throw std::invalid_argument("literal variable out of range");
  Formula::Node n;
  n.kind = Formula::Kind::Literal;
  n.var = var;
  n.value = positive;
  nodes_.push_back(n);
  return static_cast<Ref>(nodes_.size() - 1);
}

FormulaBuilder::Ref FormulaBuilder::constant(bool value) {
  Formula::Node n;
  n.kind = Formula::Kind::Const;
  n.value = value;
  nodes_.push_back(n);
  return static_cast<Ref>(nodes_.size() - 1);
}

FormulaBuilder::Ref FormulaBuilder::gate(unsigned g, Ref left, Ref right) {
  Formula::Node n;
  n.kind = Formula::Kind::Gate;
  n.gate = static_cast<std::uint8_t>(g);
  n.left = left;
  n.right = right;
  nodes_.push_back(n);
  return static_cast<Ref>(nodes_.size() - 1);
}

Formula FormulaBuilder::finish(Ref root) && {
  return Formula(inputs_, guesses_, std::move(nodes_), root);
}

std::size_t formula_size(const Formula& f) { return f.size(); }

bool eval_formula(const Formula& f, std::span<const std::uint8_t> a) {
  if (a.size() != f.variable_count())
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) +
                                " bits, formula reads " + std::to_string(f.variable_count()));
  const auto& nodes = f.nodes();
  std::vector<std::uint8_t> val(f.root() + 1, 0);
  for (std::uint32_t i = 0; i <= f.root(); ++i) {
    const auto& n = nodes[i];
    switch (n.kind) {
      case Formula::Kind::Const: val[i] = n.value; break;
      case Formula::Kind::Literal: val[i] = (a[n.var] != 0) == n.value; break;
      case Formula::Kind::Gate: val[i] = apply_gate(n.gate, val[n.left], val[n.right]); break;
    }
  }
  return val[f.root()] != 0;
}

bool eval_lnbf(const Formula& f, std::span<const std::uint8_t> a, unsigned delta) {
  if (delta != f.guesses())
    throw std::invalid_argument("delta " + std::to_string(delta) + " does not match the " +
                                std::to_string(f.guesses()) + " declared guess variables");
  if (a.size() != f.inputs())
    throw std::invalid_argument("limited evaluation takes the " + std::to_string(f.inputs()) +
                                " input bits only");
  Assignment full(a.begin(), a.end());
  full.resize(f.variable_count(), 0);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << delta); ++b) {
    for (unsigned i = 0; i < delta; ++i) full[f.inputs() + i] = (b >> (delta - 1 - i)) & 1u;
    if (eval_formula(f, full)) return true;
  }
  return false;
}

TruthTable to_full_truth_table(const Formula& f) {
  const unsigned vars = f.variable_count();
  if (vars > TruthTable::kMaxArity)
    throw std::invalid_argument("formula reads " + std::to_string(vars) +
                                " variables, beyond the truth-table cap");
  const auto& k = kernels::active();
  const auto& nodes = f.nodes();
  std::vector<std::optional<TruthTable>> val(f.root() + 1);
  for (std::uint32_t i = 0; i <= f.root(); ++i) {
    const auto& n = nodes[i];
    switch (n.kind) {
      case Formula::Kind::Const: val[i] = TruthTable::constant(vars, n.value); break;
      case Formula::Kind::Literal: {
        TruthTable t = TruthTable::projection(vars, n.var);
        val[i] = n.value ? std::move(t) : ~t;
        break;
      }
      case Formula::Kind::Gate: {
        TruthTable t(vars);
        k.gate_words(t.words(), n.gate, val[n.left]->words(), val[n.right]->words());
        t.clear_padding();
        val[n.left].reset();
        val[n.right].reset();
        val[i] = std::move(t);
        break;
      }
    }
  }
  return std::move(*val[f.root()]);
}

TruthTable to_truth_table(const Formula& f) {
  return or_project_suffix(to_full_truth_table(f), f.guesses());
}

Formula de_morgan_dual(const Formula& f) {
  std::vector<Formula::Node> nodes = f.nodes();
  for (auto& n : nodes) {
    switch (n.kind) {
      case Formula::Kind::Gate: n.gate = static_cast<std::uint8_t>(dual_gate(n.gate)); break;
      case Formula::Kind::Literal:
      case Formula::Kind::Const: n.value = !n.value; break;
    }
  }
  return Formula(f.inputs(), f.guesses(), std::move(nodes), f.root());
}

}  // namespace necip
