#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "necip/formula.hpp"
#include "necip/program.hpp"
#include "necip/truth_table.hpp"

namespace necip::build {

// Program gadgets. Each one adds fresh vertices to `b` and wires its exits to
// the given target vertices; the return value is the entry vertex (or the
// entry vertices, for the ascertainer).

// Full binary tree over `vars` (vars[0] at the root). Outcome w goes to
// targets[bin(w)]; 2^k - 1 vertices. With no variables returns targets[0].
VertexId decision_tree(ProgramBuilder& b, std::span<const unsigned> vars,
                       std::span<const VertexId> targets);

// Accepts iff v_i = y_i for every i; 3k vertices.
VertexId equality_checker(ProgramBuilder& b, std::span<const unsigned> v,
                          std::span<const unsigned> y, VertexId accept, VertexId reject);

// Inverted binary tree with entries s_w for w in {0,1}^k: the computation
// started at s_w reaches `accept` iff vars = w. 2^{k+1} - 2 vertices.
std::vector<VertexId> ascertainer(ProgramBuilder& b, std::span<const unsigned> vars,
                                  VertexId accept, VertexId reject);

// Formula gadgets.
using Ref = FormulaBuilder::Ref;
using RefMaker = std::function<Ref(FormulaBuilder&)>;

// AND over i of (v_i & y_i) | (~v_i & ~y_i); 4k literal leaves.
Ref equality_formula(FormulaBuilder& b, std::span<const unsigned> v,
                     std::span<const unsigned> y);

// Selects leaves[bin(selectors)] with selectors[0] most significant.
// Selector i is instantiated 2^{i+1} times; each leaf is used once.
Ref mux_formula(FormulaBuilder& b, std::span<const RefMaker> selectors,
                std::span<const Ref> leaves);
RefMaker literal_maker(unsigned var);

// Whole constructions.
BranchingProgram shannon_nbp(const TruthTable& f);
BranchingProgram isa_nbp(unsigned k, unsigned l);
// Deterministic over inputs plus delta guess variables.
BranchingProgram isa_lnbp(unsigned k, unsigned l, unsigned delta);
BranchingProgram isa_bp(unsigned k, unsigned l);
Formula isa_lnbf(unsigned k, unsigned l, unsigned delta);
Formula isa_bf(unsigned k, unsigned l);

// Size bounds, compared exactly.
enum class Model { NBP, ParityBP, LNBP, BP, LNBF, BF };

std::string model_name(Model m);
Model parse_model(const std::string& text);

struct BoundCheck {
  bool within = false;
  double claimed = 0;      // numeric value of the bound
  std::string expression;  // the bound as a formula in k, l, delta
};

// ISA_{k,l} construction bound for the model.
BoundCheck isa_bound(Model model, unsigned k, unsigned l, unsigned delta, std::uint64_t size);
// 3 * 2^{ceil(n/2)}.
BoundCheck shannon_bound(unsigned n, std::uint64_t size);

}  // namespace necip::build
