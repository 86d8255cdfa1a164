#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "necip/truth_table.hpp"

namespace necip {

using VertexId = std::uint32_t;

enum class SemanticsKind { Existential, Parity, Deterministic, Limited };

// Acceptance condition applied to a branching program. Limited(delta) reads
// the program as deterministic over inputs plus delta guess variables and
// accepts when some guess leads to t1.
struct Semantics {
  SemanticsKind kind = SemanticsKind::Existential;
  unsigned delta = 0;

  static Semantics existential() { return {SemanticsKind::Existential, 0}; }
  static Semantics parity() { return {SemanticsKind::Parity, 0}; }
  static Semantics deterministic() { return {SemanticsKind::Deterministic, 0}; }
  static Semantics limited(unsigned delta) { return {SemanticsKind::Limited, delta}; }

  std::string name() const;
  static Semantics parse(const std::string& text);
  bool operator==(const Semantics&) const = default;
};

// (X, s, t0, t1, A0, A1, var) over inputs x_1..x_n and, optionally, guess
// variables x_{n+1}..x_{n+delta}. Vertices are 0..vertex_count-1. Arc sets
// are stored sorted and duplicate-free. Construction checks only what is
// needed for the object to be well-formed (ids in range, labels present);
// the definitional constraints are reported by validate().
class BranchingProgram {
 public:
  struct Arc {
    VertexId from;
    VertexId to;
    auto operator<=>(const Arc&) const = default;
  };
  static constexpr int kNoVar = -1;

  BranchingProgram(unsigned inputs, unsigned guesses, std::size_t vertex_count,
                   VertexId start, VertexId sink0, VertexId sink1, std::vector<Arc> a0,
                   std::vector<Arc> a1, std::vector<int> var);

  // Size-0 program computing a constant.
  static BranchingProgram constant(unsigned inputs, bool value);

  unsigned inputs() const { return inputs_; }
  unsigned guesses() const { return guesses_; }
  unsigned variable_count() const { return inputs_ + guesses_; }
  std::size_t vertex_count() const { return var_.size(); }
  VertexId start() const { return start_; }
  VertexId sink0() const { return sink0_; }
  VertexId sink1() const { return sink1_; }
  bool is_sink(VertexId v) const { return v == sink0_ || v == sink1_; }
  const std::vector<Arc>& arcs(bool label) const { return label ? a1_ : a0_; }
  int var(VertexId v) const { return var_[v]; }

  std::span<const VertexId> successors(VertexId v, bool label) const;

  // Number of non-sink vertices.
  std::size_t size() const { return var_.size() - 2; }

  bool acyclic() const { return topo_.has_value(); }
  // Topological order of all vertices (sources first); empty if cyclic.
  std::span<const VertexId> topological_order() const;

 private:
  unsigned inputs_;
  unsigned guesses_;
  VertexId start_, sink0_, sink1_;
  std::vector<Arc> a0_, a1_;
  std::vector<int> var_;
  // CSR adjacency per label.
  std::vector<std::uint32_t> offset_[2];
  std::vector<VertexId> target_[2];
  std::optional<std::vector<VertexId>> topo_;
};

// Structural diagnostics; empty means valid for the given semantics.
std::vector<std::string> validate(const BranchingProgram& p, const Semantics& sem);

// Pointwise semantics. `a` assigns every program variable (inputs and
// guesses) except for eval_limited, which takes the inputs only.
bool eval_existential(const BranchingProgram& p, std::span<const std::uint8_t> a);
bool eval_parity(const BranchingProgram& p, std::span<const std::uint8_t> a);
bool eval_deterministic(const BranchingProgram& p, std::span<const std::uint8_t> a);
bool eval_limited(const BranchingProgram& p, std::span<const std::uint8_t> a,
                  unsigned delta);
bool eval(const BranchingProgram& p, const Semantics& sem, std::span<const std::uint8_t> a);

// Number of s -> t1 paths in P[a], saturated at `cap`. Requires acyclicity.
std::uint64_t count_accepting_paths(const BranchingProgram& p,
                                    std::span<const std::uint8_t> a,
                                    std::uint64_t cap = 2);

// Tabulates the semantics over all inputs (Limited: inputs only, guesses
// OR-ed out). Word-parallel over the input space.
TruthTable to_truth_table(const BranchingProgram& p, const Semantics& sem);

// Incremental construction with fresh vertex ids; sinks are created first.
class ProgramBuilder {
 public:
  ProgramBuilder(unsigned inputs, unsigned guesses);

  VertexId reject() const { return 0; }
  VertexId accept() const { return 1; }
  VertexId add_vertex(unsigned var);
  void add_arc(VertexId from, bool label, VertexId to);
  std::size_t size() const { return var_.size() - 2; }

  BranchingProgram finish(VertexId start) &&;

 private:
  unsigned inputs_;
  unsigned guesses_;
  std::vector<int> var_;
  std::vector<BranchingProgram::Arc> a0_, a1_;
};

}  // namespace necip
