#pragma once

#include <cstdint>
#include <string>

#include "necip/families.hpp"
#include "necip/formula.hpp"
#include "necip/program.hpp"

namespace necip {

// Exhaustive when inputs plus guesses number at most this many variables.
inline constexpr unsigned kExhaustiveVariables = 22;
inline constexpr std::uint64_t kDefaultSamples = 100000;

struct Verdict {
  bool equivalent = false;
  bool exhaustive = false;
  std::uint64_t checked = 0;  // inputs compared
  std::string counterexample;  // input bits of the first mismatch, if any

  std::string mode() const { return exhaustive ? "exhaustive" : "sampled"; }
};

Verdict verify(const BranchingProgram& p, const Semantics& sem, const FunctionSpec& f,
               std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 1);
Verdict verify(const Formula& phi, const FunctionSpec& f,
               std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 1);

}  // namespace necip
