#include "necip/verify.hpp"

#include <random>
#include <stdexcept>

namespace necip {

namespace {

std::string bits_of(std::span<const std::uint8_t> a) {
  std::string s;
  for (auto x : a) s.push_back(x ? '1' : '0');
  return s;
}

Verdict compare_tables(const TruthTable& got, const TruthTable& want) {
  Verdict v;
  v.exhaustive = true;
  v.checked = want.size();
  v.equivalent = got == want;
  if (!v.equivalent) {
    for (std::uint64_t i = 0; i < want.size(); ++i) {
      if (got.bit(i) != want.bit(i)) {
        v.counterexample = bits_of(assignment_of(i, want.arity()));
        break;
      }
    }
  }
  return v;
}

template <typename Eval>
Verdict sample(const FunctionSpec& f, std::uint64_t samples, std::uint64_t seed, Eval eval) {
  Verdict v;
  std::mt19937_64 rng(seed);
  Assignment a(f.arity());
  v.equivalent = true;
  for (std::uint64_t t = 0; t < samples; ++t) {
    for (auto& x : a) x = rng() & 1u;
    ++v.checked;
    if (eval(a) != f.eval(a)) {
      v.equivalent = false;
      v.counterexample = bits_of(a);
      break;
    }
  }
  return v;
}

void check_arity(unsigned inputs, const FunctionSpec& f) {
  if (inputs != f.arity())
    throw std::invalid_argument("object reads " + std::to_string(inputs) +
                                " inputs, function has arity " + std::to_string(f.arity()));
}

}  // namespace

Verdict verify(const BranchingProgram& p, const Semantics& sem, const FunctionSpec& f,
               std::uint64_t samples, std::uint64_t seed) {
  check_arity(p.inputs(), f);
  if (p.variable_count() <= kExhaustiveVariables)
    return compare_tables(to_truth_table(p, sem), f.to_table());
  const unsigned n = p.inputs();
  return sample(f, samples, seed, [&](const Assignment& a) {
    if (sem.kind == SemanticsKind::Limited) return eval_limited(p, a, sem.delta);
    Assignment full = a;
    full.resize(n + p.guesses(), 0);
    return eval(p, sem, full);
  });
}

Verdict verify(const Formula& phi, const FunctionSpec& f, std::uint64_t samples,
               std::uint64_t seed) {
  check_arity(phi.inputs(), f);
  if (phi.variable_count() <= kExhaustiveVariables)
    return compare_tables(to_truth_table(phi), f.to_table());
  return sample(f, samples, seed,
                [&](const Assignment& a) { return eval_lnbf(phi, a, phi.guesses()); });
}

}  // namespace necip
