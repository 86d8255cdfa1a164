#include <random>

#include "doctest.h"
#include "necip/builders.hpp"
#include "necip/families.hpp"
#include "necip/verify.hpp"
#include "oracles.hpp"

using namespace necip;

namespace {

TruthTable isa_table(unsigned k, unsigned l) {
  const unsigned n = ref::isa_arity(k, l);
  return TruthTable::from_function(n, [&](std::uint64_t i) { return ref::isa(k, l, ref::bits_of(i, n)); });
}

// Every accepted input has exactly one accepting path, checked by recursion.
bool unique_paths(const BranchingProgram& p, const TruthTable& f) {
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const auto a = ref::bits_of(i, f.arity());
    if (count_accepting_paths(p, a, 3) != (f.bit(i) ? 1u : 0u)) return false;
  }
  return true;
}

const std::pair<unsigned, unsigned> kSmall[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};

}  // namespace

TEST_CASE("decision tree") {
  for (unsigned k : {1u, 2u, 3u}) {
    std::vector<unsigned> vars(k);
    for (unsigned i = 0; i < k; ++i) vars[i] = i;
    for (std::uint64_t w = 0; w < (1u << k); ++w) {
      ProgramBuilder b(k, 0);
      std::vector<VertexId> targets(1u << k, b.reject());
      targets[w] = b.accept();
      const auto s = build::decision_tree(b, vars, targets);
      CHECK(b.size() == (1u << k) - 1);
      const auto p = std::move(b).finish(s);
      CHECK(validate(p, Semantics::deterministic()).empty());
      const auto t = to_truth_table(p, Semantics::deterministic());
      for (std::uint64_t i = 0; i < t.size(); ++i) CHECK(t.bit(i) == (i == w));
    }
  }
}

TEST_CASE("equality checker") {
  for (unsigned k : {1u, 2u, 3u}) {
    std::vector<unsigned> v, y;
    for (unsigned i = 0; i < k; ++i) v.push_back(i), y.push_back(k + i);
    ProgramBuilder b(2 * k, 0);
    const auto s = build::equality_checker(b, v, y, b.accept(), b.reject());
    CHECK(b.size() == 3 * k);
    const auto p = std::move(b).finish(s);
    const auto t = to_truth_table(p, Semantics::deterministic());
    for (std::uint64_t i = 0; i < t.size(); ++i) CHECK(t.bit(i) == ((i >> k) == (i & ((1u << k) - 1))));
  }
  ProgramBuilder b(2, 0);
  const unsigned v[] = {0, 1}, y[] = {0};
  CHECK_THROWS(build::equality_checker(b, v, y, b.accept(), b.reject()));
}

TEST_CASE("ascertainer") {
  for (unsigned k : {1u, 2u, 3u}) {
    std::vector<unsigned> vars(k);
    for (unsigned i = 0; i < k; ++i) vars[i] = i;
    for (std::uint64_t w = 0; w < (1u << k); ++w) {
      ProgramBuilder b(k, 0);
      const auto entries = build::ascertainer(b, vars, b.accept(), b.reject());
      REQUIRE(entries.size() == (1u << k));
      CHECK(b.size() == (2u << k) - 2);
      const auto p = std::move(b).finish(entries[w]);
      const auto t = to_truth_table(p, Semantics::existential());
      for (std::uint64_t i = 0; i < t.size(); ++i) CHECK(t.bit(i) == (i == w));
    }
  }
}

TEST_CASE("formula gadgets") {
  SUBCASE("equality formula") {
    for (unsigned k : {1u, 2u, 3u}) {
      std::vector<unsigned> v, y;
      for (unsigned i = 0; i < k; ++i) v.push_back(i), y.push_back(k + i);
      FormulaBuilder b(2 * k, 0);
      const auto root = build::equality_formula(b, v, y);
      const auto phi = std::move(b).finish(root);
      CHECK(phi.size() == 4 * k);
      const auto t = to_truth_table(phi);
      for (std::uint64_t i = 0; i < t.size(); ++i) CHECK(t.bit(i) == ((i >> k) == (i & ((1u << k) - 1))));
    }
  }
  SUBCASE("one-selector mux") {
    FormulaBuilder b(3, 0);
    const build::RefMaker sel[] = {build::literal_maker(0)};
    const FormulaBuilder::Ref leaves[] = {b.literal(1), b.literal(2)};
    const auto phi = std::move(b).finish(build::mux_formula(b, sel, leaves));
    CHECK(phi.size() == 4);
    const auto t = to_truth_table(phi);
    for (std::uint64_t i = 0; i < 8; ++i) {
      const auto a = ref::bits_of(i, 3);
      CHECK(t.bit(i) == bool(a[0] ? a[2] : a[1]));
    }
  }
  SUBCASE("mux over constants") {
    FormulaBuilder b(2, 0);
    const build::RefMaker sel[] = {build::literal_maker(0), build::literal_maker(1)};
    const FormulaBuilder::Ref leaves[] = {b.constant(false), b.constant(true), b.constant(true),
                                          b.constant(false)};
    const auto phi = std::move(b).finish(build::mux_formula(b, sel, leaves));
    CHECK(phi.size() == 6);
    CHECK(to_truth_table(phi).to_hex() == "6");
  }
}

TEST_CASE("shannon nbp on every function of up to 3 variables") {
  for (unsigned n = 0; n <= 3; ++n) {
    for (std::uint64_t id = 0; id < (std::uint64_t{1} << (1u << n)); ++id) {
      const auto f = TruthTable::from_function(n, [&](std::uint64_t i) { return (id >> i) & 1u; });
      const auto p = build::shannon_nbp(f);
      CHECK(to_truth_table(p, Semantics::existential()) == f);
      CHECK(to_truth_table(p, Semantics::parity()) == f);
      CHECK(unique_paths(p, f));
      CHECK(build::shannon_bound(n, p.size()).within);
    }
  }
  const auto zero = build::shannon_nbp(TruthTable::constant(4, false));
  CHECK(to_truth_table(zero, Semantics::existential()).count_ones() == 0);
  const auto and2 = TruthTable::from_function(2, [](std::uint64_t i) { return i == 3; });
  CHECK(build::shannon_nbp(and2).size() <= 6);
}

TEST_CASE("isa nbp") {
  for (auto [k, l] : kSmall) {
    const auto p = build::isa_nbp(k, l);
    const auto f = isa_table(k, l);
    CHECK(validate(p, Semantics::existential()).empty());
    CHECK(to_truth_table(p, Semantics::existential()) == f);
    CHECK(to_truth_table(p, Semantics::parity()) == f);
    CHECK(unique_paths(p, f));
    CHECK(build::isa_bound(build::Model::NBP, k, l, 0, p.size()).within);
    CHECK(build::isa_bound(build::Model::ParityBP, k, l, 0, p.size()).within);
  }
  CHECK(build::isa_nbp(2, 2).size() <= 28);
  CHECK(build::isa_nbp(1, 1).size() <= 8);
}

TEST_CASE("isa bp") {
  for (auto [k, l] : kSmall) {
    const auto p = build::isa_bp(k, l);
    CHECK(validate(p, Semantics::deterministic()).empty());
    CHECK(to_truth_table(p, Semantics::deterministic()) == isa_table(k, l));
    CHECK(build::isa_bound(build::Model::BP, k, l, 0, p.size()).within);
  }
  CHECK(build::isa_bp(2, 2).size() <= 80);
}

TEST_CASE("isa lnbp") {
  for (auto [k, l] : kSmall)
    for (unsigned d : {0u, 1u, 2u, 3u}) {
      const auto p = build::isa_lnbp(k, l, d);
      CHECK(p.guesses() == d);
      CHECK(validate(p, Semantics::limited(d)).empty());
      CHECK(to_truth_table(p, Semantics::limited(d)) == isa_table(k, l));
      CHECK(build::isa_bound(build::Model::LNBP, k, l, d, p.size()).within);
    }
  CHECK(build::isa_lnbp(1, 1, 1).size() <= 12);
}

TEST_CASE("isa lnbp staged construction on a long pointer") {
  // l - delta >= 8 takes the staged path; too large to tabulate.
  for (auto [k, l, d] : {std::tuple{1u, 9u, 1u}, {1u, 10u, 0u}, {2u, 9u, 0u}}) {
    const auto p = build::isa_lnbp(k, l, d);
    CHECK(validate(p, Semantics::limited(d)).empty());
    const auto v = verify(p, Semantics::limited(d), FunctionSpec::isa(k, l), 3000, 99);
    CHECK(v.equivalent);
    CHECK_FALSE(v.exhaustive);
    CHECK(build::isa_bound(build::Model::LNBP, k, l, d, p.size()).within);
  }
}

TEST_CASE("isa formulas") {
  for (auto [k, l] : kSmall) {
    const auto phi = build::isa_bf(k, l);
    CHECK(to_truth_table(phi) == isa_table(k, l));
    CHECK(build::isa_bound(build::Model::BF, k, l, 0, phi.size()).within);
    for (unsigned d : {0u, 1u, 2u}) {
      const auto psi = build::isa_lnbf(k, l, d);
      CHECK(to_truth_table(psi) == isa_table(k, l));
      CHECK(build::isa_bound(build::Model::LNBF, k, l, d, psi.size()).within);
    }
  }
  CHECK(to_truth_table(build::isa_lnbf(1, 1, 5)) == isa_table(1, 1));
}

TEST_CASE("bound checks compare exactly") {
  CHECK(build::isa_bound(build::Model::NBP, 2, 2, 0, 28).within);
  CHECK_FALSE(build::isa_bound(build::Model::NBP, 2, 2, 0, 29).within);
  CHECK(build::shannon_bound(4, 12).within);
  CHECK_FALSE(build::shannon_bound(4, 13).within);
  CHECK(build::parse_model(build::model_name(build::Model::LNBF)) == build::Model::LNBF);
}
