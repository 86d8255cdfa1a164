#include <cmath>
#include <random>

#include "doctest.h"
#include "necip/families.hpp"
#include "necip/neciporuk.hpp"
#include "necip/oracle.hpp"
#include "oracles.hpp"

using namespace necip;

TEST_CASE("bounding function values") {
  CHECK(b_simple_nbp(3) == 0);
  CHECK(b_simple_nbp(16) == 1);
  CHECK(b_simple_nbp(std::uint64_t{1} << 32) == 3);
  CHECK(b_bp(16) == 1);
  CHECK(b_bp(3) == 0);
  CHECK(b_lnbp(1, std::uint64_t{1} << 16) == 1);
  for (unsigned d = 0; d < 4; ++d) CHECK(b_lnbp(d, 3) == 0);
  CHECK(b_lnbf(0, 4) == 1);
  CHECK(b_lnbf(0, std::uint64_t{1} << 16) == 4);
  CHECK(b_lnbf(3, std::uint64_t{1} << 16) == 1);
  CHECK(b_bf(4) == b_lnbf(0, 4));
  CHECK(b_simple_nbp_log(64) == b_simple_nbp_log(64.0));
}

TEST_CASE("bounding functions are non-decreasing") {
  for (auto b : {BoundingFunction::simple_nbp(), BoundingFunction::bp(), BoundingFunction::bf(),
                 BoundingFunction::lnbp(0), BoundingFunction::lnbp(1), BoundingFunction::lnbp(3),
                 BoundingFunction::lnbf(1), BoundingFunction::lnbf(2)}) {
    CHECK(is_non_decreasing(b));
    std::uint64_t prev = 0;
    for (std::uint64_t m = 1; m <= 4096; ++m) {
      CHECK(b(m) >= prev);
      prev = b(m);
    }
  }
  CHECK(is_non_decreasing(BoundingFunction::custom({{1, 0}, {10, 2}})));
  CHECK_THROWS(BoundingFunction::custom({{1, 3}, {10, 2}}));
}

TEST_CASE("bounding function names") {
  for (const char* s : {"simple-nbp", "bp", "bf", "lnbp:2", "lnbf:0"})
    CHECK(BoundingFunction::parse(s).name() == s);
  CHECK(BoundingFunction::parse("pbp").kind() == BoundKind::SimpleNBP);
  CHECK_THROWS(BoundingFunction::parse("lnbp:x"));
}

TEST_CASE("xi and caps") {
  CHECK(xi_lnbp(3, 1) == doctest::Approx(3));
  CHECK(xi_lnbp(16, 0) == doctest::Approx(16));
  CHECK(xi_lnbp(1024, 0) == doctest::Approx(10485.76));
  const auto g = [](double x) { return 4 * std::pow(2.0, 1.5 * x); };
  for (double lg : {4.0, 16.0, 100.0})
    CHECK(meta_function_cap_log(g, 2 * std::sqrt(2.0), lg) ==
          doctest::Approx(8 * std::sqrt(2.0) * std::sqrt(lg)));
  CHECK(b_simple_nbp(std::uint64_t{1} << 16) <= 8 * std::sqrt(2.0) * 4);
  for (double lg : {2.0, 4.0, 10.0, 16.0, 20.0, 64.0})
    for (unsigned d = 0; d < 4; ++d) {
      CHECK(b_simple_nbp_log(lg) <= 8 * std::sqrt(2.0) * std::sqrt(lg));
      CHECK(b_lnbf_log(d, lg) <= 60 * std::max(lg / std::ldexp(1.0, d), std::log2(lg)));
      CHECK(b_lnbp_log(d, lg) <= 52 * h_lnbp_log(d, lg));
    }
}

TEST_CASE("neciporuk_bound") {
  const auto isa = FunctionSpec::isa(1, 1);
  const auto r = neciporuk_bound(isa, isa_partition(1, 1), BoundingFunction::bf());
  REQUIRE(r.r.size() == 3);
  CHECK(r.r[0] == 4);
  CHECK(r.r[1] == 4);
  CHECK(r.total >= 2);
  std::uint64_t sum = 0;
  for (auto c : r.cost) sum += c;
  CHECK(sum == r.total);
  CHECK(neciporuk_bound(isa, Partition::whole(5), BoundingFunction::bf()).total == 0);
  CHECK(neciporuk_bound(FunctionSpec::ed(2, 4), ed_partition(2, 4), BoundingFunction::simple_nbp()).total == 0);
  const auto simple = neciporuk_bound(isa, isa_partition(1, 1), BoundingFunction::bf(), true);
  CHECK(simple.total >= r.total);
  CHECK(simple.cost[2] >= 3);
}

TEST_CASE("exact partition search matches an independent sweep") {
  auto check = [](const FunctionSpec& f, const BoundingFunction& b) {
    const auto res = best_partition(f, b, SearchMode::Exact);
    const auto all = ref::set_partitions(f.arity());
    CHECK(res.partitions_visited == all.size());
    std::uint64_t best = 0;
    for (const auto& blocks : all) {
      std::uint64_t total = 0;
      for (const auto& v : blocks) total += b(count_subfunctions(f, v));
      best = std::max(best, total);
    }
    CHECK(res.total == best);
    return res;
  };
  const auto and2 = FunctionSpec::table(TruthTable::from_function(2, [](std::uint64_t i) { return i == 3; }));
  CHECK(check(and2, BoundingFunction::bf()).total == 0);
  const auto isa = check(FunctionSpec::isa(1, 1), BoundingFunction::bf());
  CHECK(isa.total >= 2);
  CHECK(isa.total >= neciporuk_bound(FunctionSpec::isa(1, 1), isa_partition(1, 1), BoundingFunction::bf()).total);
  check(FunctionSpec::ed(2, 4), BoundingFunction::bf());
  check(FunctionSpec::table(TruthTable::constant(4, true)), BoundingFunction::bp());
  CHECK_THROWS(best_partition(FunctionSpec::isa(1, 3), BoundingFunction::bf(), SearchMode::Exact));
}

TEST_CASE("greedy search never beats exact search") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 3 + rng() % 4;
    TruthTable t(n);
    for (std::uint64_t i = 0; i < t.size(); ++i) t.set(i, rng() & 1u);
    const auto f = FunctionSpec::table(t);
    for (auto b : {BoundingFunction::bf(), BoundingFunction::custom({{1, 0}, {3, 1}, {5, 2}, {9, 4}})}) {
      const auto g = best_partition(f, b, SearchMode::Greedy);
      const auto e = best_partition(f, b, SearchMode::Exact);
      CHECK(g.total <= e.total);
      CHECK(neciporuk_bound(f, g.partition, b).total == g.total);
    }
  }
}

TEST_CASE("lower bounds never exceed oracle minimum sizes") {
  using oracle::Model;
  struct Case {
    Model model;
    BoundingFunction b;
    unsigned n;
  };
  for (const auto& c : {Case{Model::DetBP, BoundingFunction::bp(), 3},
                        Case{Model::BF, BoundingFunction::bf(), 3},
                        Case{Model::NBP, BoundingFunction::simple_nbp(), 2}}) {
    const auto sizes = oracle::min_size_table(c.n, c.model, oracle::default_budget(c.model).max_s);
    const auto parts = ref::set_partitions(c.n);
    for (std::uint64_t id = 0; id < sizes.size(); ++id) {
      const auto t = TruthTable::from_function(c.n, [&](std::uint64_t i) { return (id >> i) & 1u; });
      const auto f = FunctionSpec::table(t);
      for (const auto& blocks : parts) {
        std::vector<IndexSet> bs(blocks.begin(), blocks.end());
        const auto bound = neciporuk_bound(f, Partition(c.n, bs), c.b).total;
        // -1: exceeds the search budget, so at least max_s + 1.
        const long min = sizes[id] < 0 ? long(oracle::default_budget(c.model).max_s) + 1 : sizes[id];
        CHECK(long(bound) <= min);
      }
    }
  }
}
