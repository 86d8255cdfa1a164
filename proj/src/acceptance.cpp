#include "necip/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "necip/boolfn.hpp"
#include "necip/builders.hpp"
#include "necip/families.hpp"
#include "necip/neciporuk.hpp"
#include "necip/oracle.hpp"
#include "necip/program.hpp"

namespace necip::acceptance {

namespace {

using Pairs = std::vector<std::pair<unsigned, unsigned>>;
const Pairs kIsaParams = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  std::string summary() const {
    std::ostringstream s;
    s << checks << " checks, " << failures << " failures";
    if (failures) s << "; first: " << first_failure;
    return s.str();
  }
};

std::string tag(const char* what, unsigned k, unsigned l, int delta = -1) {
  std::ostringstream s;
  s << what << "(" << k << "," << l;
  if (delta >= 0) s << "," << delta;
  s << ")";
  return s.str();
}

// Path count is 1 on accepted inputs and 0 elsewhere.
bool unique_accepting_paths(const BranchingProgram& p, const TruthTable& f) {
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const Assignment a = assignment_of(i, f.arity());
    if (count_accepting_paths(p, a, 2) != (f.bit(i) ? 1u : 0u)) return false;
  }
  return true;
}

CriterionResult construction_correctness() {
  Tally t;
  for (auto [k, l] : kIsaParams) {
    const TruthTable ref = FunctionSpec::isa(k, l).to_table();
    const auto nbp = build::isa_nbp(k, l);
    t.expect(validate(nbp, Semantics::existential()).empty(), tag("isa_nbp valid", k, l));
    t.expect(to_truth_table(nbp, Semantics::existential()) == ref, tag("isa_nbp", k, l));
    t.expect(build::isa_bound(build::Model::NBP, k, l, 0, nbp.size()).within,
             tag("isa_nbp size", k, l));
    const auto bp = build::isa_bp(k, l);
    t.expect(validate(bp, Semantics::deterministic()).empty(), tag("isa_bp valid", k, l));
    t.expect(to_truth_table(bp, Semantics::deterministic()) == ref, tag("isa_bp", k, l));
    t.expect(build::isa_bound(build::Model::BP, k, l, 0, bp.size()).within,
             tag("isa_bp size", k, l));
    const auto bf = build::isa_bf(k, l);
    t.expect(to_truth_table(bf) == ref, tag("isa_bf", k, l));
    t.expect(build::isa_bound(build::Model::BF, k, l, 0, bf.size()).within,
             tag("isa_bf size", k, l));
    for (unsigned d = 0; d <= 2; ++d) {
      const auto lp = build::isa_lnbp(k, l, d);
      t.expect(validate(lp, Semantics::limited(d)).empty(), tag("isa_lnbp valid", k, l, d));
      t.expect(to_truth_table(lp, Semantics::limited(d)) == ref, tag("isa_lnbp", k, l, d));
      t.expect(build::isa_bound(build::Model::LNBP, k, l, d, lp.size()).within,
               tag("isa_lnbp size", k, l, d));
      const auto lf = build::isa_lnbf(k, l, d);
      t.expect(to_truth_table(lf) == ref, tag("isa_lnbf", k, l, d));
      t.expect(build::isa_bound(build::Model::LNBF, k, l, d, lf.size()).within,
               tag("isa_lnbf size", k, l, d));
    }
  }
  return {1, "construction correctness", t.failures == 0, t.summary(), 0};
}

CriterionResult unique_paths() {
  Tally t;
  for (auto [k, l] : kIsaParams) {
    const TruthTable ref = FunctionSpec::isa(k, l).to_table();
    const auto nbp = build::isa_nbp(k, l);
    t.expect(unique_accepting_paths(nbp, ref), tag("isa_nbp paths", k, l));
    t.expect(to_truth_table(nbp, Semantics::parity()) == ref, tag("isa_nbp parity", k, l));
    const auto sh = build::shannon_nbp(ref);
    t.expect(unique_accepting_paths(sh, ref), tag("shannon_nbp(ISA) paths", k, l));
    t.expect(to_truth_table(sh, Semantics::parity()) == ref, tag("shannon_nbp(ISA) parity", k, l));
  }
  return {2, "unique accepting path", t.failures == 0, t.summary(), 0};
}

CriterionResult subfunction_counts() {
  Tally t;
  std::ostringstream seen;
  for (auto [k, l] : kIsaParams) {
    const TruthTable f = FunctionSpec::isa(k, l).to_table();
    const Partition part = isa_partition(k, l);
    const std::uint64_t want = std::uint64_t{1} << (1u << l);
    for (std::size_t i = 0; i + 1 < part.size(); ++i) {
      const auto r = count_subfunctions(f, part.blocks()[i]).count;
      t.expect(r == want, tag("r(ISA) pointer block", k, l) + " = " + std::to_string(r));
    }
  }
  for (auto [N, m] : Pairs{{2, 4}, {4, 16}}) {
    // C(m, N-1) + 1
    BigInt c = 1;
    for (unsigned i = 0; i < N - 1; ++i) c = c * (m - i) / (i + 1);
    const std::uint64_t want = static_cast<std::uint64_t>(c + 1);
    const FunctionSpec f = FunctionSpec::ed(N, m);
    const TruthTable table = f.to_table();
    const Partition part = ed_partition(N, m);
    seen << " ED(" << N << "," << m << ") stated " << want << ", measured";
    for (const auto& block : part.blocks()) {
      const auto r = count_subfunctions(table, block).count;
      t.expect(r == want, tag("r(ED) block", N, m) + " = " + std::to_string(r));
      seen << " " << r;
    }
  }
  return {3, "subfunction counts", t.failures == 0, t.summary() + ";" + seen.str(), 0};
}

CriterionResult partition_arithmetic() {
  Tally t;
  for (unsigned n = 5; n <= 200; ++n) {
    const auto part = isa_n_partition(n);
    const double lg = std::log2(static_cast<double>(n));
    t.expect(static_cast<double>(part.p) * 32 * lg >= n, "p at n=" + std::to_string(n));
    t.expect(static_cast<double>(part.q) * 16 >= n, "q at n=" + std::to_string(n));
  }
  return {4, "partition lemma arithmetic", t.failures == 0, t.summary(), 0};
}

CriterionResult shannon_sweep() {
  Tally t;
  std::uint64_t functions = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t id = 0; id < count; ++id) {
      const TruthTable f =
          TruthTable::from_function(n, [id](std::uint64_t i) { return (id >> i) & 1u; });
      const auto p = build::shannon_nbp(f);
      const std::string name = "n=" + std::to_string(n) + " f=" + f.to_hex();
      t.expect(to_truth_table(p, Semantics::existential()) == f, name + " table");
      t.expect(unique_accepting_paths(p, f), name + " paths");
      t.expect(build::shannon_bound(n, p.size()).within, name + " size");
      ++functions;
    }
  }
  return {5, "shannon sweep", t.failures == 0,
          std::to_string(functions) + " functions; " + t.summary(), 0};
}

// Sum of b(r) over the partition's blocks.
std::uint64_t method_total(const TruthTable& f, const Partition& part,
                           const std::function<std::uint64_t(std::uint64_t)>& b) {
  std::uint64_t total = 0;
  for (const auto& block : part.blocks()) total += b(count_subfunctions(f, block).count);
  return total;
}

// All set partitions of [n].
std::vector<Partition> all_partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> a(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned used) {
    if (i == n) {
      std::vector<IndexSet> blocks(used);
      for (unsigned j = 0; j < n; ++j) blocks[a[j]].push_back(j);
      out.emplace_back(n, std::move(blocks));
      return;
    }
    for (unsigned c = 0; c <= used && c < n; ++c) {
      a[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return out;
}

// min_size may only be known to exceed s_max.
bool at_least(int min_size, unsigned s_max, std::uint64_t bound) {
  if (min_size >= 0) return static_cast<std::uint64_t>(min_size) >= bound;
  return bound <= s_max + 1;
}

CriterionResult oracle_soundness() {
  Tally t;
  std::uint64_t pairs = 0;
  struct Case {
    oracle::Model model;
    unsigned n;
    std::function<std::uint64_t(std::uint64_t)> b;
  };
  const std::vector<Case> cases = {
      {oracle::Model::DetBP, 3, [](std::uint64_t m) { return b_bp(m); }},
      {oracle::Model::BF, 3, [](std::uint64_t m) { return b_bf(m); }},
      {oracle::Model::NBP, 2, [](std::uint64_t m) { return b_simple_nbp(m); }},
  };
  for (const auto& c : cases) {
    const unsigned s_max = oracle::default_budget(c.model).max_s;
    const auto best = oracle::min_size_table(c.n, c.model, s_max);
    const auto parts = all_partitions(c.n);
    for (std::uint64_t id = 0; id < best.size(); ++id) {
      const TruthTable f =
          TruthTable::from_function(c.n, [id](std::uint64_t i) { return (id >> i) & 1u; });
      for (const auto& part : parts) {
        const auto bound = method_total(f, part, c.b);
        t.expect(at_least(best[id], s_max, bound),
                 oracle::model_name(c.model) + " f=" + f.to_hex() + " " + part.to_string());
        ++pairs;
      }
    }
  }
  return {6, "oracle soundness", t.failures == 0,
          std::to_string(pairs) + " (function, partition, model) triples; " + t.summary(), 0};
}

CriterionResult semantic_counts() {
  Tally t;
  std::ostringstream vals;
  for (oracle::Model m : {oracle::Model::NBP, oracle::Model::ParityBP}) {
    const auto budget = oracle::default_budget(m);
    for (unsigned n = 1; n <= budget.max_n; ++n) {
      const auto best = oracle::min_size_table(n, m, budget.max_s);
      for (unsigned s = 1; s <= budget.max_s; ++s) {
        std::uint64_t count = 0;
        for (int v : best) count += (v >= 0 && static_cast<unsigned>(v) <= s);
        const std::string at = oracle::model_name(m) + "(" + std::to_string(n) + "," +
                               std::to_string(s) + ")=" + std::to_string(count);
        // 2^{2(s+1)^2}
        t.expect(BigInt(count) < (BigInt(1) << (2 * (s + 1) * (s + 1))), at + " upper");
        const int floor_log = static_cast<int>(std::floor(std::log2(s / 3.0)));
        if (static_cast<int>(n) >= 2 * floor_log)
          t.expect(static_cast<double>(count) > std::exp2(s * s / 36.0), at + " lower");
        vals << " " << at;
      }
    }
  }
  return {7, "semantic-count bounds", t.failures == 0, t.summary() + ";" + vals.str(), 0};
}

CriterionResult proof_checker() {
  Tally t;
  std::mt19937_64 rng(20261016);
  const unsigned trials = 200;
  for (unsigned trial = 0; trial < trials; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 9);
    const unsigned delta = static_cast<unsigned>(rng() % 4);
    // Sparse, dense and balanced tables.
    const unsigned density = 1 + static_cast<unsigned>(rng() % 7);
    std::bernoulli_distribution coin(density / 8.0);
    const TruthTable g =
        TruthTable::from_function(n + delta, [&](std::uint64_t) { return coin(rng); });
    IndexSet v;
    for (unsigned i = 0; i < n; ++i)
      if (rng() & 1u) v.push_back(i);
    if (v.empty()) v.push_back(static_cast<unsigned>(rng() % n));
    const TruthTable f = or_project_suffix(g, delta);
    const auto rf = count_subfunctions(f, v).count;
    const auto rg = count_subfunctions(g, v).count;
    const BigInt bound = hamming_ball_volume(rg, std::uint64_t{1} << delta) - 1;
    t.expect(BigInt(rf) <= bound, "trial " + std::to_string(trial));
  }
  return {8, "proof-checker inequality", t.failures == 0, t.summary(), 0};
}

CriterionResult cap_consistency() {
  Tally t;
  const std::vector<double> logs = {2, 4, 10, 16, 20, 64};
  for (double lg : logs) {
    const std::string at = "log2 m=" + std::to_string(static_cast<int>(lg));
    t.expect(b_simple_nbp_log(lg) <= 8 * std::sqrt(2.0) * std::sqrt(lg), at + " simple");
    for (unsigned d = 0; d <= 3; ++d) {
      const double llg = std::log2(lg);
      t.expect(b_lnbf_log(d, lg) <= 60 * std::max(lg / std::ldexp(1.0, int(d)), llg),
               at + " lnbf:" + std::to_string(d));
      t.expect(b_lnbp_log(d, lg) <= 52 * h_lnbp_log(d, lg), at + " lnbp:" + std::to_string(d));
    }
  }
  return {9, "cap consistency", t.failures == 0, t.summary(), 0};
}

CriterionResult pipeline() {
  Tally t;
  const FunctionSpec f = FunctionSpec::isa(1, 1);
  const auto rep = neciporuk_bound(f, isa_partition(1, 1), BoundingFunction::bf());
  t.expect(rep.total >= 2, "canonical total " + std::to_string(rep.total));
  const auto best = best_partition(f, BoundingFunction::bf(), SearchMode::Exact);
  t.expect(best.partitions_visited == 52, "visited " + std::to_string(best.partitions_visited));
  t.expect(best.total >= rep.total, "exact total " + std::to_string(best.total));
  return {10, "pipeline at toy scale", t.failures == 0,
          t.summary() + "; canonical " + std::to_string(rep.total) + ", exact " +
              std::to_string(best.total) + " at " + best.partition.to_string(),
          0};
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const std::function<CriterionResult()> table[] = {
      construction_correctness, unique_paths,     subfunction_counts, partition_arithmetic,
      shannon_sweep,            oracle_soundness, semantic_counts,    proof_checker,
      cap_consistency,          pipeline};
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1]();
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double limit = id == 1 ? 60 : id == 5 ? 30 : 0;
  if (limit > 0 && r.seconds >= limit) {
    r.passed = false;
    r.detail += "; over the " + std::to_string(static_cast<int>(limit)) + " s limit";
  }
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (";
  s.setf(std::ios::fixed);
  s.precision(2);
  s << r.seconds << " s): " << r.detail;
  return s.str();
}

}  // namespace necip::acceptance
