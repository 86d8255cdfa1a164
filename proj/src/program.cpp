#include "necip/program.hpp"

#include <algorithm>
#include <stdexcept>

#include "necip/boolfn.hpp"

namespace necip {

std::string Semantics::name() const {
  switch (kind) {
    case SemanticsKind::Existential: return "existential";
    case SemanticsKind::Parity: return "parity";
    case SemanticsKind::Deterministic: return "deterministic";
    case SemanticsKind::Limited: return "limited:" + std::to_string(delta);
  }
  return "?";
}

Semantics Semantics::parse(const std::string& text) {
  if (text == "existential" || text == "nbp") return existential();
  if (text == "parity" || text == "pbp") return parity();
  if (text == "deterministic" || text == "bp") return deterministic();
  const std::string prefix = "limited:";
  if (text.rfind(prefix, 0) == 0) return limited(static_cast<unsigned>(std::stoul(text.substr(prefix.size()))));
  throw std::invalid_argument("unknown semantics '" + text + "'");
}

namespace {

std::vector<BranchingProgram::Arc> canonical_arcs(std::vector<BranchingProgram::Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

}  // namespace

BranchingProgram::BranchingProgram(unsigned inputs, unsigned guesses, std::size_t vertex_count,
                                   VertexId start, VertexId sink0, VertexId sink1,
                                   std::vector<Arc> a0, std::vector<Arc> a1,
                                   std::vector<int> var)
    : inputs_(inputs),
      guesses_(guesses),
      start_(start),
      sink0_(sink0),
      sink1_(sink1),
      a0_(canonical_arcs(std::move(a0))),
      a1_(canonical_arcs(std::move(a1))),
      var_(std::move(var)) {
  if (var_.size() != vertex_count) throw std::invalid_argument("var map size mismatch");
  if (vertex_count < 2) throw std::invalid_argument("a program needs two sinks");
  if (start >= vertex_count || sink0 >= vertex_count || sink1 >= vertex_count)
    throw std::invalid_argument("s/t0/t1 out of range");
  if (sink0 == sink1) throw std::invalid_argument("t0 and t1 must be distinct");
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (is_sink(static_cast<VertexId>(v))) {
      var_[v] = kNoVar;
      continue;
    }
    if (var_[v] < 0 || static_cast<unsigned>(var_[v]) >= variable_count())
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " lacks a valid variable label");
  }
  for (int label = 0; label < 2; ++label) {
    const auto& arcs = label ? a1_ : a0_;
    auto& off = offset_[label];
    auto& tgt = target_[label];
    off.assign(vertex_count + 1, 0);
    for (const Arc& a : arcs) {
      if (a.from >= vertex_count || a.to >= vertex_count)
        throw std::invalid_argument("arc endpoint out of range");
      ++off[a.from + 1];
    }
    for (std::size_t v = 0; v < vertex_count; ++v) off[v + 1] += off[v];
    tgt.resize(arcs.size());
    // arcs are sorted by (from, to), so targets land in order
    for (std::size_t i = 0; i < arcs.size(); ++i) tgt[i] = arcs[i].to;
  }

  // Kahn's algorithm over A0 u A1.
  std::vector<std::uint32_t> indeg(vertex_count, 0);
  for (int label = 0; label < 2; ++label)
    for (VertexId t : target_[label]) ++indeg[t];
  std::vector<VertexId> order;
  order.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (indeg[v] == 0) order.push_back(static_cast<VertexId>(v));
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexId v = order[head];
    for (int label = 0; label < 2; ++label)
      for (VertexId t : successors(v, label != 0))
        if (--indeg[t] == 0) order.push_back(t);
  }
  if (order.size() == vertex_count) topo_ = std::move(order);
}

BranchingProgram BranchingProgram::constant(unsigned inputs, bool value) {
  return BranchingProgram(inputs, 0, 2, value ? 1 : 0, 0, 1, {}, {}, {kNoVar, kNoVar});
}

std::span<const VertexId> BranchingProgram::successors(VertexId v, bool label) const {
  const int l = label ? 1 : 0;
  const auto first = offset_[l][v];
  const auto last = offset_[l][v + 1];
  return std::span<const VertexId>(target_[l].data() + first, last - first);
}

std::span<const VertexId> BranchingProgram::topological_order() const {
  if (!topo_) return {};
  return *topo_;
}

std::vector<std::string> validate(const BranchingProgram& p, const Semantics& sem) {
  std::vector<std::string> out;
  for (int label = 0; label < 2; ++label) {
    for (const auto& a : p.arcs(label != 0)) {
      if (p.is_sink(a.from))
        out.push_back("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                      ") leaves a sink");
      if (a.to == p.start())
        out.push_back("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                      ") enters the start vertex");
    }
  }
  const bool needs_determinism =
      sem.kind == SemanticsKind::Deterministic || sem.kind == SemanticsKind::Limited;
  if (sem.kind == SemanticsKind::Limited && sem.delta != p.guesses())
    out.push_back("limited semantics with delta " + std::to_string(sem.delta) +
                  " but the program declares " + std::to_string(p.guesses()) +
                  " guess variables");
  if (sem.kind != SemanticsKind::Limited && p.guesses() != 0)
    out.push_back("guess variables are only meaningful under limited semantics");
  if ((needs_determinism || sem.kind == SemanticsKind::Parity) && !p.acyclic())
    out.push_back("program graph has a cycle");
  if (needs_determinism) {
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
      if (p.is_sink(v)) continue;
      for (int label = 0; label < 2; ++label) {
        const auto n = p.successors(v, label != 0).size();
        if (n != 1)
          out.push_back("vertex " + std::to_string(v) + " has " + std::to_string(n) + " " +
                        std::to_string(label) + "-arcs, deterministic needs exactly one");
      }
    }
  }
  return out;
}

namespace {

void check_assignment(const BranchingProgram& p, std::span<const std::uint8_t> a) {
  if (a.size() != p.variable_count())
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) +
                                " bits, program reads " +
                                std::to_string(p.variable_count()) + " variables");
}

bool label_of(const BranchingProgram& p, VertexId v, std::span<const std::uint8_t> a) {
  return a[static_cast<unsigned>(p.var(v))] != 0;
}

}  // namespace

bool eval_existential(const BranchingProgram& p, std::span<const std::uint8_t> a) {
  check_assignment(p, a);
  std::vector<bool> seen(p.vertex_count(), false);
  std::vector<VertexId> stack{p.start()};
  seen[p.start()] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == p.sink1()) return true;
    if (p.is_sink(v)) continue;
    for (VertexId t : p.successors(v, label_of(p, v, a))) {
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return false;
}

std::uint64_t count_accepting_paths(const BranchingProgram& p,
                                    std::span<const std::uint8_t> a, std::uint64_t cap) {
  check_assignment(p, a);
  if (!p.acyclic()) throw std::invalid_argument("path counting needs an acyclic program");
  std::vector<std::uint64_t> count(p.vertex_count(), 0);
  count[p.start()] = 1;
  for (VertexId v : p.topological_order()) {
    if (count[v] == 0 || p.is_sink(v)) continue;
    for (VertexId t : p.successors(v, label_of(p, v, a)))
      count[t] = std::min(cap, count[t] + count[v]);
  }
  return count[p.sink1()];
}

bool eval_parity(const BranchingProgram& p, std::span<const std::uint8_t> a) {
  check_assignment(p, a);
  if (!p.acyclic())
    throw std::invalid_argument("parity semantics is only defined for acyclic programs");
  std::vector<std::uint8_t> parity(p.vertex_count(), 0);
  parity[p.start()] = 1;
  for (VertexId v : p.topological_order()) {
    if (!parity[v] || p.is_sink(v)) continue;
    for (VertexId t : p.successors(v, label_of(p, v, a))) parity[t] ^= 1u;
  }
  return parity[p.sink1()] != 0;
}

bool eval_deterministic(const BranchingProgram& p, std::span<const std::uint8_t> a) {
  check_assignment(p, a);
  VertexId v = p.start();
  for (std::size_t steps = 0; steps <= p.vertex_count(); ++steps) {
    if (v == p.sink1()) return true;
    if (v == p.sink0()) return false;
    const auto next = p.successors(v, label_of(p, v, a));
    if (next.size() != 1)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is not deterministic under this input");
    v = next[0];
  }
  throw std::invalid_argument("deterministic evaluation did not terminate (cycle)");
}

bool eval_limited(const BranchingProgram& p, std::span<const std::uint8_t> a,
                  unsigned delta) {
  if (delta != p.guesses())
    throw std::invalid_argument("delta " + std::to_string(delta) + " does not match the " +
                                std::to_string(p.guesses()) + " declared guess variables");
  if (a.size() != p.inputs())
    throw std::invalid_argument("limited evaluation takes the " + std::to_string(p.inputs()) +
                                " input bits only");
  Assignment full(a.begin(), a.end());
  full.resize(p.variable_count(), 0);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << delta); ++b) {
    for (unsigned i = 0; i < delta; ++i)
      full[p.inputs() + i] = (b >> (delta - 1 - i)) & 1u;
    if (eval_deterministic(p, full)) return true;
  }
  return false;
}

bool eval(const BranchingProgram& p, const Semantics& sem, std::span<const std::uint8_t> a) {
  switch (sem.kind) {
    case SemanticsKind::Existential: return eval_existential(p, a);
    case SemanticsKind::Parity: return eval_parity(p, a);
    case SemanticsKind::Deterministic: return eval_deterministic(p, a);
    case SemanticsKind::Limited: return eval_limited(p, a, sem.delta);
  }
  return false;
}

TruthTable to_truth_table(const BranchingProgram& p, const Semantics& sem) {
  const unsigned vars = p.variable_count();
  if (vars > TruthTable::kMaxArity)
    throw std::invalid_argument("program reads " + std::to_string(vars) +
                                " variables, beyond the truth-table cap");
  if (sem.kind == SemanticsKind::Limited && sem.delta != p.guesses())
    throw std::invalid_argument("delta does not match the declared guess variables");
  if (sem.kind != SemanticsKind::Limited && p.guesses() != 0)
    throw std::invalid_argument("guess variables need limited semantics");
  const bool parity = sem.kind == SemanticsKind::Parity;
  if ((parity || sem.kind == SemanticsKind::Deterministic ||
       sem.kind == SemanticsKind::Limited) &&
      !p.acyclic())
    throw std::invalid_argument("semantics " + sem.name() + " needs an acyclic program");
  if (sem.kind == SemanticsKind::Deterministic || sem.kind == SemanticsKind::Limited) {
    for (VertexId v = 0; v < p.vertex_count(); ++v)
      if (!p.is_sink(v) && (p.successors(v, false).size() != 1 ||
                            p.successors(v, true).size() != 1))
        throw std::invalid_argument("program is not deterministic");
  }

  const auto& k = kernels::active();
  std::vector<TruthTable> proj;
  proj.reserve(vars);
  for (unsigned i = 0; i < vars; ++i) proj.push_back(TruthTable::projection(vars, i));

  // acc[v]: inputs for which v reaches t1 (existential), or the parity of
  // the number of v -> t1 paths.
  std::vector<TruthTable> acc(p.vertex_count(), TruthTable(vars));
  acc[p.sink1()] = TruthTable::constant(vars, true);
  TruthTable branch0(vars), branch1(vars);

  auto update = [&](VertexId v) {
    std::fill(branch0.words().begin(), branch0.words().end(), 0);
    std::fill(branch1.words().begin(), branch1.words().end(), 0);
    for (int label = 0; label < 2; ++label) {
      TruthTable& b = label ? branch1 : branch0;
      for (VertexId t : p.successors(v, label != 0)) {
        if (parity)
          k.xor_words(b.words(), b.words(), acc[t].words());
        else
          k.or_words(b.words(), b.words(), acc[t].words());
      }
    }
    k.mux_words(acc[v].words(), proj[static_cast<unsigned>(p.var(v))].words(),
                branch0.words(), branch1.words());
  };

  if (p.acyclic()) {
    const auto order = p.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (!p.is_sink(*it)) update(*it);
  } else {
    // Least fixpoint of reachability; at most |X| rounds.
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v = 0; v < p.vertex_count(); ++v) {
        if (p.is_sink(v)) continue;
        const TruthTable before = acc[v];
        update(v);
        if (!(acc[v] == before)) changed = true;
      }
    }
  }
  TruthTable result = acc[p.start()];
  if (sem.kind == SemanticsKind::Limited) result = or_project_suffix(result, sem.delta);
  return result;
}

ProgramBuilder::ProgramBuilder(unsigned inputs, unsigned guesses)
    : inputs_(inputs), guesses_(guesses), var_{BranchingProgram::kNoVar, BranchingProgram::kNoVar} {}

VertexId ProgramBuilder::add_vertex(unsigned var) {
  if (var >= inputs_ + guesses_) throw std::invalid_argument("vertex variable out of range");
  var_.push_back(static_cast<int>(var));
  return static_cast<VertexId>(var_.size() - 1);
}

void ProgramBuilder::add_arc(VertexId from, bool label, VertexId to) {
  (label ? a1_ : a0_).push_back({from, to});
}

BranchingProgram ProgramBuilder::finish(VertexId start) && {
  const std::size_t n = var_.size();
  return BranchingProgram(inputs_, guesses_, n, start, reject(), accept(), std::move(a0_),
                          std::move(a1_), std::move(var_));
}

}  // namespace necip
