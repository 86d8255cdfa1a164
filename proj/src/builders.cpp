#include "necip/builders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "necip/boolfn.hpp"
#include "necip/families.hpp"

namespace necip::build {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow2(unsigned e) { return cpp_int(1) << e; }

std::vector<unsigned> secondary_bits(const IsaLayout& lay, unsigned p, unsigned from,
                                     unsigned to) {
  std::vector<unsigned> out;
  for (unsigned j = from; j < to; ++j) out.push_back(lay.secondary(p, j));
  return out;
}

std::vector<unsigned> primary_bits(const IsaLayout& lay) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < lay.k; ++i) out.push_back(lay.primary(i));
  return out;
}

std::vector<unsigned> range(unsigned from, unsigned to) {
  std::vector<unsigned> out;
  for (unsigned i = from; i < to; ++i) out.push_back(i);
  return out;
}

}  // namespace

VertexId decision_tree(ProgramBuilder& b, std::span<const unsigned> vars,
                       std::span<const VertexId> targets) {
  if (vars.size() >= 32 || targets.size() != (std::size_t{1} << vars.size()))
    throw std::invalid_argument("decision tree over k variables needs 2^k targets");
  if (vars.empty()) return targets[0];
  const std::size_t half = targets.size() / 2;
  const VertexId lo = decision_tree(b, vars.subspan(1), targets.first(half));
  const VertexId hi = decision_tree(b, vars.subspan(1), targets.subspan(half));
  const VertexId v = b.add_vertex(vars[0]);
  b.add_arc(v, false, lo);
  b.add_arc(v, true, hi);
  return v;
}

VertexId equality_checker(ProgramBuilder& b, std::span<const unsigned> v,
                          std::span<const unsigned> y, VertexId accept, VertexId reject) {
  if (v.size() != y.size()) throw std::invalid_argument("equality checker length mismatch");
  VertexId next = accept;
  for (std::size_t i = v.size(); i-- > 0;) {
    const VertexId y0 = b.add_vertex(y[i]);
    b.add_arc(y0, false, next);
    b.add_arc(y0, true, reject);
    const VertexId y1 = b.add_vertex(y[i]);
    b.add_arc(y1, true, next);
    b.add_arc(y1, false, reject);
    const VertexId x = b.add_vertex(v[i]);
    b.add_arc(x, false, y0);
    b.add_arc(x, true, y1);
    next = x;
  }
  return next;
}

std::vector<VertexId> ascertainer(ProgramBuilder& b, std::span<const unsigned> vars,
                                  VertexId accept, VertexId reject) {
  const std::size_t k = vars.size();
  if (k >= 32) throw std::invalid_argument("ascertainer too wide");
  // level[w] checks the last j variables against the j-bit suffix w.
  std::vector<VertexId> level{accept};
  for (std::size_t j = 1; j <= k; ++j) {
    const unsigned var = vars[k - j];
    std::vector<VertexId> next(std::size_t{1} << j);
    for (std::size_t w = 0; w < next.size(); ++w) {
      const bool first = (w >> (j - 1)) & 1u;
      const std::size_t rest = w & ((std::size_t{1} << (j - 1)) - 1);
      const VertexId v = b.add_vertex(var);
      b.add_arc(v, first, level[rest]);
      b.add_arc(v, !first, reject);
      next[w] = v;
    }
    level = std::move(next);
  }
  return level;
}

Ref equality_formula(FormulaBuilder& b, std::span<const unsigned> v,
                     std::span<const unsigned> y) {
  if (v.size() != y.size()) throw std::invalid_argument("equality formula length mismatch");
  if (v.empty()) throw std::invalid_argument("equality formula needs k >= 1");
  Ref acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Ref both = b.and_(b.literal(v[i]), b.literal(y[i]));
    const Ref neither = b.and_(b.literal(v[i], false), b.literal(y[i], false));
    const Ref eq = b.or_(both, neither);
    acc = i == 0 ? eq : b.and_(acc, eq);
  }
  return acc;
}

Ref mux_formula(FormulaBuilder& b, std::span<const RefMaker> selectors,
                std::span<const Ref> leaves) {
  if (selectors.size() >= 32 || leaves.size() != (std::size_t{1} << selectors.size()))
    throw std::invalid_argument("mux over k selectors needs 2^k leaves");
  if (selectors.empty()) return leaves[0];
  const std::size_t half = leaves.size() / 2;
  const Ref lo = mux_formula(b, selectors.subspan(1), leaves.first(half));
  const Ref hi = mux_formula(b, selectors.subspan(1), leaves.subspan(half));
  const Ref pick_lo = b.gate(gates::kNotAAndB, selectors[0](b), lo);
  const Ref pick_hi = b.and_(selectors[0](b), hi);
  return b.or_(pick_lo, pick_hi);
}

RefMaker literal_maker(unsigned var) {
  return [var](FormulaBuilder& b) { return b.literal(var); };
}

BranchingProgram shannon_nbp(const TruthTable& f) {
  const unsigned n = f.arity();
  if (n > 24) throw std::invalid_argument("shannon_nbp arity over budget");
  if (n == 0) return BranchingProgram::constant(0, f.bit(0));
  const unsigned t = (n + 1) / 2;
  ProgramBuilder b(n, 0);
  const auto suffix_vars = range(t, n);
  const auto entries = ascertainer(b, suffix_vars, b.accept(), b.reject());
  const std::size_t prefixes = std::size_t{1} << (t - 1);
  const std::size_t suffixes = entries.size();
  std::vector<VertexId> level(prefixes);
  for (std::size_t u = 0; u < prefixes; ++u) {
    const VertexId v = b.add_vertex(t - 1);
    for (unsigned a = 0; a < 2; ++a) {
      for (std::size_t w = 0; w < suffixes; ++w) {
        const std::uint64_t index = (((u << 1) | a) << (n - t)) | w;
        if (f.bit(index)) b.add_arc(v, a != 0, entries[w]);
      }
    }
    level[u] = v;
  }
  const auto prefix_vars = range(0, t - 1);
  const VertexId root = decision_tree(b, prefix_vars, level);
  return std::move(b).finish(root);
}

BranchingProgram isa_nbp(unsigned k, unsigned l) {
  const IsaLayout lay(k, l);
  ProgramBuilder b(lay.arity(), 0);
  const auto alpha = primary_bits(lay);
  const std::size_t P = lay.pointers();

  if (l == 1) {
    std::vector<VertexId> data(2);
    for (unsigned d = 0; d < 2; ++d) {
      data[d] = b.add_vertex(lay.data(d));
      b.add_arc(data[d], false, b.reject());
      b.add_arc(data[d], true, b.accept());
    }
    std::vector<VertexId> sec(P);
    for (std::size_t p = 0; p < P; ++p) {
      sec[p] = b.add_vertex(lay.secondary(static_cast<unsigned>(p), 0));
      b.add_arc(sec[p], false, data[0]);
      b.add_arc(sec[p], true, data[1]);
    }
    return std::move(b).finish(decision_tree(b, alpha, sec));
  }

  const unsigned c = (l + 1) / 2;  // read bits
  const unsigned g = l / 2;        // guessed bits
  // Verify the guessed primary pointer p'.
  const auto final_entries = ascertainer(b, alpha, b.accept(), b.reject());
  // Per p', verify the guessed low bits of the secondary pointer.
  std::vector<std::vector<VertexId>> low(P);
  for (std::size_t p = 0; p < P; ++p)
    low[p] = ascertainer(b, secondary_bits(lay, static_cast<unsigned>(p), c, l),
                         final_entries[p], b.reject());
  // Data vertices s_{(w,w')}.
  const std::size_t W = std::size_t{1} << c;
  const std::size_t Wg = std::size_t{1} << g;
  std::vector<VertexId> data(W * Wg);
  for (std::size_t w = 0; w < W; ++w) {
    for (std::size_t wg = 0; wg < Wg; ++wg) {
      const VertexId v = b.add_vertex(lay.data((w << g) | wg));
      for (std::size_t p = 0; p < P; ++p) b.add_arc(v, true, low[p][wg]);
      data[(w << g) | wg] = v;
    }
  }
  // Read alpha, then the high c bits of sec[alpha]; the last of them guesses w'.
  std::vector<VertexId> per_alpha(P);
  const std::size_t U = std::size_t{1} << (c - 1);
  for (std::size_t p = 0; p < P; ++p) {
    std::vector<VertexId> bottom(U);
    for (std::size_t u = 0; u < U; ++u) {
      const VertexId v = b.add_vertex(lay.secondary(static_cast<unsigned>(p), c - 1));
      for (unsigned a = 0; a < 2; ++a) {
        const std::size_t w = (u << 1) | a;
        for (std::size_t wg = 0; wg < Wg; ++wg) b.add_arc(v, a != 0, data[(w << g) | wg]);
      }
      bottom[u] = v;
    }
    per_alpha[p] =
        decision_tree(b, secondary_bits(lay, static_cast<unsigned>(p), 0, c - 1), bottom);
  }
  return std::move(b).finish(decision_tree(b, alpha, per_alpha));
}

namespace {

// Guess variable i (0-based) of a program over `inputs` inputs.
std::vector<unsigned> guess_vars(unsigned inputs, unsigned count) {
  return range(inputs, inputs + count);
}

std::vector<VertexId> data_readers(ProgramBuilder& b, const IsaLayout& lay) {
  std::vector<VertexId> data(lay.data_bits());
  for (std::size_t d = 0; d < data.size(); ++d) {
    data[d] = b.add_vertex(lay.data(d));
    b.add_arc(data[d], false, b.reject());
    b.add_arc(data[d], true, b.accept());
  }
  return data;
}

}  // namespace

BranchingProgram isa_lnbp(unsigned k, unsigned l, unsigned delta) {
  const IsaLayout lay(k, l);
  const unsigned n = lay.arity();
  ProgramBuilder b(n, delta);
  const auto alpha = primary_bits(lay);
  const std::size_t P = lay.pointers();

  if (l <= delta) {
    // Guess the whole secondary pointer, check it against sec[alpha], then
    // read the guessed data bit.
    const auto guesses = guess_vars(n, l);
    const auto data = data_readers(b, lay);
    const VertexId read = decision_tree(b, guesses, data);
    std::vector<VertexId> check(P);
    for (std::size_t p = 0; p < P; ++p)
      check[p] = equality_checker(b, secondary_bits(lay, static_cast<unsigned>(p), 0, l),
                                  guesses, read, b.reject());
    return std::move(b).finish(decision_tree(b, alpha, check));
  }

  const unsigned d = l - delta;
  unsigned m = 0;
  if (d >= 8) {
    const double x = static_cast<double>(d) - 2.0 * std::log2(static_cast<double>(d));
    m = static_cast<unsigned>(std::floor(std::log2(x) + 1e-12));
  }
  const auto guesses = guess_vars(n, delta);
  const unsigned read_bits = l - m - delta;  // stage 3
  const std::size_t prefixes = std::size_t{1} << (l - m);

  // Prefix states: the first l - m bits of the secondary pointer are known.
  std::vector<VertexId> prefix_state(prefixes);
  if (m == 0) {
    prefix_state = data_readers(b, lay);
  } else {
    const std::size_t Z = std::size_t{1} << m;
    const std::size_t memories = std::size_t{1} << Z;
    // Stages 8-10: per remembered data block, re-read alpha and the low m
    // bits of sec[alpha], then answer from memory.
    std::vector<VertexId> memory(memories);
    for (std::size_t mem = 0; mem < memories; ++mem) {
      std::vector<VertexId> per_alpha(P);
      for (std::size_t p = 0; p < P; ++p) {
        std::vector<VertexId> answer(Z);
        for (std::size_t z = 0; z < Z; ++z) {
          const bool bit = (mem >> (Z - 1 - z)) & 1u;
          answer[z] = bit ? b.accept() : b.reject();
        }
        per_alpha[p] = decision_tree(
            b, secondary_bits(lay, static_cast<unsigned>(p), l - m, l), answer);
      }
      memory[mem] = decision_tree(b, alpha, per_alpha);
    }
    // Stages 6-7: per prefix, read the 2^m candidate data bits.
    for (std::size_t pre = 0; pre < prefixes; ++pre) {
      std::vector<unsigned> cells;
      for (std::size_t z = 0; z < Z; ++z) cells.push_back(lay.data((pre << m) | z));
      prefix_state[pre] = decision_tree(b, cells, memory);
    }
  }

  // Stage 5: after forgetting alpha, read the guesses to recover the prefix.
  const std::size_t mids = std::size_t{1} << read_bits;
  std::vector<VertexId> mid(mids);
  for (std::size_t u = 0; u < mids; ++u) {
    std::vector<VertexId> targets(std::size_t{1} << delta);
    for (std::size_t gv = 0; gv < targets.size(); ++gv)
      targets[gv] = prefix_state[(gv << read_bits) | u];
    mid[u] = decision_tree(b, guesses, targets);
  }
  // Stages 1-4: read alpha, check the guesses against the top delta bits of
  // sec[alpha], read the next read_bits bits, merge over alpha.
  std::vector<VertexId> per_alpha(P);
  for (std::size_t p = 0; p < P; ++p) {
    const unsigned pu = static_cast<unsigned>(p);
    const VertexId reader =
        decision_tree(b, secondary_bits(lay, pu, delta, delta + read_bits), mid);
    per_alpha[p] = equality_checker(b, secondary_bits(lay, pu, 0, delta), guesses, reader,
                                    b.reject());
  }
  return std::move(b).finish(decision_tree(b, alpha, per_alpha));
}

BranchingProgram isa_bp(unsigned k, unsigned l) { return isa_lnbp(k, l, 0); }

Formula isa_lnbf(unsigned k, unsigned l, unsigned delta) {
  const IsaLayout lay(k, l);
  const unsigned n = lay.arity();
  const unsigned dg = std::min(delta, l);
  const unsigned m = l - dg;
  FormulaBuilder b(n, delta);
  const std::size_t P = lay.pointers();

  std::vector<RefMaker> alpha;
  for (unsigned i = 0; i < k; ++i) alpha.push_back(literal_maker(lay.primary(i)));

  // D: select Data[F_1..F_m, g_1..g_dg] where F_j = sec[alpha]_j.
  std::vector<RefMaker> selectors;
  for (unsigned j = 0; j < m; ++j) {
    selectors.push_back([&lay, &alpha, P, j](FormulaBuilder& fb) {
      std::vector<Ref> bits;
      for (std::size_t p = 0; p < P; ++p)
        bits.push_back(fb.literal(lay.secondary(static_cast<unsigned>(p), j)));
      return mux_formula(fb, alpha, bits);
    });
  }
  for (unsigned i = 0; i < dg; ++i) selectors.push_back(literal_maker(n + i));
  std::vector<Ref> cells;
  for (std::size_t c = 0; c < lay.data_bits(); ++c) cells.push_back(b.literal(lay.data(c)));
  const Ref D = mux_formula(b, selectors, cells);
  if (dg == 0) return std::move(b).finish(D);

  // V: the guesses equal the low dg bits of sec[alpha].
  const auto guesses = range(n, n + dg);
  std::vector<Ref> checks;
  for (std::size_t p = 0; p < P; ++p)
    checks.push_back(
        equality_formula(b, secondary_bits(lay, static_cast<unsigned>(p), m, l), guesses));
  const Ref V = mux_formula(b, alpha, checks);
  return std::move(b).finish(b.and_(V, D));
}

Formula isa_bf(unsigned k, unsigned l) { return isa_lnbf(k, l, 0); }

std::string model_name(Model m) {
  switch (m) {
    case Model::NBP: return "nbp";
    case Model::ParityBP: return "pbp";
    case Model::LNBP: return "lnbp";
    case Model::BP: return "bp";
    case Model::LNBF: return "lnbf";
    case Model::BF: return "bf";
  }
  return "?";
}

Model parse_model(const std::string& text) {
  for (Model m : {Model::NBP, Model::ParityBP, Model::LNBP, Model::BP, Model::LNBF, Model::BF})
    if (model_name(m) == text) return m;
  throw std::invalid_argument("unknown model '" + text + "'");
}

BoundCheck isa_bound(Model model, unsigned k, unsigned l, unsigned delta, std::uint64_t size_u) {
  const cpp_int size = size_u;
  const double K = std::ldexp(1.0, static_cast<int>(k));
  const double L = std::ldexp(1.0, static_cast<int>(l));
  BoundCheck out;
  switch (model) {
    case Model::NBP:
    case Model::ParityBP: {
      // 3 * 2^{k + l/2} + 2^l, squared out for odd l.
      const cpp_int x = size - pow2(l);
      out.within = x <= 0 || x * x <= 9 * pow2(2 * k + l);
      out.claimed = 3 * std::ldexp(1.0, static_cast<int>(k)) * std::sqrt(L) + L;
      out.expression = "3*2^(k+l/2)+2^l";
      break;
    }
    case Model::LNBP: {
      if (l <= delta) {
        const cpp_int bound = pow2(k) * (3 * l + 1) + 2 * pow2(l);
        out.within = size <= bound;
        out.claimed = K * (3.0 * l + 1) + 2 * L;
        out.expression = "2^k*(3l+1)+2*2^l";
      } else {
        const unsigned d = l - delta;
        const cpp_int lhs = size * d;
        const cpp_int inner = std::max(pow2(d), cpp_int(l) * d);
        out.within = lhs <= 12 * pow2(k) * inner + pow2(l + d);
        const double D = std::ldexp(1.0, static_cast<int>(d));
        out.claimed = 12 * K * std::max(D / d, double(l)) + L * D / d;
        out.expression = "12*2^k*max(2^(l-delta)/(l-delta),l)+2^(2l-delta)/(l-delta)";
      }
      break;
    }
    case Model::BP: {
      out.within = size * l <= 9 * pow2(k + l) + pow2(2 * l);
      out.claimed = (9 * K * L + L * L) / l;
      out.expression = "9*2^(k+l)/l+2^(2l)/l";
      break;
    }
    case Model::LNBF: {
      const unsigned dg = std::min(delta, l);
      const cpp_int inner = std::max(pow2(l - dg), cpp_int(l));
      out.within = size <= 12 * pow2(k) * inner + 3 * pow2(l);
      out.claimed =
          12 * K * std::max(std::ldexp(1.0, static_cast<int>(l - dg)), double(l)) + 3 * L;
      out.expression = "12*2^k*max(2^(l-delta),l)+3*2^l";
      break;
    }
    case Model::BF: {
      out.within = size < 7 * pow2(k + l);
      out.claimed = 7 * K * L;
      out.expression = "7*2^k*2^l (strict)";
      break;
    }
  }
  return out;
}

BoundCheck shannon_bound(unsigned n, std::uint64_t size) {
  BoundCheck out;
  const cpp_int bound = 3 * pow2((n + 1) / 2);
  out.within = cpp_int(size) <= bound;
  out.claimed = 3 * std::ldexp(1.0, static_cast<int>((n + 1) / 2));
  out.expression = "3*2^ceil(n/2)";
  return out;
}

}  // namespace necip::build
