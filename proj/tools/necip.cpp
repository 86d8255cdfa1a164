// necip: lower bounds, constructions and brute-force checks for small
// branching programs and formulas.
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "necip/acceptance.hpp"
#include "necip/builders.hpp"
#include "necip/errors.hpp"
#include "necip/io.hpp"
#include "necip/neciporuk.hpp"
#include "necip/oracle.hpp"
#include "necip/verify.hpp"

namespace {

using necip::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct Output {
  bool json = false;

  void emit(const Json& j, const std::string& table) const {
    if (json)
      std::cout << necip::io::dump(j);
    else
      std::cout << table;
  }
};

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string report_table(const necip::BoundReport& r) {
  std::ostringstream s;
  s << "function           " << r.function << "\n"
    << "bounding function  " << r.bounding_function << (r.simple_method ? " (simple method)" : "")
    << "\n"
    << "partition          " << r.partition.to_string() << "\n\n";
  s << std::left << std::setw(8) << "block" << std::setw(8) << "size" << std::setw(16) << "r"
    << std::setw(8) << "b" << "cost\n";
  for (std::size_t i = 0; i < r.r.size(); ++i)
    s << std::setw(8) << i + 1 << std::setw(8) << r.partition.blocks()[i].size() << std::setw(16)
      << r.r[i] << std::setw(8) << r.b[i] << r.cost[i] << "\n";
  s << "\ntotal              " << r.total << "\n";
  return s.str();
}

struct Construction {
  std::optional<necip::BranchingProgram> program;
  std::optional<necip::Formula> formula;
  necip::Semantics semantics;
  necip::FunctionSpec target;
  std::optional<necip::build::BoundCheck> bound;
  std::uint64_t size = 0;
};

Construction construct(const std::string& family, const std::vector<std::string>& args) {
  using namespace necip;
  auto param = [&](std::size_t i) -> unsigned {
    if (i >= args.size()) throw std::invalid_argument(family + " needs more parameters");
    return static_cast<unsigned>(std::stoul(args[i]));
  };
  auto expect = [&](std::size_t n) {
    if (args.size() != n)
      throw std::invalid_argument(family + " takes " + std::to_string(n) + " parameters");
  };
  if (family == "shannon-nbp") {
    expect(1);
    const FunctionSpec f = io::parse_function_spec(args[0]);
    auto p = build::shannon_nbp(f.to_table());
    const auto size = p.size();
    return {std::move(p), std::nullopt, Semantics::existential(), f,
            build::shannon_bound(f.arity(), size), size};
  }
  const bool limited = family == "isa-lnbp" || family == "isa-lnbf";
  expect(limited ? 3 : 2);
  const unsigned k = param(0), l = param(1), d = limited ? param(2) : 0;
  const FunctionSpec f = FunctionSpec::isa(k, l);
  auto with_program = [&](BranchingProgram p, Semantics sem, build::Model m) {
    const auto size = p.size();
    return Construction{std::move(p), std::nullopt, sem, f, build::isa_bound(m, k, l, d, size),
                        size};
  };
  auto with_formula = [&](Formula phi, build::Model m) {
    const auto size = phi.size();
    return Construction{std::nullopt, std::move(phi), Semantics::limited(d), f,
                        build::isa_bound(m, k, l, d, size), size};
  };
  if (family == "isa-nbp")
    return with_program(build::isa_nbp(k, l), Semantics::existential(), build::Model::NBP);
  if (family == "isa-pbp")
    return with_program(build::isa_nbp(k, l), Semantics::parity(), build::Model::ParityBP);
  if (family == "isa-bp")
    return with_program(build::isa_bp(k, l), Semantics::deterministic(), build::Model::BP);
  if (family == "isa-lnbp")
    return with_program(build::isa_lnbp(k, l, d), Semantics::limited(d), build::Model::LNBP);
  if (family == "isa-bf") return with_formula(build::isa_bf(k, l), build::Model::BF);
  if (family == "isa-lnbf") return with_formula(build::isa_lnbf(k, l, d), build::Model::LNBF);
  throw std::invalid_argument("unknown family '" + family + "'");
}

Json certificate(const Construction& c, const necip::Verdict& v) {
  Json j{{"function", c.target.name()},
         {"actual_size", c.size},
         {"verified", v.mode()},
         {"inputs_checked", v.checked},
         {"equivalent", v.equivalent}};
  if (c.bound) {
    j["claimed_bound"] = c.bound->claimed;
    j["bound_expression"] = c.bound->expression;
    j["within_bound"] = c.bound->within;
  }
  if (!v.counterexample.empty()) j["counterexample"] = v.counterexample;
  return j;
}

std::string certificate_table(const Json& cert) {
  std::ostringstream s;
  for (auto it = cert.begin(); it != cert.end(); ++it) {
    s << std::left << std::setw(18) << it.key() << " ";
    if (it->is_string())
      s << it->get<std::string>();
    else
      s << it->dump();
    s << "\n";
  }
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

necip::acceptance::CriterionResult run_and_print(int id, bool json, Json& rows) {
  const auto r = necip::acceptance::run_criterion(id);
  if (json)
    rows.push_back(Json{{"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"detail", r.detail},
                        {"seconds", std::round(r.seconds * 100) / 100}});
  else
    std::cout << necip::acceptance::format(r) << std::endl;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neciporuk lower bounds and matching constructions"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "Machine-readable JSON output");
  bool table_flag = false;
  app.add_flag("--table", table_flag, "Human-readable table output (default)");

  // bound
  auto* bound = app.add_subcommand("bound", "Nečiporuk sum over a partition");
  std::string bound_fn, bound_partition, bound_b = "bf", bound_search;
  bool bound_canonical = false, bound_simple = false;
  bound->add_option("function", bound_fn, "ed:N,m | isa:k,l | isan:n | table:FILE | hex:n:HEX")
      ->required();
  auto* part_opt = bound->add_option("--partition", bound_partition, "Blocks, e.g. 1,2|3,4");
  auto* canon_opt = bound->add_flag("--canonical", bound_canonical, "The family's own partition");
  auto* search_opt = bound->add_option("--search", bound_search, "exact | greedy")
                         ->check(CLI::IsMember({"exact", "greedy"}));
  part_opt->excludes(canon_opt)->excludes(search_opt);
  canon_opt->excludes(search_opt);
  bound->add_option("--b", bound_b, "simple-nbp | bp | bf | lnbp:D | lnbf:D");
  bound->add_flag("--simple-method", bound_simple, "Use max{|V_i|, b(r)} per block");

  // search-partition
  auto* search = app.add_subcommand("search-partition", "Best partition for a bounding function");
  std::string search_fn, search_mode = "exact", search_b = "bf";
  bool search_simple = false;
  search->add_option("function", search_fn)->required();
  search->add_option("--mode", search_mode)->check(CLI::IsMember({"exact", "greedy"}));
  search->add_option("--b", search_b);
  search->add_flag("--simple-method", search_simple);

  // construct
  auto* cons = app.add_subcommand("construct", "Build a program or formula with its certificate");
  std::string cons_family, cons_out;
  std::vector<std::string> cons_args;
  std::uint64_t cons_samples = necip::kDefaultSamples, cons_seed = 1;
  cons->add_option("family",
                   cons_family,
                   "isa-nbp | isa-pbp | isa-bp | isa-lnbp | isa-bf | isa-lnbf | shannon-nbp")
      ->required();
  cons->add_option("params", cons_args, "k l [delta], or a function spec for shannon-nbp");
  cons->add_option("-o,--out", cons_out, "Write the object here and the certificate to OUT.cert.json");
  cons->add_option("--samples", cons_samples);
  cons->add_option("--seed", cons_seed);

  // verify
  auto* ver = app.add_subcommand("verify", "Check a program or formula file against a function");
  std::string ver_file, ver_fn;
  std::uint64_t ver_samples = necip::kDefaultSamples, ver_seed = 1;
  ver->add_option("file", ver_file)->required()->check(CLI::ExistingFile);
  ver->add_option("function", ver_fn)->required();
  ver->add_option("--samples", ver_samples);
  ver->add_option("--seed", ver_seed);

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force semantic counts and minimum sizes");
  orc->require_subcommand(1);
  std::string orc_model = "bp";
  bool huge = false;
  orc->add_option("--model", orc_model, "nbp | pbp | bp | bf")
      ->check(CLI::IsMember({"nbp", "pbp", "bp", "bf"}));
  orc->add_flag("--i-know-this-is-huge", huge, "Lift the enumeration budget");
  auto* orc_count = orc->add_subcommand("count", "Number of n-ary functions of size <= s");
  unsigned count_n = 0, count_s = 0;
  orc_count->add_option("n", count_n)->required();
  orc_count->add_option("s", count_s)->required();
  auto* orc_min = orc->add_subcommand("minsize", "Least size computing a function");
  std::string min_fn;
  unsigned min_smax = 0;
  bool min_smax_set = false;
  orc_min->add_option("function", min_fn)->required();
  orc_min->add_option("--s-max", min_smax)->each([&](const std::string&) { min_smax_set = true; });

  // caps
  auto* caps = app.add_subcommand("caps", "Bounding functions, caps and Xi_LNBP at given points");
  std::vector<double> caps_log2m{4, 16, 64};
  std::vector<unsigned> caps_delta{0, 1, 2, 3};
  std::vector<double> caps_xi;
  caps->add_option("--log2m", caps_log2m, "Values of log2 m");
  caps->add_option("--delta", caps_delta);
  caps->add_option("--xi", caps_xi, "Points x at which to evaluate Xi_LNBP");

  // selftest
  auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
  std::vector<int> self_ids;
  self->add_option("--criterion", self_ids, "Only these criteria")
      ->check(CLI::Range(1, necip::acceptance::kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (table_flag) out.json = false;

  try {
    if (*bound) {
      const auto f = necip::io::parse_function_spec(bound_fn);
      const auto b = necip::BoundingFunction::parse(bound_b);
      necip::Partition part;
      if (!bound_partition.empty())
        part = necip::Partition::parse(f.arity(), bound_partition);
      else if (!bound_search.empty())
        part = necip::best_partition(f, b,
                                     bound_search == "exact" ? necip::SearchMode::Exact
                                                             : necip::SearchMode::Greedy,
                                     bound_simple)
                   .partition;
      else if (bound_canonical)
        part = f.canonical_partition();
      else
        throw std::invalid_argument("bound needs --partition, --canonical or --search");
      const auto rep = necip::neciporuk_bound(f, part, b, bound_simple);
      out.emit(necip::io::to_json(rep), report_table(rep));
      return kExitOk;
    }

    if (*search) {
      const auto f = necip::io::parse_function_spec(search_fn);
      const auto b = necip::BoundingFunction::parse(search_b);
      const auto res = necip::best_partition(
          f, b, search_mode == "exact" ? necip::SearchMode::Exact : necip::SearchMode::Greedy,
          search_simple);
      Json j{{"function", f.name()},
             {"bounding_function", b.name()},
             {"mode", search_mode},
             {"partition", res.partition.to_string()},
             {"blocks", necip::io::to_json(res.partition)},
             {"total", res.total},
             {"evaluated", res.partitions_visited}};
      std::ostringstream t;
      t << "function    " << f.name() << "\nb           " << b.name() << "\nmode        "
        << search_mode << "\npartition   " << res.partition.to_string() << "\ntotal       "
        << res.total << "\nevaluated   " << res.partitions_visited << "\n";
      out.emit(j, t.str());
      return kExitOk;
    }

    if (*cons) {
      const Construction c = construct(cons_family, cons_args);
      necip::Verdict v;
      Json object;
      if (c.program) {
        v = necip::verify(*c.program, c.semantics, c.target, cons_samples, cons_seed);
        object = necip::io::to_json(*c.program, c.semantics);
      } else {
        v = necip::verify(*c.formula, c.target, cons_samples, cons_seed);
        object = necip::io::to_json(*c.formula);
      }
      const Json cert = certificate(c, v);
      if (!cons_out.empty()) {
        write_file(cons_out, necip::io::dump(object));
        write_file(cons_out + ".cert.json", necip::io::dump(cert));
        out.emit(cert, certificate_table(cert));
      } else {
        out.emit(Json{{"object", object}, {"certificate", cert}},
                 necip::io::dump(object) + certificate_table(cert));
      }
      const bool ok = v.equivalent && (!c.bound || c.bound->within);
      return ok ? kExitOk : kExitVerification;
    }

    if (*ver) {
      const auto f = necip::io::parse_function_spec(ver_fn);
      Json doc = necip::io::read_json_file(ver_file);
      if (doc.contains("object")) doc = doc["object"];
      Json result{{"function", f.name()}};
      bool ok = false;
      try {
        necip::Verdict v;
        if (doc.contains("root")) {
          const auto phi = necip::io::formula_from_json(doc);
          v = necip::verify(phi, f, ver_samples, ver_seed);
          result["kind"] = "formula";
          result["size"] = phi.size();
          ok = v.equivalent;
        } else {
          const auto p = necip::io::program_from_json(doc);
          const auto sem = necip::io::semantics_from_json(doc);
          const auto problems = necip::validate(p, sem);
          result["kind"] = "program";
          result["semantics"] = sem.name();
          result["size"] = p.size();
          result["diagnostics"] = problems;
          if (problems.empty()) {
            v = necip::verify(p, sem, f, ver_samples, ver_seed);
            ok = v.equivalent;
          }
        }
        result["verified"] = result.value("diagnostics", Json::array()).empty() ? v.mode() : "skipped";
        result["inputs_checked"] = v.checked;
        result["equivalent"] = ok;
        if (!v.counterexample.empty()) result["counterexample"] = v.counterexample;
      } catch (const std::exception& e) {
        // A file that does not describe a well-formed object fails verification.
        result["equivalent"] = false;
        result["error"] = e.what();
      }
      out.emit(result, certificate_table(result));
      return ok ? kExitOk : kExitVerification;
    }

    if (*orc) {
      const auto model = necip::oracle::parse_model(orc_model);
      if (*orc_count) {
        const auto c = necip::oracle::enumerate_semantic(count_n, count_s, model, huge);
        Json j{{"model", orc_model}, {"n", count_n}, {"s", count_s}, {"count", c}};
        out.emit(j, orc_model + " functions of " + std::to_string(count_n) + " variables with size <= " +
                        std::to_string(count_s) + ": " + std::to_string(c) + "\n");
      } else {
        const auto f = necip::io::parse_function_spec(min_fn).to_table();
        const unsigned s_max = min_smax_set ? min_smax : necip::oracle::default_budget(model).max_s;
        const auto m = necip::oracle::min_size(f, model, s_max, huge);
        Json j{{"model", orc_model}, {"function", f.to_hex()}, {"arity", f.arity()}, {"s_max", s_max}};
        if (m)
          j["min_size"] = *m;
        else
          j["min_size"] = nullptr;
        out.emit(j, "minimum " + orc_model + " size: " +
                        (m ? std::to_string(*m) : "exceeds " + std::to_string(s_max)) + "\n");
      }
      return kExitOk;
    }

    if (*caps) {
      Json rows = Json::array();
      std::ostringstream t;
      t << std::left << std::setw(10) << "log2 m" << std::setw(7) << "delta" << std::setw(8)
        << "simple" << std::setw(6) << "bp" << std::setw(8) << "lnbp" << std::setw(8) << "lnbf"
        << std::setw(14) << "cap simple" << std::setw(14) << "cap lnbp" << "cap lnbf\n";
      for (double lg : caps_log2m) {
        for (unsigned d : caps_delta) {
          const double llg = lg > 0 ? std::log2(lg) : 0;
          const auto simple = necip::b_simple_nbp_log(lg);
          const auto bp = necip::b_bp_log(lg);
          const auto lnbp = necip::b_lnbp_log(d, lg);
          const auto lnbf = necip::b_lnbf_log(d, lg);
          const double cap_simple = 8 * std::sqrt(2.0) * std::sqrt(lg);
          const double cap_lnbp = lg >= 2 ? 52 * necip::h_lnbp_log(d, lg) : 0;
          const double cap_lnbf = 60 * std::max(lg / std::ldexp(1.0, static_cast<int>(d)), llg);
          rows.push_back(Json{{"log2m", lg},
                              {"delta", d},
                              {"b_simple_nbp", simple},
                              {"b_bp", bp},
                              {"b_lnbp", lnbp},
                              {"b_lnbf", lnbf},
                              {"cap_simple_nbp", cap_simple},
                              {"cap_lnbp", cap_lnbp},
                              {"cap_lnbf", cap_lnbf}});
          t << std::setw(10) << fixed(lg, 2) << std::setw(7) << d << std::setw(8) << simple
            << std::setw(6) << bp << std::setw(8) << lnbp << std::setw(8) << lnbf << std::setw(14)
            << fixed(cap_simple, 2) << std::setw(14) << fixed(cap_lnbp, 2) << fixed(cap_lnbf, 2)
            << "\n";
        }
      }
      Json xi = Json::array();
      for (double x : caps_xi) {
        for (unsigned d : caps_delta) {
          const double v = necip::xi_lnbp(x, d);
          xi.push_back(Json{{"x", x}, {"delta", d}, {"xi", v}});
          t << "Xi_LNBP(" << fixed(x, 2) << ", " << d << ") = " << fixed(v) << "\n";
        }
      }
      out.emit(Json{{"points", rows}, {"xi", xi}}, t.str());
      return kExitOk;
    }

    if (*self) {
      if (self_ids.empty())
        for (int i = 1; i <= necip::acceptance::kCriterionCount; ++i) self_ids.push_back(i);
      Json rows = Json::array();
      int failed = 0;
      for (int id : self_ids) failed += run_and_print(id, out.json, rows).passed ? 0 : 1;
      if (out.json)
        std::cout << necip::io::dump(Json{{"criteria", rows}, {"failed", failed}});
      else
        std::cout << self_ids.size() - failed << "/" << self_ids.size() << " criteria passed\n";
      return failed == 0 ? kExitOk : kExitVerification;
    }
  } catch (const necip::BudgetExceeded& e) {
    std::cerr << "necip: budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "necip: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "necip: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "necip: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
