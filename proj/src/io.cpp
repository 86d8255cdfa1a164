#include "necip/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace necip::io {

Json to_json(const TruthTable& t) { return Json{{"arity", t.arity()}, {"bits_hex", t.to_hex()}}; }

TruthTable truth_table_from_json(const Json& j) {
  return TruthTable::from_hex(j.at("arity").get<unsigned>(), j.at("bits_hex").get<std::string>());
}

Json to_json(const BranchingProgram& p, const Semantics& sem) {
  Json j;
  j["inputs"] = p.inputs();
  Json guesses = Json::array();
  for (unsigned i = 0; i < p.guesses(); ++i) guesses.push_back(p.inputs() + i + 1);
  j["guess_vars"] = guesses;
  j["vertices"] = p.vertex_count();
  j["s"] = p.start();
  j["t0"] = p.sink0();
  j["t1"] = p.sink1();
  for (int label = 0; label < 2; ++label) {
    Json arcs = Json::array();
    for (const auto& a : p.arcs(label != 0)) arcs.push_back(Json::array({a.from, a.to}));
    j[label ? "a1" : "a0"] = arcs;
  }
  Json var = Json::array();
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    if (!p.is_sink(v)) var.push_back(Json::array({v, p.var(v) + 1}));
  j["var"] = var;
  j["semantics"] = sem.name();
  return j;
}

Semantics semantics_from_json(const Json& j) {
  if (!j.contains("semantics")) return Semantics::existential();
  return Semantics::parse(j.at("semantics").get<std::string>());
}

BranchingProgram program_from_json(const Json& j) {
  const unsigned inputs = j.at("inputs").get<unsigned>();
  const unsigned guesses =
      j.contains("guess_vars") ? static_cast<unsigned>(j.at("guess_vars").size()) : 0;
  if (j.contains("guess_vars")) {
    for (std::size_t i = 0; i < guesses; ++i)
      if (j["guess_vars"][i].get<unsigned>() != inputs + i + 1)
        throw std::invalid_argument("guess_vars must be n+1..n+delta");
  }
  const std::size_t count = j.at("vertices").get<std::size_t>();
  std::vector<BranchingProgram::Arc> arcs[2];
  for (int label = 0; label < 2; ++label)
    for (const auto& a : j.at(label ? "a1" : "a0"))
      arcs[label].push_back({a.at(0).get<VertexId>(), a.at(1).get<VertexId>()});
  std::vector<int> var(count, BranchingProgram::kNoVar);
  for (const auto& e : j.at("var")) {
    const auto v = e.at(0).get<std::size_t>();
    const int x = e.at(1).get<int>();
    if (v >= count) throw std::invalid_argument("var entry for unknown vertex");
    if (x < 1) throw std::invalid_argument("variables are numbered from 1");
    var[v] = x - 1;
  }
  return BranchingProgram(inputs, guesses, count, j.at("s").get<VertexId>(),
                          j.at("t0").get<VertexId>(), j.at("t1").get<VertexId>(),
                          std::move(arcs[0]), std::move(arcs[1]), std::move(var));
}

namespace {

Json node_json(const Formula& f, std::uint32_t i) {
  const auto& n = f.nodes()[i];
  switch (n.kind) {
    case Formula::Kind::Const: return Json{{"const", n.value ? 1 : 0}};
    case Formula::Kind::Literal: {
      const int v = static_cast<int>(n.var) + 1;
      return Json{{"lit", n.value ? v : -v}};
    }
    case Formula::Kind::Gate:
      return Json{{"gate", n.gate}, {"l", node_json(f, n.left)}, {"r", node_json(f, n.right)}};
  }
  return {};
}

FormulaBuilder::Ref parse_node(FormulaBuilder& b, const Json& j) {
  if (j.contains("const")) return b.constant(j["const"].get<int>() != 0);
  if (j.contains("lit")) {
    const int v = j["lit"].get<int>();
    if (v == 0) throw std::invalid_argument("literal 0 is not a variable");
    return b.literal(static_cast<unsigned>(std::abs(v) - 1), v > 0);
  }
  const unsigned g = j.at("gate").get<unsigned>();
  if (g > 15) throw std::invalid_argument("gate index out of range");
  const auto l = parse_node(b, j.at("l"));
  const auto r = parse_node(b, j.at("r"));
  return b.gate(g, l, r);
}

}  // namespace

Json to_json(const Formula& f) {
  return Json{{"arity", f.inputs()}, {"delta", f.guesses()}, {"root", node_json(f, f.root())}};
}

Formula formula_from_json(const Json& j) {
  FormulaBuilder b(j.at("arity").get<unsigned>(), j.value("delta", 0u));
  const auto root = parse_node(b, j.at("root"));
  return std::move(b).finish(root);
}

Json to_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& block : p.blocks()) {
    Json b = Json::array();
    for (unsigned i : block) b.push_back(i + 1);
    blocks.push_back(b);
  }
  return blocks;
}

Json to_json(const BoundReport& r) {
  return Json{{"function", r.function},
              {"partition", r.partition.to_string()},
              {"blocks", to_json(r.partition)},
              {"r", r.r},
              {"b", r.b},
              {"cost", r.cost},
              {"total", r.total},
              {"bounding_function", r.bounding_function},
              {"simple_method", r.simple_method}};
}

namespace {

std::vector<unsigned> numbers(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

}  // namespace

FunctionSpec parse_function_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("function spec needs the form kind:params, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  try {
    if (kind == "ed" || kind == "isa") {
      const auto v = numbers(rest);
      if (v.size() != 2) throw std::invalid_argument("expected two parameters");
      return kind == "ed" ? FunctionSpec::ed(v[0], v[1]) : FunctionSpec::isa(v[0], v[1]);
    }
    if (kind == "isan") {
      const auto v = numbers(rest);
      if (v.size() != 1) throw std::invalid_argument("expected one parameter");
      return FunctionSpec::isa_family(v[0]);
    }
    if (kind == "table") return FunctionSpec::table(truth_table_from_json(read_json_file(rest)));
    if (kind == "hex") {
      const auto c = rest.find(':');
      if (c == std::string::npos) throw std::invalid_argument("expected hex:<n>:<digits>");
      return FunctionSpec::table(
          TruthTable::from_hex(static_cast<unsigned>(std::stoul(rest.substr(0, c))),
                               rest.substr(c + 1)));
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bad function spec '" + text + "': " + e.what());
  }
  throw std::invalid_argument("unknown function kind '" + kind + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace necip::io
