#pragma once

#include <string>

#include "json.hpp"
#include "necip/families.hpp"
#include "necip/formula.hpp"
#include "necip/neciporuk.hpp"
#include "necip/program.hpp"
#include "necip/truth_table.hpp"

namespace necip::io {

using Json = nlohmann::json;

// {"arity": n, "bits_hex": "..."}
Json to_json(const TruthTable& t);
TruthTable truth_table_from_json(const Json& j);

// {"inputs", "guess_vars", "vertices", "s", "t0", "t1", "a0", "a1", "var",
//  "semantics"}; variables are 1-based, arcs are [from, to] pairs.
Json to_json(const BranchingProgram& p, const Semantics& sem);
BranchingProgram program_from_json(const Json& j);
Semantics semantics_from_json(const Json& j);

// {"arity", "delta", "root"} with nodes {"gate","l","r"}, {"lit": +-i},
// {"const": 0|1}.
Json to_json(const Formula& f);
Formula formula_from_json(const Json& j);

Json to_json(const Partition& p);
Json to_json(const BoundReport& r);

// ed:N,m | isa:k,l | isan:n | table:<path to truth-table JSON> | hex:<n>:<hex>
FunctionSpec parse_function_spec(const std::string& text);

Json read_json_file(const std::string& path);
// Two-space indented, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace necip::io
