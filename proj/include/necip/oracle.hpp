#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "necip/truth_table.hpp"

namespace necip::oracle {

enum class Model { NBP, ParityBP, DetBP, BF };

std::string model_name(Model m);
Model parse_model(const std::string& text);

struct Budget {
  unsigned max_n;
  unsigned max_s;
};

// NBP/ParityBP: n <= 2, s <= 3. DetBP and BF: n <= 3, s <= 4.
Budget default_budget(Model m);

// Hard ceiling even with the override (tables are indexed by 2^{2^n} ids).
inline constexpr unsigned kMaxOracleArity = 4;

// For every n-ary function (indexed by its truth table packed as an integer,
// bit i = f at input index i), the least size <= s_max of an object of the
// model computing it, or -1 if none exists within s_max.
std::vector<int> min_size_table(unsigned n, Model model, unsigned s_max,
                                bool allow_huge = false);

// Number of distinct n-ary functions of complexity at most s.
std::uint64_t enumerate_semantic(unsigned n, unsigned s, Model model, bool allow_huge = false);

// nullopt means the minimum exceeds s_max.
std::optional<unsigned> min_size(const TruthTable& f, Model model, unsigned s_max,
                                  bool allow_huge = false);

// The id min_size_table uses for f.
std::uint64_t function_id(const TruthTable& f);

}  // namespace necip::oracle
