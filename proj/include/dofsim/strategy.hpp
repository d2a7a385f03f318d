#pragma once

#include <stdexcept>
#include <string>

#include "dofsim/assignment.hpp"

namespace dofsim {

struct StrategyParseError : std::runtime_error {
  explicit StrategyParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parsed strategy configuration:
//   {"type":"ternary","s":[2,1,0]}
//   {"type":"theorem4"} | {"type":"theorem5"}
//   {"type":"fraction","f":0.5}        (f may also be given as [num,den])
//   {"type":"explicit","sets":[[1],[1,2],...]}
struct StrategySpec {
  enum class Kind { Ternary, Theorem4, Theorem5, FractionFamily, Explicit };
  Kind kind = Kind::Theorem5;
  TernaryString ternary;
  Fraction f{0, 1};
  MessageAssignment explicit_sets;  // K fixed by the config

  std::string label() const;
};

// Throws StrategyParseError naming the offending field.
StrategySpec parse_strategy_json(const std::string& text);

// Instantiate for a K-user network. For explicit configs K must match.
MessageAssignment build_assignment(const StrategySpec& spec, int K);

// Best small-denominator rational for a grid value like 0.37.
Fraction rationalize(double f);

}  // namespace dofsim
