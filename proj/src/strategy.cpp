#include "dofsim/strategy.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace dofsim {

using nlohmann::json;

std::string StrategySpec::label() const {
  switch (kind) {
    case Kind::Theorem4:
      return "theorem4";
    case Kind::Theorem5:
      return "theorem5";
    case Kind::FractionFamily: {
      std::ostringstream os;
      os << "fraction(" << f.num << "/" << f.den << ")";
      return os.str();
    }
    case Kind::Explicit:
      return "explicit";
    case Kind::Ternary: {
      std::ostringstream os;
      os << "ternary(";
      for (size_t k = 0; k < ternary.s.size(); ++k) os << (k ? "," : "") << ternary.s[k];
      os << ")";
      return os.str();
    }
  }
  return "?";
}

Fraction rationalize(double f) {
  if (f < 0.0 || f > 1.0) throw StrategyParseError("field 'f' must lie in [0,1]");
  // Exact grid values are the common case.
  for (int64_t den : {1LL, 2LL, 4LL, 5LL, 10LL, 20LL, 25LL, 50LL, 100LL, 1000LL, 10000LL}) {
    const double scaled = f * static_cast<double>(den);
    const double r = std::round(scaled);
    if (std::abs(scaled - r) < 1e-9) return Fraction{static_cast<int64_t>(r), den};
  }
  // Continued-fraction fallback.
  int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = f;
  for (int it = 0; it < 30; ++it) {
    const double a = std::floor(x);
    const int64_t ai = static_cast<int64_t>(a);
    const int64_t p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > 1000000) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = x - a;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }
  return Fraction{p1, q1};
}

StrategySpec parse_strategy_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StrategyParseError(std::string("strategy is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw StrategyParseError("strategy must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string())
    throw StrategyParseError("field 'type' is missing or not a string");
  const std::string type = j["type"].get<std::string>();

  StrategySpec spec;
  if (type == "theorem4") {
    spec.kind = StrategySpec::Kind::Theorem4;
  } else if (type == "theorem5") {
    spec.kind = StrategySpec::Kind::Theorem5;
  } else if (type == "ternary") {
    spec.kind = StrategySpec::Kind::Ternary;
    if (!j.contains("s") || !j["s"].is_array())
      throw StrategyParseError("field 's' is missing or not an array");
    for (const auto& e : j["s"]) {
      if (!e.is_number_integer()) throw StrategyParseError("field 's' must hold integers");
      const int v = e.get<int>();
      if (v < 0 || v > 2) throw StrategyParseError("field 's' entries must be 0, 1 or 2");
      spec.ternary.s.push_back(v);
    }
    if (spec.ternary.s.empty()) throw StrategyParseError("field 's' must not be empty");
  } else if (type == "fraction") {
    spec.kind = StrategySpec::Kind::FractionFamily;
    if (!j.contains("f")) throw StrategyParseError("field 'f' is missing");
    const auto& jf = j["f"];
    if (jf.is_number()) {
      spec.f = rationalize(jf.get<double>());
    } else if (jf.is_array() && jf.size() == 2 && jf[0].is_number_integer() &&
               jf[1].is_number_integer()) {
      spec.f = Fraction{jf[0].get<int64_t>(), jf[1].get<int64_t>()};
      if (spec.f.den <= 0 || spec.f.num < 0 || spec.f.num > spec.f.den)
        throw StrategyParseError("field 'f' must lie in [0,1]");
    } else {
      throw StrategyParseError("field 'f' must be a number or [num,den]");
    }
  } else if (type == "explicit") {
    spec.kind = StrategySpec::Kind::Explicit;
    if (!j.contains("sets") || !j["sets"].is_array())
      throw StrategyParseError("field 'sets' is missing or not an array");
    MessageAssignment a;
    a.K = static_cast<int>(j["sets"].size());
    if (a.K < 1) throw StrategyParseError("field 'sets' must not be empty");
    a.sets.assign(a.K + 1, TransmitSet{});
    for (int i = 1; i <= a.K; ++i) {
      const auto& row = j["sets"][i - 1];
      if (!row.is_array() || row.empty())
        throw StrategyParseError("field 'sets' rows must be nonempty arrays");
      if (row.size() > 4) throw StrategyParseError("field 'sets' rows support at most 4 entries");
      for (const auto& e : row) {
        if (!e.is_number_integer())
          throw StrategyParseError("field 'sets' entries must be integers");
        a.sets[i].add(e.get<int>());
      }
    }
    spec.explicit_sets = std::move(a);
  } else {
    throw StrategyParseError("field 'type' must be one of ternary|theorem4|theorem5|fraction|explicit");
  }
  return spec;
}

MessageAssignment build_assignment(const StrategySpec& spec, int K) {
  switch (spec.kind) {
    case StrategySpec::Kind::Theorem4:
      return theorem4_assignment(K);
    case StrategySpec::Kind::Theorem5:
      return theorem5_assignment(K);
    case StrategySpec::Kind::Ternary:
      return expand_ternary(spec.ternary, K);
    case StrategySpec::Kind::FractionFamily:
      return fraction_assignment(spec.f, K);
    case StrategySpec::Kind::Explicit:
      if (spec.explicit_sets.K != K)
        throw StrategyParseError("explicit strategy fixes K=" +
                                 std::to_string(spec.explicit_sets.K));
      return spec.explicit_sets;
  }
  throw StrategyParseError("unknown strategy kind");
}

}  // namespace dofsim
