#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"
#include "leroy/params.hpp"

namespace leroy::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "leroy-report/1";

/// Doubles go out as strings too, never as JSON numbers.
inline std::string fmt(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

/// Exact decimal string for round-tripping at the value's own precision.
inline std::string exact(const BigReal& v) { return v.to_string(0); }

inline json complex_json(const BigComplex& z) { return json{{"re", exact(z.re())}, {"im", exact(z.im())}}; }

inline json params_json(const Params& p) {
  return json{{"alpha", p.alpha().to_string()}, {"beta", p.beta().to_string()}, {"gamma", p.gamma().to_string()}};
}

}  // namespace leroy::cli
