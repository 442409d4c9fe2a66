#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mumhodge/lmhs.hpp"
#include "mumhodge/picard_fuchs.hpp"

namespace mumhodge::cli {

inline constexpr int kSchemaVersion = 1;

// Operator file: theta_coefficients maps a z-power to five exact rational
// strings, the coefficients of theta^0 .. theta^4.
struct OperatorDocument {
  std::string name;
  std::map<std::size_t, std::array<Rational, 5>> theta_coefficients;
  std::vector<std::string> expected_mum;                      // "0", "infinity", ...
  std::map<std::string, MirrorInvariants> mirror_invariants;  // keyed by location

  PFOperator to_operator() const;
  static OperatorDocument from_operator(const std::string& name, const PFOperator& op);

  static OperatorDocument parse(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

nlohmann::json read_json_file(const std::string& path);
OperatorDocument read_operator_file(const std::string& path);

}  // namespace mumhodge::cli
