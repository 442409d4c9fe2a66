#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "mumhodge/bigfloat.hpp"
#include "mumhodge_cli/document.hpp"

namespace mumhodge::cli {

struct Options {
  std::size_t order = 50;
  Precision precision = 128;
  Precision precision_cap = 2048;
  BigInt denominator_bound = 1000000;
  std::optional<std::string> base_point;  // "re,im" as exact rationals
};

// Reads MUMHODGE_PRECISION_CAP when set.
Precision precision_cap_from_env(Precision fallback);

nlohmann::json cmd_analyze(const OperatorDocument& doc, const Options& opt);
nlohmann::json cmd_frobenius(const OperatorDocument& doc, const Options& opt);
nlohmann::json cmd_mirror_map(const OperatorDocument& doc, const Options& opt);
nlohmann::json cmd_monodromy(const OperatorDocument& doc, const Options& opt);
// Operator document, or {"matrix": [[..]]} with an integral symplectic MUM unipotent.
nlohmann::json cmd_normal_form(const nlohmann::json& input, const Options& opt);
// Operator document, or {"records": [..]} with per-MUM records.
nlohmann::json cmd_torelli(const nlohmann::json& input, const Options& opt);

std::string summarize(const nlohmann::json& report);

enum ExitCode { ok = 0, usage = 1, parse_failure = 2, precision_failure = 3, recognition_failure = 4, domain_failure = 5 };
int exit_code(ErrorKind kind);

}  // namespace mumhodge::cli
