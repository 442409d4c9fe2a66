#include "mumhodge_cli/document.hpp"

#include <fstream>
#include <sstream>

namespace mumhodge::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::parse, what); }

const json& member(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) fail("missing field '" + key + "'");
  return j.at(key);
}

std::string text(const json& j, const std::string& what) {
  if (!j.is_string()) fail(what + " must be a string");
  return j.get<std::string>();
}

Rational rational(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(BigInt(j.get<long>()));
  return Rational::parse(text(j, what));
}

BigInt integer(const json& j, const std::string& what) {
  const Rational r = rational(j, what);
  if (!r.is_integer()) fail(what + " must be an integer");
  return r.num();
}

std::size_t power(const std::string& key) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    fail("z-power '" + key + "' is not a non-negative integer");
  return std::stoul(key);
}

}  // namespace

PFOperator OperatorDocument::to_operator() const {
  if (theta_coefficients.empty()) fail("theta_coefficients is empty");
  std::vector<PFOperator::Row> rows(theta_coefficients.rbegin()->first + 1, PFOperator::Row{});
  for (const auto& [j, c] : theta_coefficients)
    for (std::size_t i = 0; i < 5; ++i) rows[j][i] = c[i];
  try {
    return PFOperator(rows);
  } catch (const Error& e) {
    fail(std::string("invalid operator: ") + e.what());
  }
}

OperatorDocument OperatorDocument::from_operator(const std::string& name, const PFOperator& op) {
  OperatorDocument d;
  d.name = name;
  for (std::size_t j = 0; j < op.rows().size(); ++j) {
    std::array<Rational, 5> c;
    bool any = false;
    for (std::size_t i = 0; i < 5; ++i) {
      c[i] = op.rows()[j][i];
      any = any || !c[i].is_zero();
    }
    if (any) d.theta_coefficients[j] = c;
  }
  return d;
}

OperatorDocument OperatorDocument::parse(const json& j) {
  OperatorDocument d;
  d.name = text(member(j, "name"), "name");
  const json& coeffs = member(j, "theta_coefficients");
  if (!coeffs.is_object()) fail("theta_coefficients must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    if (!value.is_array() || value.size() != 5) fail("z^" + key + " needs five theta coefficients");
    std::array<Rational, 5> c;
    for (std::size_t i = 0; i < 5; ++i) c[i] = rational(value[i], "coefficient");
    d.theta_coefficients[power(key)] = c;
  }
  if (j.contains("metadata")) {
    const json& meta = j.at("metadata");
    if (meta.contains("expected_mum"))
      for (const auto& m : meta.at("expected_mum")) d.expected_mum.push_back(text(m, "expected_mum entry"));
    if (meta.contains("mirror_invariants"))
      for (const auto& [loc, mi] : meta.at("mirror_invariants").items()) {
        try {
          d.mirror_invariants.emplace(loc, MirrorInvariants::make(integer(member(mi, "degree"), "degree"),
                                                                  integer(member(mi, "c2H"), "c2H"),
                                                                  integer(member(mi, "chi"), "chi")));
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::parse) throw;
          fail(std::string("invalid mirror invariants: ") + e.what());
        }
      }
  }
  d.to_operator();
  return d;
}

json OperatorDocument::to_json() const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = name;
  json coeffs = json::object();
  for (const auto& [p, c] : theta_coefficients) {
    json row = json::array();
    for (const auto& x : c) row.push_back(x.str());
    coeffs[std::to_string(p)] = row;
  }
  j["theta_coefficients"] = coeffs;
  if (!expected_mum.empty() || !mirror_invariants.empty()) {
    json meta = json::object();
    if (!expected_mum.empty()) meta["expected_mum"] = expected_mum;
    for (const auto& [loc, mi] : mirror_invariants)
      meta["mirror_invariants"][loc] = {{"degree", mi.degree.get_str()}, {"c2H", mi.c2H.get_str()},
                                        {"chi", mi.chi.get_str()}};
    j["metadata"] = meta;
  }
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
}

OperatorDocument read_operator_file(const std::string& path) { return OperatorDocument::parse(read_json_file(path)); }

}  // namespace mumhodge::cli
