#pragma once

// JSON form of IdentityReport (schema: schema/verify_report.schema.json).
//
//   {"id": "T1", "mode": "symbolic", "n_max": 12, "status": "pass",
//    "cases": 91, "probe": false, "bounds": {"r_max": 4},
//    "counterexample": {"params": {"n": 2, "p": 1}, "lhs": "1 + λ", "rhs": "-1 + 2*λ"}}
//
// Integer parameters are JSON numbers; other rationals are "p/q" strings.
// "counterexample" is present iff status is "fail".

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "dstir/identities.hpp"
#include "dstir/rational.hpp"

namespace dstir {

inline nlohmann::ordered_json rational_to_json(const BigRational& r) {
  if (auto i = r.to_int64()) return *i;
  return r.to_string();
}

inline BigRational rational_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return BigRational(j.get<long>());
  if (j.is_string()) {
    if (auto r = BigRational::parse(j.get<std::string>())) return *r;
  }
  throw std::invalid_argument("report json: malformed rational " + j.dump());
}

inline nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["id"] = std::string(to_string(r.id));
  j["mode"] = std::string(to_string(r.mode));
  j["n_max"] = r.n_max;
  j["status"] = r.passed() ? "pass" : "fail";
  j["cases"] = r.cases;
  j["probe"] = r.probe;
  j["bounds"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.bounds) j["bounds"][k] = v;
  if (r.counterexample) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& p : r.counterexample->params) params[p.name] = rational_to_json(p.value);
    j["counterexample"] = {{"params", params}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
  }
  return j;
}

inline IdentityReport report_from_json(const nlohmann::ordered_json& j) {
  IdentityReport r;
  auto id = parse_identity(j.at("id").get<std::string>());
  if (!id) throw std::invalid_argument("report json: unknown id");
  r.id = *id;
  const auto mode = j.at("mode").get<std::string>();
  if (mode != "symbolic" && mode != "sampled") throw std::invalid_argument("report json: unknown mode");
  r.mode = mode == "symbolic" ? ModeKind::Symbolic : ModeKind::Sampled;
  r.n_max = j.at("n_max").get<std::size_t>();
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("report json: unknown status");
  r.status = status == "pass" ? Status::Pass : Status::Fail;
  r.cases = j.value("cases", std::size_t{0});
  r.probe = j.value("probe", false);
  if (j.contains("bounds"))
    for (const auto& [k, v] : j.at("bounds").items()) r.bounds[k] = v.get<long>();
  if (j.contains("counterexample")) {
    const auto& c = j.at("counterexample");
    Counterexample cx;
    for (const auto& [k, v] : c.at("params").items()) cx.params.push_back({k, rational_from_json(v)});
    cx.lhs = c.at("lhs").get<std::string>();
    cx.rhs = c.at("rhs").get<std::string>();
    r.counterexample = std::move(cx);
  }
  if ((r.status == Status::Fail) != r.counterexample.has_value())
    throw std::invalid_argument("report json: counterexample must be present iff status is fail");
  return r;
}

}  // namespace dstir
