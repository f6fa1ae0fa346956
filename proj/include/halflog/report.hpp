#pragma once

#include <json.hpp>

#include <string>

namespace halflog {

/// Outcome of one executable identity check.  A failing report always
/// carries a witness.
struct CheckReport {
  std::string name;
  nlohmann::json config = nlohmann::json::object();
  bool passed = true;
  nlohmann::json witness;  // null when passed

  static CheckReport pass(std::string name, nlohmann::json config) {
    return {std::move(name), std::move(config), true, nullptr};
  }
  static CheckReport failure(std::string name, nlohmann::json config, nlohmann::json witness) {
    return {std::move(name), std::move(config), false, std::move(witness)};
  }
};

inline void to_json(nlohmann::json& j, const CheckReport& r) {
  j = {{"name", r.name}, {"config", r.config}, {"status", r.passed ? "pass" : "fail"}};
  if (!r.passed) j["witness"] = r.witness;
}

inline void from_json(const nlohmann::json& j, CheckReport& r) {
  r.name = j.at("name").get<std::string>();
  r.config = j.at("config");
  r.passed = j.at("status").get<std::string>() == "pass";
  r.witness = j.contains("witness") ? j.at("witness") : nlohmann::json();
}

}  // namespace halflog
