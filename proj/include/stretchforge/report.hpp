#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace stretchforge {

inline constexpr const char* kToolVersion =
#ifdef STRETCHFORGE_VERSION
    STRETCHFORGE_VERSION;
#else
    "0.1.0";
#endif

enum class CheckStatus { pass, fail, inconclusive };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "fail";
}

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  nlohmann::json details = nlohmann::json::object();
};

/// Machine-readable result of one verification command. JSON is the
/// canonical form; the text rendering carries the same content.
struct CheckReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<CheckItem> checks;
  std::string tool_version = kToolVersion;

  void add(std::string name, bool passed,
           nlohmann::json details = nlohmann::json::object()) {
    checks.push_back({std::move(name),
                      passed ? CheckStatus::pass : CheckStatus::fail,
                      std::move(details)});
  }

  void add_status(std::string name, CheckStatus status,
                  nlohmann::json details = nlohmann::json::object()) {
    checks.push_back({std::move(name), status, std::move(details)});
  }

  void absorb(const CheckReport& sub, const std::string& prefix) {
    for (const auto& item : sub.checks)
      checks.push_back({prefix + item.name, item.status, item.details});
  }

  bool any_failed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return true;
    return false;
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status != CheckStatus::pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& c : checks)
      items.push_back({{"name", c.name},
                       {"status", to_string(c.status)},
                       {"details", c.details}});
    return {{"command", command},
            {"inputs", inputs},
            {"checks", items},
            {"tool_version", tool_version}};
  }

  std::string to_text() const {
    std::string out = "# " + command + " (v" + tool_version + ")\n";
    out += "inputs: " + inputs.dump() + "\n";
    for (const auto& c : checks) {
      out += "[" + to_string(c.status) + "] " + c.name;
      if (!c.details.empty()) out += "  " + c.details.dump();
      out += "\n";
    }
    out += any_failed() ? "result: FAIL\n" : "result: OK\n";
    return out;
  }
};

/// Structural validation mirroring report.schema.json; returns problems,
/// empty when the document conforms.
inline std::vector<std::string> validate_report_json(const nlohmann::json& j) {
  std::vector<std::string> problems;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
  };
  require(j.is_object(), "report must be an object");
  if (!j.is_object()) return problems;
  for (const char* key : {"command", "inputs", "checks", "tool_version"})
    require(j.contains(key), std::string("missing field: ") + key);
  if (j.contains("command"))
    require(j["command"].is_string(), "command must be a string");
  if (j.contains("tool_version"))
    require(j["tool_version"].is_string(), "tool_version must be a string");
  if (j.contains("inputs"))
    require(j["inputs"].is_object(), "inputs must be an object");
  if (j.contains("checks")) {
    require(j["checks"].is_array(), "checks must be an array");
    if (j["checks"].is_array()) {
      for (const auto& c : j["checks"]) {
        require(c.is_object(), "check must be an object");
        if (!c.is_object()) continue;
        require(c.contains("name") && c["name"].is_string(),
                "check.name must be a string");
        require(c.contains("details") && c["details"].is_object(),
                "check.details must be an object");
        const bool status_ok =
            c.contains("status") && c["status"].is_string() &&
            (c["status"] == "pass" || c["status"] == "fail" ||
             c["status"] == "inconclusive");
        require(status_ok, "check.status must be pass|fail|inconclusive");
      }
    }
  }
  return problems;
}

}  // namespace stretchforge
