#ifndef RIGID_REPORT_HPP
#define RIGID_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace rigid {

// ordered_json keeps insertion order, so reports are byte-deterministic.
using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  bool passed;
  Json witness;  // null when there is nothing useful to show
};

/// Machine-readable outcome of one CLI command. The overall status is
/// the conjunction of all checks; elapsed_ms is the only
/// non-deterministic field.
struct VerificationReport {
  std::string command;
  Json parameters = Json::object();
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;

  bool passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }

  void add(std::string name, bool ok, Json witness = nullptr) {
    checks.push_back(CheckResult{std::move(name), ok, std::move(witness)});
  }

  Json to_json() const {
    Json out = Json::object();
    out["schema"] = 1;
    out["command"] = command;
    out["parameters"] = parameters;
    out["passed"] = passed();
    Json checklist = Json::array();
    for (const CheckResult& c : checks) {
      Json item = Json::object();
      item["name"] = c.name;
      item["passed"] = c.passed;
      if (!c.witness.is_null()) item["witness"] = c.witness;
      checklist.push_back(std::move(item));
    }
    out["checks"] = std::move(checklist);
    out["elapsed_ms"] = elapsed_ms;
    return out;
  }

  std::string to_text() const {
    std::string out;
    std::size_t failed = 0;
    for (const CheckResult& c : checks) {
      out += c.passed ? "PASS " : "FAIL ";
      out += c.name;
      if (!c.witness.is_null()) {
        out += "  ";
        out += c.witness.dump();
      }
      out += '\n';
      if (!c.passed) ++failed;
    }
    out += command + ": " + std::to_string(checks.size() - failed) + "/" +
           std::to_string(checks.size()) + " checks passed (" + std::to_string(elapsed_ms) +
           " ms)\n";
    return out;
  }
};

}  // namespace rigid

#endif  // RIGID_REPORT_HPP
