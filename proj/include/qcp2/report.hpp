#pragma once

// Check/report structures shared by all verification suites and the CLI.
// Every row names the mathematical claim it checks via a stable slug
// (the `anchor`), so reports are diffable and traceable.

#include <string>
#include <vector>

#include <json.hpp>

namespace qcp2 {

struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string detail;       // value, residual rendering, ...
  double residual = -1.0;   // negative: not applicable

  static Check ok(std::string name, std::string anchor, std::string detail = "") {
    return {std::move(name), std::move(anchor), true, std::move(detail), -1.0};
  }
  static Check fail(std::string name, std::string anchor, std::string detail = "") {
    return {std::move(name), std::move(anchor), false, std::move(detail), -1.0};
  }
  static Check residual_check(std::string name, std::string anchor, double res, double tol) {
    Check c{std::move(name), std::move(anchor), res < tol, "", res};
    c.detail = "residual=" + std::to_string(res) + " tol=" + std::to_string(tol);
    return c;
  }
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const Report& r) {
    for (auto& c : r.checks) checks.push_back(c);
  }
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["pass"] = all_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : checks) {
      nlohmann::ordered_json row;
      row["name"] = c.name;
      row["anchor"] = c.anchor;
      row["status"] = c.pass ? "pass" : "fail";
      if (c.residual >= 0) row["residual"] = c.residual;
      if (!c.detail.empty()) row["detail"] = c.detail;
      j["checks"].push_back(row);
    }
    return j;
  }

  std::string text() const {
    std::string s = "suite " + suite + "\n";
    for (auto& c : checks)
      s += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.name +
           (c.detail.empty() ? "" : "  (" + c.detail + ")") + "\n";
    s += all_pass() ? "  all checks passed\n" : ("  " + std::to_string(failures()) + " failure(s)\n");
    return s;
  }
};

}  // namespace qcp2
