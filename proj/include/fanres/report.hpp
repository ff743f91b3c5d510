#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fanres {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }

  void merge(const ValidationReport& other, const std::string& prefix = {}) {
    for (const Check& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
  }

  bool ok() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const Check& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->passed;
  }

  std::vector<const Check*> failures() const {
    std::vector<const Check*> out;
    for (const Check& c : checks)
      if (!c.passed) out.push_back(&c);
    return out;
  }
};

inline nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Check& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"ok", r.ok()}, {"checks", std::move(arr)}};
}

inline std::string to_text(const ValidationReport& r, const std::string& indent = "  ") {
  std::string out;
  for (const Check& c : r.checks) {
    out += indent + (c.passed ? "[ok]   " : "[FAIL] ") + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

}  // namespace fanres
