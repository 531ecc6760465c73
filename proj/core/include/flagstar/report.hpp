#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace flagstar {

/// Outcome of one named check. A failing check carries the first
/// counterexample found, as ordered key/value pairs.
struct CheckResult {
  std::string name;
  std::string axiom;  // "(v)" style label, empty when not an axiom
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::pair<std::string, std::string>> counterexample;
  std::string note;
  double elapsed_seconds = 0.0;

  void fail(std::vector<std::pair<std::string, std::string>> payload) {
    if (passed) counterexample = std::move(payload);
    passed = false;
  }
};

struct Report {
  int n = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

/// Runs body(result) and records its wall time.
template <class Body>
CheckResult timed_check(std::string name, std::string axiom, Body&& body) {
  CheckResult result;
  result.name = std::move(name);
  result.axiom = std::move(axiom);
  const auto start = std::chrono::steady_clock::now();
  body(result);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace flagstar
