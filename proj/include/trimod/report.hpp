#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trimod {

// Structured failure. `kind` is a stable machine-readable tag such as
// "shape-mismatch" or "corestriction-failure".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
  }
  bool ok() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
  }
};

}  // namespace trimod
