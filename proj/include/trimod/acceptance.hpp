#pragma once

#include <string>
#include <vector>

#include "trimod/report.hpp"

namespace trimod {

struct CriterionResult {
  int id = 0;
  std::string key;  // stable identifier, e.g. "antipode"
  std::string title;
  bool passed = false;
  double seconds = 0;
  std::string detail;
  Report report;
};

// Runs the acceptance criteria in identifier order; an empty selection runs
// all twelve.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {});

std::string acceptance_text(const std::vector<CriterionResult>& results);
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace trimod
