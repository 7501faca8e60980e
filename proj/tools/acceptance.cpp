#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "trimod/acceptance.hpp"

// Usage: trimod_acceptance [ID...]
int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  bool all = true;
  for (int id : only.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12} : only) {
    auto results = trimod::run_acceptance({id});
    std::string text = trimod::acceptance_text(results);
    std::cout << text.substr(0, text.find('\n') + 1) << std::flush;
    for (const auto& r : results) all = all && r.passed;
  }
  return all ? 0 : 1;
}
