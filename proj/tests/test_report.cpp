#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "trimod/acceptance.hpp"

using namespace trimod;

TEST_CASE("text and json carry the same verdicts") {
  auto results = run_acceptance({1, 2, 5, 6, 9, 12});
  REQUIRE(results.size() == 6);
  auto doc = nlohmann::json::parse(acceptance_json(results));
  std::istringstream text(acceptance_text(results));
  std::string line;
  std::size_t i = 0;
  for (const auto& c : doc["criteria"]) {
    REQUIRE(std::getline(text, line));
    bool passed = c["passed"];
    CHECK(line.rfind(passed ? "PASS" : "FAIL", 0) == 0);
    CHECK(line.find(" " + c["key"].get<std::string>() + " ") != std::string::npos);
    CHECK(c["id"] == results[i].id);
    CHECK(passed == results[i].passed);
    ++i;
  }
  CHECK(doc["passed"] == true);
}

TEST_CASE("criteria run in identifier order") {
  auto results = run_acceptance({6, 1});
  REQUIRE(results.size() == 2);
  CHECK(results[0].id == 1);
  CHECK(results[0].key == "pointed-example");
  CHECK(results[1].key == "fusion");
}
