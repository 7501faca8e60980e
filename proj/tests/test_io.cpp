#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>

#include "trimod/fixtures.hpp"
#include "trimod/io.hpp"
#include "trimod/monad.hpp"
#include "trimod/trimodule.hpp"

using namespace trimod;

namespace {

std::vector<Structure> samples(const BaseFixture& f) {
  std::vector<Structure> out;
  out.emplace_back(*f.base);
  for (const auto& m : f.pool) out.emplace_back(m);
  out.emplace_back(regular_right(f.base));
  out.emplace_back(regular_bicomodule(f.base));
  out.emplace_back(regular_trimodule(f.base));
  AlgebraPtr bb = share(b_dot_b(f.base));
  out.emplace_back(*bb);
  out.emplace_back(free_module(bb, f.pool.front()));
  out.emplace_back(free_contramodule(bb, f.pool.front()));
  return out;
}

std::string expect_kind(const std::string& bytes) {
  try {
    parse(bytes);
  } catch (const Error& e) {
    return e.kind();
  }
  return "none";
}

std::string edited(const Structure& s, const std::function<void(nlohmann::json&)>& edit) {
  auto j = nlohmann::json::parse(serialize(s));
  edit(j);
  return j.dump(2) + "\n";
}

}  // namespace

TEST_CASE("round trip is byte identical") {
  std::set<std::string> kinds;
  for (const auto& f : fixture_bases()) {
    for (const auto& s : samples(f)) {
      std::string once = serialize(s);
      Structure back = parse(once);
      CHECK(structure_kind(back) == structure_kind(s));
      CHECK_MESSAGE(serialize(back) == once, f.name << " " << structure_kind(s));
      kinds.insert(structure_kind(s));
    }
  }
  auto ks = fixture_base("k[S]");
  TrimoduleAlgebraFD x = reconstruct_pointed(ks.base, example_monoid(), {1, 0});
  std::string once = serialize(x);
  CHECK(serialize(parse(once)) == once);
  CHECK(kinds.size() == 8);

  auto f5 = fixture_base("k[Z/2]", Field::prime(5));
  std::string p = serialize(regular_trimodule(f5.base));
  CHECK(serialize(parse(p)) == p);
  CHECK(nlohmann::json::parse(p)["field"]["characteristic"] == 5);
}

TEST_CASE("parsed structures validate") {
  auto f = fixture_base("H4");
  auto t = std::get<HopfTrimoduleFD>(parse(serialize(regular_trimodule(f.base))));
  CHECK(validate_trimodule(t).ok());
  auto a = std::get<TrimoduleAlgebraFD>(parse(serialize(b_dot_b(f.base))));
  CHECK(validate_trimodule_algebra(a).ok());
}

TEST_CASE("scalars must be canonical") {
  auto f = fixture_base("k[Z/2]");
  std::string good = serialize(*f.base);
  std::string bad = edited(*f.base, [](nlohmann::json& j) { j["payload"]["mul"]["entries"][0][0] = "2/2"; });
  CHECK(expect_kind(good) == "none");
  CHECK(expect_kind(bad) == "non-canonical-scalar");
  std::string half = edited(*f.base, [](nlohmann::json& j) { j["payload"]["mul"]["entries"][0][0] = "2/4"; });
  CHECK(expect_kind(half) == "non-canonical-scalar");
  try {
    parse(half);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/payload/mul/entries/0/0") != std::string::npos);
  }
}

TEST_CASE("base references are checked") {
  auto f = fixture_base("k[Z/2]");
  auto m = regular_left(f.base);
  auto j = nlohmann::json::parse(serialize(m));
  CHECK(j["base-ref"] == base_ref(*f.base));
  CHECK(j["base-ref"].get<std::string>().size() == 64);
  std::string tampered = edited(m, [](nlohmann::json& x) {
    std::string h = x["base-ref"];
    h[0] = h[0] == '0' ? '1' : '0';
    x["base-ref"] = h;
  });
  CHECK(expect_kind(tampered) == "dangling-base-ref");
  std::string swapped = edited(m, [](nlohmann::json& x) { x["payload"]["coaction"]["entries"][0][0] = "0"; });
  CHECK(expect_kind(swapped) == "none");
  std::string rebased =
      edited(m, [](nlohmann::json& x) { x["base"]["unit"]["entries"][0][0] = "3"; });
  CHECK(expect_kind(rebased) == "dangling-base-ref");
}

TEST_CASE("malformed input") {
  auto f = fixture_base("k");
  CHECK(expect_kind("{\"kind\": ") == "malformed-syntax");
  CHECK(expect_kind("[]") == "schema");
  CHECK(expect_kind(edited(*f.base, [](nlohmann::json& j) { j["kind"] = "groupoid"; })) == "unknown-kind");
  CHECK(expect_kind(edited(*f.base, [](nlohmann::json& j) { j["schema-version"] = "9"; })) == "unsupported-schema");
  CHECK(expect_kind(edited(*f.base, [](nlohmann::json& j) { j["payload"].erase("mul"); })) == "schema");
  CHECK(expect_kind(edited(*f.base, [](nlohmann::json& j) { j["payload"]["dim"] = 3; })) == "schema");
}

TEST_CASE("prime fields reject non-residues") {
  auto f5 = fixture_base("k[Z/2]", Field::prime(5));
  std::string bad = edited(*f5.base, [](nlohmann::json& j) { j["payload"]["mul"]["entries"][0][0] = "7"; });
  CHECK(expect_kind(bad) == "non-canonical-scalar");
}

TEST_CASE("committed files are canonical") {
  std::size_t seen = 0;
  for (const char* dir : {"/tests/data", "/tests/golden"}) {
    for (const auto& entry : std::filesystem::directory_iterator(std::string(TRIMOD_SOURCE_DIR) + dir)) {
      std::string name = entry.path().filename().string();
      if (name == "monoid_s.json" || name == "bad_scalar.json") continue;
      std::string bytes = read_file(entry.path().string());
      CHECK_MESSAGE(serialize(parse(bytes)) == bytes, name);
      ++seen;
    }
  }
  CHECK(seen >= 17);
  CHECK(expect_kind(read_file(std::string(TRIMOD_SOURCE_DIR) + "/tests/data/bad_scalar.json")) == "non-canonical-scalar");
}
