#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trimod/acceptance.hpp"
#include "trimod/fixtures.hpp"
#include "trimod/io.hpp"
#include "trimod/monad.hpp"

using namespace trimod;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Input problems: unreadable or malformed files, wrong kinds, bad arguments.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format = "text";

json matrix_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().format(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.witness.empty()) item["witness"] = c.witness;
    checks.push_back(item);
  }
  return {{"subject", r.subject}, {"ok", r.ok()}, {"failures", r.failures()}, {"checks", checks}};
}

// Prints a report with optional extra results and returns the exit code.
int emit(const Report& r, const json& extra = json::object()) {
  if (format == "json") {
    json out = report_json(r);
    for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
    std::cout << out.dump(2) << "\n";
  } else {
    if (!r.subject.empty()) std::cout << r.subject << "\n";
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      std::cout << "  " << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << "\n";
    }
    for (const auto& c : r.checks) {
      std::cout << (c.passed ? "  PASS " : "  FAIL ") << c.name;
      if (!c.witness.empty()) std::cout << ": " << c.witness;
      std::cout << "\n";
    }
    std::cout << (r.ok() ? "ok" : "FAILED") << " (" << r.checks.size() - r.failures() << "/" << r.checks.size()
              << " checks passed)\n";
  }
  return r.ok() ? kPass : kFail;
}

Structure load(const std::string& path) {
  std::string bytes;
  try {
    bytes = read_file(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  try {
    return parse(bytes);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class T>
T load_as(const std::string& path, const std::string& want) {
  Structure s = load(path);
  if (!std::holds_alternative<T>(s)) {
    throw InputError(path + ": expected kind " + want + ", found " + structure_kind(s));
  }
  return std::get<T>(std::move(s));
}

std::string output_path(const std::string& path) {
  const char* dir = std::getenv("TRIMOD_OUTPUT_DIR");
  std::filesystem::path p(path);
  if (dir && *dir && p.is_relative()) return (std::filesystem::path(dir) / p).string();
  return path;
}

void save(const std::string& path, const Structure& s) {
  try {
    write_file(output_path(path), serialize(s));
  } catch (const Error& e) {
    if (e.kind() == "io") throw InputError(e.what());
    throw;
  }
}

Report validate_any(const Structure& s) {
  return std::visit(
      [](const auto& x) -> Report {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BialgebraFD>) return validate_bialgebra(x);
        if constexpr (std::is_same_v<T, LeftComoduleFD>) return validate_left_comodule(x);
        if constexpr (std::is_same_v<T, RightComoduleFD>) return validate_right_comodule(x);
        if constexpr (std::is_same_v<T, BicomoduleFD>) return validate_bicomodule(x);
        if constexpr (std::is_same_v<T, HopfTrimoduleFD>) return validate_trimodule(x);
        if constexpr (std::is_same_v<T, TrimoduleAlgebraFD>) return validate_trimodule_algebra(x);
        if constexpr (std::is_same_v<T, TrimoduleModuleFD>) return validate_module(x);
        if constexpr (std::is_same_v<T, ContramoduleFD>) return contramodule_validate(x);
      },
      s);
}

int cmd_validate(const std::string& file) {
  Structure s = load(file);
  Report r = validate_any(s);
  r.subject = structure_kind(s) + " " + file;
  return emit(r);
}

int cmd_antipode(const std::string& file, bool twisted) {
  BialgebraFD b = load_as<BialgebraFD>(file, "bialgebra");
  AntipodeSearch a = twisted ? find_twisted_antipode(b) : find_antipode(b);
  Report r;
  r.subject = std::string(twisted ? "twisted antipode " : "antipode ") + file;
  json extra = {{"rank-coefficients", a.rank_coefficients}, {"rank-augmented", a.rank_augmented},
                {"unknowns", a.unknowns}};
  if (a.antipode) {
    r.add("exists", true);
    extra["antipode"] = matrix_json(*a.antipode);
  } else {
    r.add("exists", false,
          "inconsistent system: rank " + std::to_string(a.rank_coefficients) + " vs augmented rank " +
              std::to_string(a.rank_augmented));
  }
  return emit(r, extra);
}

int cmd_cotensor(const std::string& xf, const std::string& yf, const std::string& out) {
  Structure x = load(xf), y = load(yf);
  Structure result;
  if (std::holds_alternative<HopfTrimoduleFD>(x) && std::holds_alternative<HopfTrimoduleFD>(y)) {
    result = trimodule_cotensor(std::get<HopfTrimoduleFD>(x), std::get<HopfTrimoduleFD>(y));
  } else {
    auto bicomodule_of = [](const Structure& s, const std::string& f) -> BicomoduleFD {
      if (auto* b = std::get_if<BicomoduleFD>(&s)) return *b;
      if (auto* t = std::get_if<HopfTrimoduleFD>(&s)) return t->bicomodule;
      throw InputError(f + ": expected a bicomodule or trimodule, found " + structure_kind(s));
    };
    BicomoduleFD bx = bicomodule_of(x, xf);
    std::string label = bx.label + "□";
    if (auto* m = std::get_if<LeftComoduleFD>(&y)) {
      result = cotensor(bx, *m).as_left(label + m->label);
    } else {
      BicomoduleFD by = bicomodule_of(y, yf);
      result = cotensor(bx, by).as_bicomodule(label + by.label);
    }
  }
  save(out, result);
  Report r = validate_any(result);
  r.subject = structure_kind(result) + " " + output_path(out);
  return emit(r);
}

int cmd_chi(const std::string& tf, const std::string& mf, const std::string& nf) {
  HopfTrimoduleFD x = load_as<HopfTrimoduleFD>(tf, "trimodule");
  LeftComoduleFD m = load_as<LeftComoduleFD>(mf, "comodule-left");
  LeftComoduleFD n = load_as<LeftComoduleFD>(nf, "comodule-left");
  Report r;
  r.subject = "interchange " + x.label() + " at (" + m.label + "," + n.label + ")";
  json extra = json::object();
  try {
    Interchange data = interchange_data(x, m, n);
    r.add("image-containment", true);
    LeftComoduleFD dom = tensor_comodules(m, data.inner.as_left());
    LinearMap lhs = *data.target.left * data.chi;
    LinearMap rhs = tensor_map(LinearMap::identity(x.base()->field, x.base()->dim), data.chi) * dom.coaction;
    r.add("left-colinear", lhs == rhs, lhs == rhs ? std::string() : mismatch_witness(lhs, rhs));
    extra["chi"] = matrix_json(data.chi);
  } catch (const Error& e) {
    if (e.kind() == "base-mismatch" || e.kind() == "shape-mismatch") throw InputError(e.what());
    r.add("image-containment", false, e.what());
  }
  return emit(r, extra);
}

int cmd_bdotb(const std::string& file, const std::string& out) {
  BasePtr base = make_base(load_as<BialgebraFD>(file, "bialgebra"));
  TrimoduleAlgebraFD a = b_dot_b(base);
  save(out, a);
  Report r = validate_trimodule_algebra(a);
  r.subject = "trimodule-algebra " + output_path(out);
  return emit(r);
}

std::vector<int> parse_eps(const std::string& text) {
  std::vector<int> eps;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part != "0" && part != "1") throw InputError("EPS entries are 0 or 1, got \"" + part + "\"");
    eps.push_back(part == "1");
  }
  return eps;
}

int cmd_reconstruct(const std::string& monoid_file, const std::string& eps_text, const std::string& out) {
  json j;
  try {
    j = json::parse(read_file(monoid_file));
  } catch (const std::exception& e) {
    throw InputError(monoid_file + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array()) {
    throw InputError(monoid_file + ": expected {\"elements\": [...], \"table\": [[...]]}");
  }
  MonoidTable table;
  std::vector<std::string> names;
  try {
    table = j["table"].get<MonoidTable>();
    if (j.contains("elements")) names = j["elements"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InputError(monoid_file + ": " + e.what());
  }
  std::vector<int> eps = parse_eps(eps_text);
  if (eps.size() != table.size()) {
    throw InputError("EPS has " + std::to_string(eps.size()) + " entries for " + std::to_string(table.size()) +
                     " monoid elements");
  }
  BasePtr base;
  TrimoduleAlgebraFD a;
  try {
    base = make_base(monoid_bialgebra(Field::rationals(), table, names));
    a = reconstruct_pointed(base, table, eps);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  save(out, a);
  Report r = validate_trimodule_algebra(a);
  r.subject = "trimodule-algebra " + output_path(out);
  return emit(r, {{"dim", a.dim()}});
}

int cmd_linton(const std::string& af, const std::string& vf, const std::string& mf, const std::string& out) {
  AlgebraPtr a = share(load_as<TrimoduleAlgebraFD>(af, "trimodule-algebra"));
  LeftComoduleFD v = load_as<LeftComoduleFD>(vf, "comodule-left");
  MonadInstanceFD t(a);
  Structure ms = load(mf);
  TrimoduleModuleFD m;
  if (auto* c = std::get_if<LeftComoduleFD>(&ms)) {
    m = t.free(*c);
  } else if (auto* mod = std::get_if<TrimoduleModuleFD>(&ms)) {
    m = *mod;
    m.algebra = a;
  } else {
    throw InputError(mf + ": expected comodule-left or module, found " + structure_kind(ms));
  }
  LintonCoequalizer c = linton_coequalizer(t, v, m);
  Report r = validate_module(c.module);
  r.subject = "linton " + v.label + " |> " + m.comodule.label;
  r.add("coequalizes", (c.projection * (c.first - c.second)).is_zero(), "projection does not kill first - second");
  r.merge(linton_isomorphisms(t, v, v, m));
  if (!out.empty()) save(out, c.module);
  return emit(r, {{"dim", c.module.comodule.dim}});
}

int cmd_fusion(const std::string& file) {
  BialgebraFD h = load_as<BialgebraFD>(file, "bialgebra");
  LinearMap g = fusion_operator(h, 1, 1);
  std::size_t rk = rank(g);
  Report r;
  r.subject = "fusion " + file;
  bool hopf = false;
  try {
    hopf = is_right_hopf(h);
    r.add("agrees-with-antipode", true);
  } catch (const Error& e) {
    r.add("agrees-with-antipode", false, e.what());
  }
  if (auto s = find_antipode(h).antipode) {
    LinearMap inv = fusion_inverse_from_antipode(h, *s);
    LinearMap one = LinearMap::identity(h.field, h.dim * h.dim);
    r.add("inverse-left", inv * g == one, mismatch_witness(inv * g, one));
    r.add("inverse-right", g * inv == one, mismatch_witness(g * inv, one));
  }
  return emit(r, {{"rank", rk}, {"size", h.dim * h.dim}, {"right-hopf", hopf}});
}

int cmd_report(const std::vector<int>& only) {
  auto results = run_acceptance(only);
  std::cout << (format == "json" ? acceptance_json(results) : acceptance_text(results));
  for (const auto& r : results) {
    if (!r.passed) return kFail;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hopf trimodules and their monads"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("trimod, schema ") + kSchemaVersion);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, second, third, out, eps;
  bool twisted = false;
  std::vector<int> only;
  int code = kPass;

  auto* validate = app.add_subcommand("validate", "Run the validator for a structure file");
  validate->add_option("FILE", file)->required();
  validate->callback([&] { code = cmd_validate(file); });

  auto* antipode = app.add_subcommand("antipode", "Solve for the antipode of a bialgebra");
  antipode->add_flag("--twisted", twisted, "Solve for the twisted antipode instead");
  antipode->add_option("FILE", file)->required();
  antipode->callback([&] { code = cmd_antipode(file, twisted); });

  auto* cot = app.add_subcommand("cotensor", "Cotensor product X box Y");
  cot->add_option("X", file)->required();
  cot->add_option("Y", second)->required();
  cot->add_option("-o,--output", out)->required();
  cot->callback([&] { code = cmd_cotensor(file, second, out); });

  auto* chi = app.add_subcommand("chi", "Interchange map of a trimodule at (M, N)");
  chi->add_option("TRIMOD", file)->required();
  chi->add_option("M", second)->required();
  chi->add_option("N", third)->required();
  chi->callback([&] { code = cmd_chi(file, second, third); });

  auto* bdotb = app.add_subcommand("bdotb", "The trimodule algebra B.B of a bialgebra");
  bdotb->add_option("BIALG", file)->required();
  bdotb->add_option("-o,--output", out)->required();
  bdotb->callback([&] { code = cmd_bdotb(file, out); });

  auto* rec = app.add_subcommand("reconstruct", "Pointed trimodule algebra from a monoid and a {0,1} character");
  bool pointed = false;
  rec->add_flag("--pointed", pointed, "Pointed construction (the only one available)")->required();
  rec->add_option("MONOID", file, "JSON {\"elements\": [...], \"table\": [[...]]}")->required();
  rec->add_option("EPS", eps, "Comma separated values, e.g. 1,0")->required();
  rec->add_option("-o,--output", out)->required();
  rec->callback([&] { code = cmd_reconstruct(file, eps, out); });

  auto* linton = app.add_subcommand("linton", "Linton coequalizer V |> M for a trimodule algebra");
  linton->add_option("ALG", file)->required();
  linton->add_option("V", second)->required();
  linton->add_option("M", third, "A module, or a left comodule standing for its free module")->required();
  linton->add_option("-o,--output", out);
  linton->callback([&] { code = cmd_linton(file, second, third, out); });

  auto* fusion = app.add_subcommand("fusion", "Fusion operator and right Hopf verdict");
  fusion->add_option("BIALG", file)->required();
  fusion->callback([&] { code = cmd_fusion(file); });

  auto* report = app.add_subcommand("report", "Run the acceptance suite");
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  report->add_option("--only", only, "Criterion identifiers to run");
  report->callback([&] { code = cmd_report(only); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    if (e.kind() == "base-mismatch" || e.kind() == "shape-mismatch") {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
    std::cerr << "check failed: " << e.what() << "\n";
    return kFail;
  }
  return code;
}
