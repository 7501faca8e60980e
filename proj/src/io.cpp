#include "trimod/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "json.hpp"

namespace trimod {

using json = nlohmann::json;

namespace {

// ---- writing

json field_json(const Field& f) {
  return {{"characteristic", f.characteristic()}, {"kind", f.is_rational() ? "rationals" : "prime"}};
}

json matrix_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().format(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"cols", m.cols()}, {"entries", std::move(rows)}, {"rows", m.rows()}};
}

json bialgebra_json(const BialgebraFD& b) {
  return {{"basis", b.basis},         {"comul", matrix_json(b.comul)}, {"counit", matrix_json(b.counit)},
          {"dim", b.dim},             {"mul", matrix_json(b.mul)},     {"unit", matrix_json(b.unit)}};
}

json comodule_json(std::size_t dim, const LinearMap& coaction, const std::string& label) {
  return {{"coaction", matrix_json(coaction)}, {"dim", dim}, {"label", label}};
}

json bicomodule_json(const BicomoduleFD& x) {
  return {{"dim", x.dim}, {"label", x.label}, {"left", matrix_json(x.left)}, {"right", matrix_json(x.right)}};
}

json trimodule_json(const HopfTrimoduleFD& x) {
  json j = bicomodule_json(x.bicomodule);
  j["action"] = matrix_json(x.action);
  return j;
}

json algebra_json(const TrimoduleAlgebraFD& a) {
  return {{"carrier", trimodule_json(a.carrier)},
          {"mul", matrix_json(a.mul)},
          {"square-basis", matrix_json(a.square().inclusion())},
          {"unit", matrix_json(a.unit)}};
}

json module_json(const TrimoduleModuleFD& m) {
  json j = {{"act", matrix_json(m.act)},
            {"algebra", algebra_json(*m.algebra)},
            {"comodule", comodule_json(m.comodule.dim, m.comodule.coaction, m.comodule.label)}};
  if (m.free_on) j["free-on"] = comodule_json(m.free_on->dim, m.free_on->coaction, m.free_on->label);
  return j;
}

json contramodule_json(const ContramoduleFD& c) {
  return {{"algebra", algebra_json(*c.algebra)},
          {"coact", matrix_json(c.coact)},
          {"comodule", comodule_json(c.comodule.dim, c.comodule.coaction, c.comodule.label)}};
}

json payload_json(const Structure& s) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BialgebraFD>) return bialgebra_json(x);
        if constexpr (std::is_same_v<T, LeftComoduleFD> || std::is_same_v<T, RightComoduleFD>) {
          return comodule_json(x.dim, x.coaction, x.label);
        }
        if constexpr (std::is_same_v<T, BicomoduleFD>) return bicomodule_json(x);
        if constexpr (std::is_same_v<T, HopfTrimoduleFD>) return trimodule_json(x);
        if constexpr (std::is_same_v<T, TrimoduleAlgebraFD>) return algebra_json(x);
        if constexpr (std::is_same_v<T, TrimoduleModuleFD>) return module_json(x);
        if constexpr (std::is_same_v<T, ContramoduleFD>) return contramodule_json(x);
      },
      s);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("hash-failure", "SHA-256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

// ---- reading

class Reader {
 public:
  explicit Reader(Field f) : field_(f) {}

  const json& need(const json& j, const std::string& key, const std::string& at) const {
    if (!j.is_object()) fail("schema", at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail("schema", at + "/" + key, "missing");
    return *it;
  }

  std::size_t size(const json& j, const std::string& key, const std::string& at) const {
    const json& v = need(j, key, at);
    if (!v.is_number_unsigned()) fail("schema", at + "/" + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
  }

  std::string text(const json& j, const std::string& key, const std::string& at) const {
    const json& v = need(j, key, at);
    if (!v.is_string()) fail("schema", at + "/" + key, "expected a string");
    return v.get<std::string>();
  }

  LinearMap matrix(const json& j, const std::string& key, const std::string& at, std::size_t rows,
                   std::size_t cols) const {
    std::string here = at + "/" + key;
    const json& m = need(j, key, at);
    std::size_t r = size(m, "rows", here), c = size(m, "cols", here);
    if (r != rows || c != cols) {
      fail("schema", here, "shape " + std::to_string(r) + "x" + std::to_string(c) + ", expected " +
                               std::to_string(rows) + "x" + std::to_string(cols));
    }
    const json& e = need(m, "entries", here);
    if (!e.is_array() || e.size() != r) fail("schema", here + "/entries", "expected " + std::to_string(r) + " rows");
    LinearMap out(field_, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      std::string row_at = here + "/entries/" + std::to_string(i);
      if (!e[i].is_array() || e[i].size() != c) fail("schema", row_at, "expected " + std::to_string(c) + " entries");
      for (std::size_t k = 0; k < c; ++k) {
        const json& v = e[i][k];
        std::string cell = row_at + "/" + std::to_string(k);
        if (!v.is_string()) fail("schema", cell, "scalars are strings");
        auto q = field_.parse(v.get<std::string>());
        if (!q) fail("non-canonical-scalar", cell, "\"" + v.get<std::string>() + "\"");
        out.set(i, k, *q);
      }
    }
    return out;
  }

  [[noreturn]] static void fail(const std::string& kind, const std::string& at, const std::string& what) {
    throw Error(kind, (at.empty() ? "/" : at) + ": " + what);
  }

 private:
  Field field_;
};

Field read_field(const json& root) {
  Reader plain{Field::rationals()};
  const json& f = plain.need(root, "field", "");
  std::string kind = plain.text(f, "kind", "/field");
  std::size_t p = plain.size(f, "characteristic", "/field");
  if (kind == "rationals" && p == 0) return Field::rationals();
  if (kind == "prime") {
    try {
      return Field::prime(static_cast<std::int64_t>(p));
    } catch (const std::invalid_argument& e) {
      Reader::fail("schema", "/field/characteristic", e.what());
    }
  }
  Reader::fail("schema", "/field", "unknown field " + kind + " of characteristic " + std::to_string(p));
}

BialgebraFD read_bialgebra(const Reader& rd, const Field& f, const json& j, const std::string& at) {
  BialgebraFD b;
  b.field = f;
  b.dim = rd.size(j, "dim", at);
  std::size_t n = b.dim;
  b.mul = rd.matrix(j, "mul", at, n, n * n);
  b.unit = rd.matrix(j, "unit", at, n, 1);
  b.comul = rd.matrix(j, "comul", at, n * n, n);
  b.counit = rd.matrix(j, "counit", at, 1, n);
  const json& names = rd.need(j, "basis", at);
  if (!names.is_array() || names.size() != n) Reader::fail("schema", at + "/basis", "expected " + std::to_string(n) + " names");
  for (const auto& s : names) {
    if (!s.is_string()) Reader::fail("schema", at + "/basis", "names are strings");
    b.basis.push_back(s.get<std::string>());
  }
  return b;
}

LeftComoduleFD read_left(const Reader& rd, const BasePtr& base, const json& j, const std::string& at) {
  std::size_t d = rd.size(j, "dim", at);
  return {base, d, rd.matrix(j, "coaction", at, base->dim * d, d), rd.text(j, "label", at)};
}

RightComoduleFD read_right(const Reader& rd, const BasePtr& base, const json& j, const std::string& at) {
  std::size_t d = rd.size(j, "dim", at);
  return {base, d, rd.matrix(j, "coaction", at, d * base->dim, d), rd.text(j, "label", at)};
}

BicomoduleFD read_bicomodule(const Reader& rd, const BasePtr& base, const json& j, const std::string& at) {
  std::size_t d = rd.size(j, "dim", at), n = base->dim;
  return {base, d, rd.matrix(j, "left", at, n * d, d), rd.matrix(j, "right", at, d * n, d), rd.text(j, "label", at)};
}

HopfTrimoduleFD read_trimodule(const Reader& rd, const BasePtr& base, const json& j, const std::string& at) {
  BicomoduleFD x = read_bicomodule(rd, base, j, at);
  LinearMap action = rd.matrix(j, "action", at, x.dim, base->dim * x.dim);
  return {std::move(x), std::move(action)};
}

TrimoduleAlgebraFD read_algebra(const Reader& rd, const BasePtr& base, const json& j, const std::string& at) {
  TrimoduleAlgebraFD a;
  a.carrier = read_trimodule(rd, base, rd.need(j, "carrier", at), at + "/carrier");
  std::size_t d = a.dim();
  CotensorSpace sq = a.square();
  LinearMap basis = rd.matrix(j, "square-basis", at, d * d, sq.dim());
  if (basis != sq.inclusion()) Reader::fail("basis-mismatch", at + "/square-basis", "differs from the canonical basis");
  a.mul = rd.matrix(j, "mul", at, d, sq.dim());
  a.unit = rd.matrix(j, "unit", at, d, base->dim);
  return a;
}

TrimoduleModuleFD read_module(const Reader& rd, const BasePtr& base, const json& j, const std::string& at) {
  TrimoduleModuleFD m;
  m.algebra = share(read_algebra(rd, base, rd.need(j, "algebra", at), at + "/algebra"));
  m.comodule = read_left(rd, base, rd.need(j, "comodule", at), at + "/comodule");
  std::size_t am = cotensor(m.algebra->carrier.bicomodule, m.comodule).dim();
  m.act = rd.matrix(j, "act", at, m.comodule.dim, am);
  if (j.contains("free-on")) m.free_on = read_left(rd, base, j["free-on"], at + "/free-on");
  return m;
}

ContramoduleFD read_contramodule(const Reader& rd, const BasePtr& base, const json& j, const std::string& at) {
  ContramoduleFD c;
  c.algebra = share(read_algebra(rd, base, rd.need(j, "algebra", at), at + "/algebra"));
  c.comodule = read_left(rd, base, rd.need(j, "comodule", at), at + "/comodule");
  std::size_t q = cohom(c.algebra->carrier, c.comodule).value.dim;
  c.coact = rd.matrix(j, "coact", at, q, c.comodule.dim);
  return c;
}

}  // namespace

std::string structure_kind(const Structure& s) {
  static const char* names[] = {"bialgebra",  "comodule-left",     "comodule-right", "bicomodule",
                                "trimodule",  "trimodule-algebra", "module",         "contramodule"};
  return names[s.index()];
}

const BialgebraFD& structure_base(const Structure& s) {
  return std::visit(
      [](const auto& x) -> const BialgebraFD& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, BialgebraFD>) {
          return x;
        } else if constexpr (std::is_same_v<T, LeftComoduleFD> || std::is_same_v<T, RightComoduleFD> ||
                             std::is_same_v<T, BicomoduleFD>) {
          return *x.base;
        } else if constexpr (std::is_same_v<T, HopfTrimoduleFD> || std::is_same_v<T, TrimoduleAlgebraFD>) {
          return *x.base();
        } else {
          return *x.algebra->base();
        }
      },
      s);
}

std::string base_ref(const BialgebraFD& b) { return sha256_hex(serialize(Structure{b})); }

std::string serialize(const Structure& s) {
  const BialgebraFD& b = structure_base(s);
  json root = {{"field", field_json(b.field)},
               {"kind", structure_kind(s)},
               {"payload", payload_json(s)},
               {"schema-version", kSchemaVersion}};
  if (!std::holds_alternative<BialgebraFD>(s)) {
    root["base"] = bialgebra_json(b);
    root["base-ref"] = base_ref(b);
  }
  return dump(root);
}

Structure parse(std::string_view bytes) {
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error("malformed-syntax", std::string("byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  Reader plain{Field::rationals()};
  std::string version = plain.text(root, "schema-version", "");
  if (version != kSchemaVersion) Reader::fail("unsupported-schema", "/schema-version", version);
  Field f = read_field(root);
  Reader rd(f);
  std::string kind = rd.text(root, "kind", "");
  const json& payload = rd.need(root, "payload", "");

  if (kind == "bialgebra") return read_bialgebra(rd, f, payload, "/payload");

  static const std::vector<std::string> dependent = {"comodule-left", "comodule-right", "bicomodule", "trimodule",
                                                     "trimodule-algebra", "module", "contramodule"};
  if (std::find(dependent.begin(), dependent.end(), kind) == dependent.end()) {
    Reader::fail("unknown-kind", "/kind", kind);
  }
  std::string ref = rd.text(root, "base-ref", "");
  BialgebraFD embedded = read_bialgebra(rd, f, rd.need(root, "base", ""), "/base");
  if (base_ref(embedded) != ref) Reader::fail("dangling-base-ref", "/base-ref", ref + " does not match the embedded base");
  BasePtr base = std::make_shared<const BialgebraFD>(std::move(embedded));

  if (kind == "comodule-left") return read_left(rd, base, payload, "/payload");
  if (kind == "comodule-right") return read_right(rd, base, payload, "/payload");
  if (kind == "bicomodule") return read_bicomodule(rd, base, payload, "/payload");
  if (kind == "trimodule") return read_trimodule(rd, base, payload, "/payload");
  if (kind == "trimodule-algebra") return read_algebra(rd, base, payload, "/payload");
  if (kind == "module") return read_module(rd, base, payload, "/payload");
  return read_contramodule(rd, base, payload, "/payload");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io", "cannot write " + path);
  out << bytes;
  if (!out) throw Error("io", "short write to " + path);
}

}  // namespace trimod
