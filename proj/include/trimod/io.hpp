#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "trimod/algebra.hpp"

namespace trimod {

inline constexpr const char* kSchemaVersion = "1";

using Structure = std::variant<BialgebraFD, LeftComoduleFD, RightComoduleFD, BicomoduleFD, HopfTrimoduleFD,
                               TrimoduleAlgebraFD, TrimoduleModuleFD, ContramoduleFD>;

// One of: bialgebra, comodule-left, comodule-right, bicomodule, trimodule,
// trimodule-algebra, module, contramodule.
std::string structure_kind(const Structure& s);
const BialgebraFD& structure_base(const Structure& s);

// Canonical JSON: sorted keys, two-space indent, "a/b" scalars in lowest
// terms, trailing newline. Dependent kinds embed their base bialgebra and
// carry its content hash as base-ref.
std::string serialize(const Structure& s);

// Throws Error with kind malformed-syntax, unknown-kind, schema,
// non-canonical-scalar, dangling-base-ref, basis-mismatch or
// unsupported-schema; the message starts with the location.
Structure parse(std::string_view bytes);

// Lowercase hex SHA-256 of the canonical bialgebra file.
std::string base_ref(const BialgebraFD& b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace trimod
