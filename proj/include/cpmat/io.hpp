#pragma once

#include "cpmat/family.hpp"
#include "cpmat/int_matrix.hpp"
#include "cpmat/lattice.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpmat::io {

using json = nlohmann::ordered_json;

/// Integers within 53 bits are written as JSON numbers, larger ones as
/// decimal strings. Both forms are accepted on input.
json int_to_json(const Int& x);
Int int_from_json(const json& j, std::string_view where = "value");

json vector_to_json(const IntVector& v);
IntVector vector_from_json(const json& j, std::string_view where = "vector");

/// {"dim": r, "rows": [[...], ...]}; a "cols" key is added only when c != r.
json matrix_to_json(const IntMatrix& m);
/// Throws ParseError on malformed documents, DimensionMismatch on shape errors.
IntMatrix matrix_from_json(const json& j);

std::string serialize_matrix(const IntMatrix& m);
IntMatrix parse_matrix(std::string_view text);

/// {"r": [...], "modulus": {matrix}}
json residue_to_json(const Residue& r);
Residue residue_from_json(const json& j);

struct FamilyDocument {
    std::size_t dim = 0;
    std::vector<Int> qs;
    std::string feasible_kind;  // "cyclic", "toeplitz", "explicit", or empty
    std::vector<Permutation> feasible_perms;
    std::vector<ConstructedMatrix> members;
};

json family_to_json(const FamilyDocument& doc);
/// Rebuilds every member from its provenance and checks it against the stored
/// matrix; a mismatch is a ParseError.
FamilyDocument family_from_json(const json& j);

/// Parses JSON text; syntax errors become ParseError with line and column.
json parse_json(std::string_view text);

}  // namespace cpmat::io
