#include "cpmat/io.hpp"

#include "cpmat/error.hpp"

#include <algorithm>

namespace cpmat::io {

namespace {

[[noreturn]] void fail(std::string_view where, const std::string& msg) {
    throw Error(ErrorKind::ParseError, std::string(where) + ": " + msg);
}

const json& require(const json& j, const char* key, std::string_view where) {
    if (!j.is_object()) fail(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t size_from_json(const json& j, std::string_view where) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) fail(where, "expected a positive integer");
    return j.get<std::size_t>();
}

Int two_pow_53() {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, 53);
    return p;
}

}  // namespace

json int_to_json(const Int& x) {
    static const Int limit = two_pow_53();
    if (abs(x) < limit) return json(x.get_si());
    return json(x.get_str());
}

Int int_from_json(const json& j, std::string_view where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
        return Int(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::string_view body = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? std::string_view(s).substr(1) : std::string_view(s);
        if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            fail(where, "\"" + s + "\" is not a decimal integer");
        }
        return Int(s[0] == '+' ? s.substr(1) : s);
    }
    fail(where, "expected an integer (number or decimal string)");
}

json vector_to_json(const IntVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(int_to_json(x));
    return out;
}

IntVector vector_from_json(const json& j, std::string_view where) {
    if (!j.is_array()) fail(where, "expected an array");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        v.push_back(int_from_json(j[i], std::string(where) + "[" + std::to_string(i) + "]"));
    }
    return v;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
    json out;
    out["dim"] = m.rows();
    if (m.cols() != m.rows()) out["cols"] = m.cols();
    out["rows"] = std::move(rows);
    return out;
}

IntMatrix matrix_from_json(const json& j) {
    const std::size_t dim = size_from_json(require(j, "dim", "matrix"), "matrix.dim");
    std::size_t cols = dim;
    if (j.contains("cols")) cols = size_from_json(j["cols"], "matrix.cols");
    const json& rows = require(j, "rows", "matrix");
    if (!rows.is_array()) fail("matrix.rows", "expected an array of rows");
    if (rows.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "matrix declares " + std::to_string(dim) +
                                                      " rows but has " + std::to_string(rows.size()));
    }
    IntMatrix m(dim, cols);
    for (std::size_t r = 0; r < dim; ++r) {
        const std::string where = "matrix.rows[" + std::to_string(r) + "]";
        const IntVector row = vector_from_json(rows[r], where);
        if (row.size() != cols) {
            throw Error(ErrorKind::DimensionMismatch, where + " has " + std::to_string(row.size()) +
                                                          " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

std::string serialize_matrix(const IntMatrix& m) { return matrix_to_json(m).dump(); }

IntMatrix parse_matrix(std::string_view text) { return matrix_from_json(parse_json(text)); }

json residue_to_json(const Residue& r) {
    return json{{"r", vector_to_json(r.r())}, {"modulus", matrix_to_json(r.modulus())}};
}

Residue residue_from_json(const json& j) {
    return Residue(vector_from_json(require(j, "r", "residue"), "residue.r"),
                   matrix_from_json(require(j, "modulus", "residue")));
}

json family_to_json(const FamilyDocument& doc) {
    json out;
    out["kind"] = "family";
    out["dim"] = doc.dim;
    json qs = json::array();
    for (const auto& q : doc.qs) qs.push_back(int_to_json(q));
    out["qs"] = std::move(qs);
    if (!doc.feasible_perms.empty()) {
        out["feasible_set"] = json{{"kind", doc.feasible_kind}, {"perms", doc.feasible_perms}};
    }
    json members = json::array();
    for (const auto& m : doc.members) {
        json entry;
        entry["i"] = m.i;
        entry["j"] = m.j;
        entry["q"] = int_to_json(m.q);
        entry["perm"] = m.perm;
        if (m.sign_mask) {
            json mask = json::array();
            for (std::size_t r = 0; r < m.sign_mask->dim; ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < m.sign_mask->dim; ++c) row.push_back((*m.sign_mask)(r, c));
                mask.push_back(std::move(row));
            }
            entry["sign_mask"] = std::move(mask);
        } else {
            entry["sign_mask"] = nullptr;
        }
        entry["matrix"] = matrix_to_json(m.matrix);
        members.push_back(std::move(entry));
    }
    out["members"] = std::move(members);
    return out;
}

FamilyDocument family_from_json(const json& j) {
    FamilyDocument doc;
    doc.dim = size_from_json(require(j, "dim", "family"), "family.dim");
    const json& qs = require(j, "qs", "family");
    if (!qs.is_array()) fail("family.qs", "expected an array");
    for (std::size_t k = 0; k < qs.size(); ++k) {
        doc.qs.push_back(int_from_json(qs[k], "family.qs[" + std::to_string(k) + "]"));
    }
    if (j.contains("feasible_set")) {
        const json& fs = j["feasible_set"];
        doc.feasible_kind = require(fs, "kind", "family.feasible_set").get<std::string>();
        doc.feasible_perms = require(fs, "perms", "family.feasible_set").get<std::vector<Permutation>>();
    }

    const json& members = require(j, "members", "family");
    if (!members.is_array() || members.empty()) fail("family.members", "expected a non-empty array");
    for (std::size_t k = 0; k < members.size(); ++k) {
        const std::string where = "family.members[" + std::to_string(k) + "]";
        const json& e = members[k];
        const Int q = int_from_json(require(e, "q", where), where + ".q");
        const auto perm = require(e, "perm", where).get<Permutation>();
        ConstructedMatrix m = construct_matrix(q, perm);
        if (e.contains("sign_mask") && !e["sign_mask"].is_null()) {
            const auto rows = e["sign_mask"].get<std::vector<std::vector<int>>>();
            SignMask mask{rows.size(), {}};
            for (const auto& row : rows) {
                if (row.size() != rows.size()) {
                    throw Error(ErrorKind::DimensionMismatch, where + ".sign_mask is not square");
                }
                mask.signs.insert(mask.signs.end(), row.begin(), row.end());
            }
            m = apply_sign_flips(m, mask);
        }
        if (e.contains("i")) m.i = e["i"].get<std::size_t>();
        if (m.dim() != doc.dim) {
            throw Error(ErrorKind::DimensionMismatch, where + " has dimension " + std::to_string(m.dim()));
        }
        if (e.contains("matrix") && matrix_from_json(e["matrix"]) != m.matrix) {
            fail(where, "stored matrix disagrees with its q/perm/sign_mask provenance");
        }
        doc.members.push_back(std::move(m));
    }
    return doc;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
}

}  // namespace cpmat::io
