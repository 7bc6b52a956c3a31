#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "xsym/matrix.hpp"
#include "xsym/verdict.hpp"

namespace xsym {

using Json = nlohmann::ordered_json;

/// Thrown on malformed matrix, factorization, or network documents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Splits a row of scalars on whitespace, keeping `[..]` and `[..]/[..]`
/// groups intact.
std::vector<std::string> split_scalars(std::string_view line);

/// Line 1 is n, then n lines of n scalars separated by single spaces.
template <class S>
std::string write_matrix_text(const Matrix<S>& a) {
    std::string out = std::to_string(a.size()) + "\n";
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= a.size(); ++j) {
            if (j > 1) out += ' ';
            out += a(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

template <class S>
Json matrix_to_json(const Matrix<S>& a) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= a.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 1; j <= a.size(); ++j) row.push_back(a(i, j).to_string());
        rows.push_back(std::move(row));
    }
    Json doc;
    doc["n"] = a.size();
    doc["entries"] = std::move(rows);
    return doc;
}

/// A parsed matrix file: rational unless some entry is a polynomial or
/// rational function in b.
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<RatFunc>>;

/// Reads either the text format or the `{n, entries}` document.
AnyMatrix parse_any_matrix(std::string_view text);
Matrix<Rational> parse_rational_matrix(std::string_view text);

std::string to_json_text(const Json& doc);

template <class S>
Json factorization_to_json(const Factorization<S>& f) {
    Json atoms = Json::array();
    for (const auto& a : f.atoms) {
        Json atom;
        atom["kind"] = a.kind == AtomKind::Bridge ? "bridge" : "center";
        atom["s"] = a.s;
        atom["c"] = a.c.to_string();
        atoms.push_back(std::move(atom));
    }
    Json diag = Json::array();
    for (const auto& d : f.diagonal) diag.push_back(d.to_string());
    Json doc;
    doc["n"] = f.n;
    doc["atoms"] = std::move(atoms);
    doc["diagonal"] = std::move(diag);
    return doc;
}

Factorization<Rational> factorization_from_json(const Json& doc);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Fingerprint of the serialized factorization.
template <class S>
std::string digest(const Factorization<S>& f) {
    return fnv1a_hex(factorization_to_json(f).dump());
}

}  // namespace xsym
