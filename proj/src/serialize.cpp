#include "xsym/serialize.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace xsym {

std::vector<std::string> split_scalars(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            if (line[i] == '[') {
                const auto close = line.find(']', i);
                if (close == std::string_view::npos) throw FormatError("unterminated polynomial in matrix row");
                i = close + 1;
            } else {
                ++i;
            }
        }
        out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw FormatError("matrix entries must be strings or integers");
}

template <class S>
Matrix<S> build(std::size_t n, const std::vector<std::string>& tokens) {
    std::vector<S> e;
    e.reserve(tokens.size());
    for (const auto& t : tokens) {
        if constexpr (std::is_same_v<S, Rational>) {
            e.push_back(Rational::parse(t));
        } else {
            e.push_back(RatFunc::parse(t));
        }
    }
    return Matrix<S>(n, std::move(e));
}

AnyMatrix build_any(std::size_t n, const std::vector<std::string>& tokens) {
    if (n == 0) throw FormatError("matrix dimension must be at least 1");
    if (tokens.size() != n * n) throw FormatError("expected " + std::to_string(n * n) + " entries");
    bool symbolic = false;
    for (const auto& t : tokens) symbolic = symbolic || t.find('[') != std::string::npos;
    try {
        if (symbolic) return build<RatFunc>(n, tokens);
        return build<Rational>(n, tokens);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    } catch (const ArithmeticError& e) {
        throw FormatError(e.what());
    }
}

std::size_t parse_dimension(const std::string& line) {
    const auto tokens = split_scalars(line);
    if (tokens.size() != 1) throw FormatError("first line must hold the dimension n");
    for (char c : tokens[0])
        if (!std::isdigit(static_cast<unsigned char>(c))) throw FormatError("dimension must be a positive integer");
    return std::stoul(tokens[0]);
}

}  // namespace

AnyMatrix parse_any_matrix(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw FormatError("empty matrix file");
    if (text[first] == '{') {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::exception& e) {
            throw FormatError(std::string("invalid matrix document: ") + e.what());
        }
        if (!doc.contains("n") || !doc.contains("entries")) throw FormatError("matrix document needs n and entries");
        const auto n = doc["n"].get<std::size_t>();
        std::vector<std::string> tokens;
        const auto& rows = doc["entries"];
        if (!rows.is_array() || rows.size() != n) throw FormatError("entries must hold n rows");
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != n) throw FormatError("each row must hold n entries");
            for (const auto& v : row) tokens.push_back(scalar_text(v));
        }
        return build_any(n, tokens);
    }

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    bool have_n = false;
    std::vector<std::string> tokens;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!have_n) {
            n = parse_dimension(line);
            have_n = true;
            continue;
        }
        auto row = split_scalars(line);
        if (row.size() != n) throw FormatError("row " + std::to_string(rows + 1) + " does not hold n entries");
        tokens.insert(tokens.end(), row.begin(), row.end());
        ++rows;
    }
    if (!have_n) throw FormatError("missing dimension line");
    if (rows != n) throw FormatError("expected " + std::to_string(n) + " rows, found " + std::to_string(rows));
    return build_any(n, tokens);
}

Matrix<Rational> parse_rational_matrix(std::string_view text) {
    auto any = parse_any_matrix(text);
    if (auto* m = std::get_if<Matrix<Rational>>(&any)) return std::move(*m);
    throw FormatError("expected a rational matrix");
}

std::string to_json_text(const Json& doc) { return doc.dump(2) + "\n"; }

Factorization<Rational> factorization_from_json(const Json& doc) {
    try {
        Factorization<Rational> f;
        f.n = doc.at("n").get<std::size_t>();
        for (const auto& a : doc.at("atoms")) {
            const auto kind = a.at("kind").get<std::string>();
            const auto s = a.at("s").get<std::size_t>();
            const Rational c = Rational::parse(a.at("c").get<std::string>());
            if (kind == "bridge") {
                f.atoms.push_back(Atom<Rational>::bridge(s, c, f.n));
            } else if (kind == "center") {
                if (2 * s != f.n) throw FormatError("center atom must sit at s = n/2");
                f.atoms.push_back(Atom<Rational>::center(c, f.n));
            } else {
                throw FormatError("unknown atom kind '" + kind + "'");
            }
        }
        for (const auto& d : doc.at("diagonal")) f.diagonal.push_back(Rational::parse(d.get<std::string>()));
        if (f.diagonal.size() != f.n) throw FormatError("diagonal must hold n entries");
        return f;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("invalid factorization document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid factorization document: ") + e.what());
    }
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace xsym
