#include "xsym/network.hpp"

#include <stdexcept>

#include "xsym/elimination.hpp"

namespace xsym {

void validate(const PlanarNetwork& net) {
    if (net.n == 0) throw std::invalid_argument("network needs at least one wire");
    for (std::size_t k = 0; k < net.chips.size(); ++k) {
        const Chip& chip = net.chips[k];
        const std::string where = "chip " + std::to_string(k + 1) + ": ";
        if (chip.horizontal.size() != net.n) throw std::invalid_argument(where + "needs one horizontal edge per wire");
        for (const auto& h : chip.horizontal)
            if (h.sign() <= 0) throw std::invalid_argument(where + "horizontal weights must be positive");
        std::vector<bool> spanned(net.n + 1, false);
        for (const auto& e : chip.slants) {
            if (e.from < 1 || e.from > net.n || e.to < 1 || e.to > net.n) {
                throw std::invalid_argument(where + "slant endpoint outside 1..n");
            }
            if (e.from + 1 != e.to && e.to + 1 != e.from) throw std::invalid_argument(where + "slants must join adjacent wires");
            if (e.weight.sign() <= 0) throw std::invalid_argument(where + "slant weights must be positive");
            const std::size_t top = std::min(e.from, e.to);
            if (spanned[top]) throw std::invalid_argument(where + "crossing slants");
            spanned[top] = true;
        }
    }
}

namespace {

Chip plain_chip(std::size_t n) { return Chip{std::vector<Rational>(n, Rational(1)), {}}; }

}  // namespace

PlanarNetwork network_from_factorization(const Factorization<Rational>& f) {
    const std::size_t n = f.n;
    PlanarNetwork net{n, {}};
    for (const auto& atom : f.atoms) {
        require_valid_atom(atom, RationalSigns{});
        const std::size_t s = atom.s;
        if (atom.kind == AtomKind::Bridge) {
            Chip chip = plain_chip(n);
            chip.slants.push_back({s + 1, s, atom.c});
            chip.slants.push_back({w0(s + 1, n), w0(s, n), atom.c});
            net.chips.push_back(std::move(chip));
            continue;
        }
        Chip lower = plain_chip(n);
        lower.slants.push_back({s + 1, s, atom.c});
        Chip scale = plain_chip(n);
        scale.horizontal[s - 1] = Rational(1) / (Rational(1) - atom.c * atom.c);
        Chip upper = plain_chip(n);
        upper.slants.push_back({s, s + 1, atom.c});
        net.chips.push_back(std::move(lower));
        net.chips.push_back(std::move(scale));
        net.chips.push_back(std::move(upper));
    }
    net.chips.push_back(Chip{f.diagonal, {}});
    validate(net);
    return net;
}

Matrix<Rational> chip_transfer_matrix(const Chip& chip, std::size_t n) {
    Matrix<Rational> t(n);
    for (std::size_t w = 1; w <= n; ++w) t.at(w, w) = chip.horizontal[w - 1];
    for (const auto& e : chip.slants) t.at(e.from, e.to) += e.weight;
    return t;
}

Matrix<Rational> path_matrix(const PlanarNetwork& net) {
    validate(net);
    const std::size_t n = net.n;
    Matrix<Rational> out(n);
    for (std::size_t source = 1; source <= n; ++source) {
        // weight[w] = total weight of paths from the source to wire w at the current boundary
        std::vector<Rational> weight(n + 1);
        weight[source] = Rational(1);
        for (const auto& chip : net.chips) {
            std::vector<Rational> next(n + 1);
            for (std::size_t w = 1; w <= n; ++w) {
                if (!weight[w].is_zero()) next[w] += weight[w] * chip.horizontal[w - 1];
            }
            for (const auto& e : chip.slants) {
                if (!weight[e.from].is_zero()) next[e.to] += weight[e.from] * e.weight;
            }
            weight = std::move(next);
        }
        for (std::size_t w = 1; w <= n; ++w) out.at(source, w) = weight[w];
    }
    return out;
}

PlanarNetwork reflect(const PlanarNetwork& net) {
    PlanarNetwork r{net.n, {}};
    for (const auto& chip : net.chips) {
        Chip c{std::vector<Rational>(chip.horizontal.rbegin(), chip.horizontal.rend()), {}};
        for (const auto& e : chip.slants) c.slants.push_back({w0(e.from, net.n), w0(e.to, net.n), e.weight});
        r.chips.push_back(std::move(c));
    }
    return r;
}

namespace {

std::string node_name(std::size_t boundary, std::size_t wire, std::size_t chips) {
    if (boundary == 0) return "S" + std::to_string(wire);
    if (boundary == chips) return "T" + std::to_string(wire);
    return "v" + std::to_string(boundary) + "_" + std::to_string(wire);
}

std::string edge_line(const std::string& from, const std::string& to, const Rational& w) {
    std::string line = "  " + from + " -> " + to;
    if (w != Rational(1)) line += " [label=\"" + w.to_string() + "\"]";
    return line + ";\n";
}

}  // namespace

std::string export_dot(const PlanarNetwork& net) {
    validate(net);
    const std::size_t n = net.n;
    const std::size_t chips = net.chips.size();
    std::string out = "digraph planar_network {\n  rankdir=LR;\n  node [shape=point];\n";
    for (std::size_t w = 1; w <= n; ++w) {
        out += "  S" + std::to_string(w) + " [shape=plaintext];\n";
        if (chips > 0) out += "  T" + std::to_string(w) + " [shape=plaintext];\n";
    }
    for (std::size_t k = 0; k <= chips; ++k) {
        out += "  { rank=same;";
        for (std::size_t w = 1; w <= n; ++w) out += " " + node_name(k, w, chips) + ";";
        out += " }\n";
    }
    for (std::size_t k = 1; k <= chips; ++k) {
        const Chip& chip = net.chips[k - 1];
        for (std::size_t w = 1; w <= n; ++w) {
            out += edge_line(node_name(k - 1, w, chips), node_name(k, w, chips), chip.horizontal[w - 1]);
        }
        for (const auto& e : chip.slants) {
            out += edge_line(node_name(k - 1, e.from, chips), node_name(k, e.to, chips), e.weight);
        }
    }
    return out + "}\n";
}

Json network_to_json(const PlanarNetwork& net) {
    Json chips = Json::array();
    for (const auto& chip : net.chips) {
        Json horizontal = Json::array();
        for (std::size_t w = 1; w <= net.n; ++w) {
            Json e;
            e["wire"] = w;
            e["weight"] = chip.horizontal[w - 1].to_string();
            horizontal.push_back(std::move(e));
        }
        Json slants = Json::array();
        for (const auto& s : chip.slants) {
            Json e;
            e["from"] = s.from;
            e["to"] = s.to;
            e["weight"] = s.weight.to_string();
            slants.push_back(std::move(e));
        }
        Json c;
        c["horizontal"] = std::move(horizontal);
        c["slants"] = std::move(slants);
        chips.push_back(std::move(c));
    }
    Json doc;
    doc["n"] = net.n;
    doc["chips"] = std::move(chips);
    return doc;
}

PlanarNetwork network_from_json(const Json& doc) {
    try {
        PlanarNetwork net{doc.at("n").get<std::size_t>(), {}};
        for (const auto& c : doc.at("chips")) {
            Chip chip{std::vector<Rational>(net.n, Rational(1)), {}};
            std::vector<bool> seen(net.n + 1, false);
            for (const auto& h : c.at("horizontal")) {
                const auto w = h.at("wire").get<std::size_t>();
                if (w < 1 || w > net.n || seen[w]) throw FormatError("bad or repeated horizontal wire");
                seen[w] = true;
                chip.horizontal[w - 1] = Rational::parse(h.at("weight").get<std::string>());
            }
            for (std::size_t w = 1; w <= net.n; ++w)
                if (!seen[w]) throw FormatError("missing horizontal edge on wire " + std::to_string(w));
            for (const auto& s : c.at("slants")) {
                chip.slants.push_back({s.at("from").get<std::size_t>(), s.at("to").get<std::size_t>(),
                                       Rational::parse(s.at("weight").get<std::string>())});
            }
            net.chips.push_back(std::move(chip));
        }
        validate(net);
        return net;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("invalid network document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid network document: ") + e.what());
    }
}

}  // namespace xsym
