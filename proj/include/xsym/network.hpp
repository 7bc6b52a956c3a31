#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xsym/serialize.hpp"
#include "xsym/verdict.hpp"

namespace xsym {

/// Edge from wire `from` at a chip's left boundary to wire `to` at its right
/// boundary; wires are numbered 1..n from the top and |from - to| = 1.
struct Slant {
    std::size_t from = 0;
    std::size_t to = 0;
    Rational weight;

    friend bool operator==(const Slant&, const Slant&) = default;
};

/// One column of the network: a horizontal edge on every wire plus slants.
/// Its transfer matrix is diag(horizontal) + sum weight * E(from, to).
struct Chip {
    std::vector<Rational> horizontal;
    std::vector<Slant> slants;

    friend bool operator==(const Chip&, const Chip&) = default;
};

/// Layered planar network with sources S_1..S_n on the left and sinks
/// T_1..T_n on the right; every edge is directed left to right.
struct PlanarNetwork {
    std::size_t n = 0;
    std::vector<Chip> chips;

    friend bool operator==(const PlanarNetwork&, const PlanarNetwork&) = default;
};

/// Throws std::invalid_argument unless every wire has one positive
/// horizontal edge per chip, slants join adjacent wires with positive
/// weight, and no two slants in a chip span the same pair of wires.
void validate(const PlanarNetwork& net);

/// Bridge atoms become one chip; Center atoms become three chips through
/// [[a, e], [e, a]] = (I + c E(s+1,s)) diag(a, 1) (I + c E(s,s+1)) with
/// a = 1/(1-c^2), e = c/(1-c^2); the diagonal becomes a final chip.
PlanarNetwork network_from_factorization(const Factorization<Rational>& f);

Matrix<Rational> chip_transfer_matrix(const Chip& chip, std::size_t n);

/// Path-weight sums S_i -> T_j by left-to-right propagation over chips.
Matrix<Rational> path_matrix(const PlanarNetwork& net);

/// Reflection w -> n+1-w of every wire, chip order kept.
PlanarNetwork reflect(const PlanarNetwork& net);

/// Deterministic Graphviz digraph; weight-1 edges carry no label.
std::string export_dot(const PlanarNetwork& net);

Json network_to_json(const PlanarNetwork& net);
PlanarNetwork network_from_json(const Json& doc);

}  // namespace xsym
