#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// Isomorphism-invariant byte string: the graph6 encoding of the canonical
/// relabeling. Equal codes if and only if the graphs are isomorphic.
struct CanonicalCode {
    std::string bytes;

    std::string hex() const;
    auto operator<=>(const CanonicalCode &) const = default;
};

struct Canonization {
    /// labeling[v] is the canonical position of input vertex v.
    std::vector<Vertex> labeling;
    Graph graph;
    CanonicalCode code;
};

/// Colour refinement plus individualisation, keeping the lexicographically
/// largest adjacency matrix over all leaves. Twin vertices in a cell are
/// individualised once, since swapping twins is an automorphism.
Canonization canonize(const Graph &g);

CanonicalCode canonical_form(const Graph &g);

} // namespace zdg

template <>
struct std::hash<zdg::CanonicalCode> {
    std::size_t operator()(const zdg::CanonicalCode &c) const noexcept { return std::hash<std::string>{}(c.bytes); }
};
