#pragma once

#include <map>
#include <optional>
#include <utility>

#include "zdg/graph.hpp"

namespace zdg {

using VertexPair = std::pair<Vertex, Vertex>;

/// Outcome of the four necessary conditions for a graph to be the
/// zero-divisor graph of a commutative semigroup.
struct ConditionReport {
    bool connected = false;
    bool diameter3 = false;
    bool core_ok = false;
    bool star_ok = false;
    /// For every nonadjacent pair {x, y} (x < y): all z with N(x) ∪ N(y) ⊆ N̄(z).
    std::map<VertexPair, VertexSet> star_witnesses;
    /// First nonadjacent pair, in lexicographic order, without a witness.
    std::optional<VertexPair> failing_pair;
};

bool check_diameter3(const Graph &g);

/// The core is the set of edges lying on some cycle. Passes when every core
/// edge lies on a triangle or quadrilateral made of core edges and every
/// vertex outside the core is an end (degree 1). Acyclic graphs pass.
bool check_core_condition(const Graph &g);

/// Edges that lie on at least one cycle, as (u, v) with u < v.
std::vector<VertexPair> core_edges(const Graph &g);

ConditionReport check_star_condition(const Graph &g);

/// Witness set for one nonadjacent pair: { z : N(x) ∪ N(y) ⊆ N̄(z) }.
VertexSet star_witnesses(const Graph &g, Vertex x, Vertex y);

/// Never throws; on a disconnected graph only `connected` is meaningful.
ConditionReport check_all_conditions(const Graph &g);

} // namespace zdg
