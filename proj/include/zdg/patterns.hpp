#pragma once

#include <optional>
#include <string>
#include <utility>

#include "zdg/graph.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

enum class PatternFamily {
    StarRefinement,
    DoubleStar,
    CompleteBipartitePlusEndsOneVertex,
    CompletePlusEndsAtMostTwoVertices,
    K3PlusEndsThreeVertices,
    CompletePlusEndsThreePlusVertices,
    BipartitePlusEndsTwoVertices,
    Duplication,
    None,
};

std::string to_string(PatternFamily f);

enum class TwinMode { Open, Closed };

struct DuplicationPair {
    Vertex x = 0;
    /// The twin that gets removed; x < y is not guaranteed.
    Vertex y = 0;
    TwinMode mode = TwinMode::Open;

    auto operator<=>(const DuplicationPair &) const = default;
};

struct DuplicationInfo {
    Graph parent;
    DuplicationPair pair;
};

struct PatternVerdict {
    PatternFamily family = PatternFamily::None;
    std::optional<bool> realizable;
    std::optional<MulTable> constructive_table;
    std::optional<DuplicationInfo> duplication;
};

/// A vertex adjacent to every other vertex. Table: the center annihilates
/// everything and every other product is the center.
std::optional<MulTable> recognize_star_refinement(const Graph &g);

/// Two adjacent centers, each with at least one end, and nothing else.
std::optional<MulTable> recognize_double_star(const Graph &g);

/// K_{p,q} with p, q >= 2 plus pendant ends.
PatternVerdict recognize_complete_bipartite_plus_ends(const Graph &g);

/// K_m with m >= 3 plus pendant ends.
PatternVerdict recognize_complete_plus_ends(const Graph &g);

/// First recognizer that answers, in the order star, double star, complete,
/// complete bipartite. A realizable=true verdict always carries a table that
/// passed verify_witness; a failed verification yields None.
PatternVerdict recognize_patterns(const Graph &g);

/// Adds a twin y = n of x. Throws TableError unless verify_witness(g, t).
std::pair<Graph, MulTable> duplicate_vertex(const Graph &g, const MulTable &t, Vertex x);

/// Every twin pair, ordered by degree of the twins, then (x, y).
std::vector<DuplicationPair> duplication_pairs(const Graph &g);
std::optional<DuplicationPair> find_duplication_parent(const Graph &g);

Graph emanate_end(const Graph &g, Vertex x);

/// nullopt when g fails star or x is not of maximum degree; otherwise
/// whether the graph with an end at x satisfies star.
std::optional<bool> lemma_end_preserves_star(const Graph &g, Vertex x);

} // namespace zdg
