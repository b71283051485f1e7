#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "zdg/graph.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

/// Search node limit; unlimited by default.
struct Budget {
    std::optional<std::uint64_t> max_nodes;

    static Budget unlimited() { return {}; }
    static Budget nodes(std::uint64_t n) { return {n}; }
};

struct SatCertificate {
    MulTable table;
    std::uint64_t nodes_explored = 0;
};

/// `exhaustive` is true only when the whole pruned search tree was explored.
struct UnsatCertificate {
    std::uint64_t nodes_explored = 0;
    bool exhaustive = false;
};

using WitnessCertificate = std::variant<SatCertificate, UnsatCertificate>;

inline bool is_sat(const WitnessCertificate &c) { return std::holds_alternative<SatCertificate>(c); }
inline bool is_exhaustive_unsat(const WitnessCertificate &c)
{
    auto *u = std::get_if<UnsatCertificate>(&c);
    return u && u->exhaustive;
}

/// Searches for a commutative semigroup table on {0} ∪ V(g) whose
/// zero-divisor graph is g.
///
/// Variables are the products of nonadjacent pairs and the squares, with
/// domains from compute_candidates. The variable with the fewest remaining
/// values is assigned first (ties to the smallest slot). After every
/// assignment the solver propagates to a fixpoint: a triple whose three
/// inner products are known fixes the fourth, and every open domain is
/// filtered to values that do not immediately break a determined triple.
/// Complete tables are re-checked with verify_witness before being returned.
///
/// Throws PreconditionError on a disconnected graph.
WitnessCertificate find_realization(const Graph &g, Budget budget = Budget::unlimited());

} // namespace zdg
