#pragma once

#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

inline constexpr int kMaxEnumerationOrder = 7;

/// One canonical representative per isomorphism class of graphs on n
/// vertices, sorted by canonical code. Throws std::out_of_range unless
/// 1 <= n <= kMaxEnumerationOrder.
std::vector<Graph> enumerate_all(int n);

/// As enumerate_all, restricted to connected graphs.
std::vector<Graph> enumerate_connected(int n);

} // namespace zdg
