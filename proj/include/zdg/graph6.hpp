#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "zdg/graph.hpp"

namespace zdg {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decodes a graph6 string (optionally prefixed by ">>graph6<<").
/// Throws FormatError on a bad header, wrong length, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

std::string emit_graph6(const Graph &g);

} // namespace zdg
