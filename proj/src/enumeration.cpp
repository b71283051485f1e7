#include "zdg/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "zdg/canonical.hpp"

namespace zdg {

namespace {

void check_order(int n)
{
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::out_of_range("enumeration order must be in 1.." + std::to_string(kMaxEnumerationOrder));
}

// Every graph on n vertices is some graph on n-1 vertices plus one vertex,
// so extending each class representative by every neighbour subset reaches
// every class at least once.
std::map<CanonicalCode, Graph> classes(int n)
{
    std::map<CanonicalCode, Graph> out;
    if (n == 1) {
        Graph k1(1);
        out.emplace(canonical_form(k1), canonize(k1).graph);
        return out;
    }
    for (const auto &[code, parent] : classes(n - 1)) {
        const auto subsets = 1u << (n - 1);
        for (unsigned mask = 0; mask < subsets; ++mask) {
            Graph child = parent.with_vertex(VertexSet(static_cast<VertexSet::Bits>(mask)));
            auto c = canonize(child);
            out.try_emplace(std::move(c.code), std::move(c.graph));
        }
    }
    return out;
}

} // namespace

std::vector<Graph> enumerate_all(int n)
{
    check_order(n);
    std::vector<Graph> out;
    for (auto &[code, g] : classes(n))
        out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_connected(int n)
{
    auto all = enumerate_all(n);
    std::erase_if(all, [](const Graph &g) { return !is_connected(g); });
    return all;
}

} // namespace zdg
