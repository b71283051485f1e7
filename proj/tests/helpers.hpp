#pragma once

// Shared builders and brute-force oracles for the test programs. The oracles
// deliberately avoid the library's pruning and canonical labeling.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "zdg/fixtures.hpp"
#include "zdg/graph.hpp"
#include "zdg/semigroup.hpp"

namespace zdg::test {

inline std::string fixture_path(const std::string &name)
{
    return std::string(ZDG_FIXTURE_DIR) + "/" + name + ".json";
}

inline FixtureEntry fixture(const std::string &name) { return load_fixture(fixture_path(name)); }
inline Graph fixture_graph(const std::string &name) { return fixture(name).graph; }

inline Graph cycle(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

/// K_{1,k} with center 0.
inline Graph star(int k)
{
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i)
        g.add_edge(0, i);
    return g;
}

inline Graph complete(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

/// Table from rows of space-separated entries; `labels` names the vertices
/// in order, "0" is the zero.
inline MulTable table_from_rows(const std::string &labels, const std::vector<std::string> &rows)
{
    auto split = [](const std::string &s) {
        std::vector<std::string> out;
        std::size_t i = 0;
        while (i < s.size()) {
            std::size_t j = s.find(' ', i);
            if (j == std::string::npos)
                j = s.size();
            if (j > i)
                out.push_back(s.substr(i, j - i));
            i = j + 1;
        }
        return out;
    };
    auto names = split(labels);
    auto code = [&](const std::string &e) {
        if (e == "0")
            return 0;
        auto it = std::find(names.begin(), names.end(), e);
        if (it == names.end())
            throw TableError("unknown entry " + e);
        return static_cast<int>(it - names.begin()) + 1;
    };
    MulTable t(static_cast<int>(names.size()));
    for (std::size_t x = 0; x < rows.size(); ++x) {
        auto cells = split(rows[x]);
        for (std::size_t y = 0; y < cells.size(); ++y)
            t.set_entry(Element::vertex(static_cast<Vertex>(x)), Element::vertex(static_cast<Vertex>(y)),
                        Element::from_code(code(cells[y])));
    }
    return t;
}

/// Adjacency as a bitmask over the upper triangle, pairs in (i, j) order.
inline std::uint32_t edge_mask(const Graph &g)
{
    std::uint32_t mask = 0;
    int bit = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j, ++bit)
            if (g.adjacent(i, j))
                mask |= 1u << bit;
    return mask;
}

inline Graph graph_from_mask(int n, std::uint32_t mask)
{
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u)
                g.add_edge(i, j);
    return g;
}

/// Smallest edge mask over all n! relabelings.
inline std::uint32_t brute_canonical(const Graph &g)
{
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do
        best = std::min(best, edge_mask(g.permuted(perm)));
    while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool brute_isomorphic(const Graph &a, const Graph &b)
{
    return a.order() == b.order() && brute_canonical(a) == brute_canonical(b);
}

struct ClassCounts {
    int all = 0;
    int connected = 0;
};

/// Counts isomorphism classes by scanning every labeled graph.
inline ClassCounts brute_class_counts(int n)
{
    std::set<std::uint32_t> all, connected;
    const std::uint32_t limit = 1u << (n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        Graph g = graph_from_mask(n, mask);
        std::uint32_t c = brute_canonical(g);
        all.insert(c);
        if (is_connected(g))
            connected.insert(c);
    }
    return {static_cast<int>(all.size()), static_cast<int>(connected.size())};
}

/// Plain triple loop, no Light's-test structure.
inline bool brute_associative(const MulTable &t)
{
    for (int x = 0; x < t.size(); ++x)
        for (int y = 0; y < t.size(); ++y)
            for (int z = 0; z < t.size(); ++z) {
                int xy = t.raw(x, y), yz = t.raw(y, z);
                if (t.raw(xy, z) != t.raw(x, yz))
                    return false;
            }
    return true;
}

/// Tries every symmetric table with the zero pattern of g: adjacent pairs
/// multiply to 0, nonadjacent pairs to any vertex, squares to anything.
inline bool brute_realizable(const Graph &g)
{
    const int n = g.order();
    std::vector<std::pair<int, int>> slots;
    std::vector<int> range;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            if (a != b && g.adjacent(a, b))
                continue;
            slots.emplace_back(a, b);
            range.push_back(a == b ? n + 1 : n);
        }
    std::vector<int> digit(slots.size(), 0);
    MulTable t = MulTable::null_table(n);
    while (true) {
        for (std::size_t i = 0; i < slots.size(); ++i) {
            auto [a, b] = slots[i];
            // squares: digit 0 is zero; nonadjacent pairs start at vertex 0
            int code = a == b ? digit[i] : digit[i] + 1;
            t.set(Element::vertex(a), Element::vertex(b), Element::from_code(code));
        }
        if (brute_associative(t))
            return true;
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == range[i])
            digit[i++] = 0;
        if (i == digit.size())
            return false;
    }
}

} // namespace zdg::test
