#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zdg {

inline constexpr int kMaxVertices = 12;

using Vertex = int;

/// Bitmask over vertex indices 0..kMaxVertices-1.
class VertexSet {
public:
    using Bits = std::uint16_t;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Bits bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs)
            insert(v);
    }

    static constexpr VertexSet single(Vertex v) { return VertexSet(static_cast<Bits>(1u << v)); }
    static constexpr VertexSet range(int n) { return VertexSet(static_cast<Bits>((1u << n) - 1u)); }

    constexpr Bits bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
    constexpr void insert(Vertex v) { bits_ = static_cast<Bits>(bits_ | (1u << v)); }
    constexpr void erase(Vertex v) { bits_ = static_cast<Bits>(bits_ & ~(1u << v)); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Smallest member; undefined on an empty set.
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(static_cast<Bits>(bits_ | o.bits_)); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(static_cast<Bits>(bits_ & o.bits_)); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(static_cast<Bits>(bits_ & ~o.bits_)); }
    constexpr VertexSet &operator|=(VertexSet o) { bits_ = static_cast<Bits>(bits_ | o.bits_); return *this; }
    constexpr VertexSet &operator&=(VertexSet o) { bits_ = static_cast<Bits>(bits_ & o.bits_); return *this; }

    constexpr auto operator<=>(const VertexSet &) const = default;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(Bits rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator &operator++() { rest_ = static_cast<Bits>(rest_ & (rest_ - 1u)); return *this; }
        constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
        constexpr bool operator==(const iterator &) const = default;
    private:
        Bits rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    Bits bits_ = 0;
};

/// Simple undirected graph on at most kMaxVertices vertices, stored as
/// symmetric adjacency rows with an empty diagonal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>> &edges);

    int order() const { return n_; }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
    VertexSet row(Vertex v) const { return rows_[v]; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    int edge_count() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    /// Graph with vertex v deleted; later vertices shift down by one.
    Graph without_vertex(Vertex v) const;
    /// Relabels vertex v as perm[v].
    Graph permuted(const std::vector<Vertex> &perm) const;
    /// Graph with a new vertex n adjacent to `neighbors`.
    Graph with_vertex(VertexSet neighbors) const;

    friend bool operator==(const Graph &a, const Graph &b);

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> rows_{};
};

/// Shortest-path length; infinite between different components.
class Distance {
public:
    static constexpr Distance infinite() { return Distance(); }
    constexpr explicit Distance(int hops) : hops_(hops) {}

    constexpr bool is_infinite() const { return hops_ < 0; }
    constexpr int hops() const
    {
        if (is_infinite())
            throw std::logic_error("infinite distance has no hop count");
        return hops_;
    }

    constexpr bool operator==(const Distance &) const = default;

private:
    constexpr Distance() = default;
    int hops_ = -1;
};

VertexSet open_neighborhood(const Graph &g, Vertex v);
VertexSet closed_neighborhood(const Graph &g, Vertex v);
bool is_connected(const Graph &g);
Distance distance(const Graph &g, Vertex u, Vertex v);
/// All-pairs distances by repeated frontier expansion.
std::vector<std::vector<Distance>> distance_matrix(const Graph &g);
int degree(const Graph &g, Vertex v);
int max_degree(const Graph &g);

std::string to_string(const Graph &g);

} // namespace zdg
