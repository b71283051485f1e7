#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// Element of S = {0} ∪ V(G). Code 0 is the zero, code v+1 is vertex v.
class Element {
public:
    static constexpr Element zero() { return Element(0); }
    static constexpr Element vertex(Vertex v) { return Element(v + 1); }
    static constexpr Element from_code(int code) { return Element(code); }

    constexpr bool is_zero() const { return code_ == 0; }
    constexpr int code() const { return code_; }
    constexpr Vertex vertex() const
    {
        if (is_zero())
            throw std::logic_error("zero is not a vertex");
        return code_ - 1;
    }

    constexpr auto operator<=>(const Element &) const = default;

private:
    constexpr explicit Element(int code) : code_(code) {}
    int code_ = 0;
};

/// Bitmask over element codes 0..kMaxVertices.
class ElementSet {
public:
    using Bits = std::uint16_t;

    constexpr ElementSet() = default;
    constexpr explicit ElementSet(Bits bits) : bits_(bits) {}

    constexpr Bits bits() const { return bits_; }
    constexpr bool contains(Element e) const { return (bits_ >> e.code()) & 1u; }
    constexpr void insert(Element e) { bits_ = static_cast<Bits>(bits_ | (1u << e.code())); }
    constexpr void erase(Element e) { bits_ = static_cast<Bits>(bits_ & ~(1u << e.code())); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    std::vector<Element> members() const;

    constexpr bool operator==(const ElementSet &) const = default;

private:
    Bits bits_ = 0;
};

class TableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiplication table on {0} ∪ V, possibly partial. Row and column of the
/// zero are fixed to zero. Entries are stored per ordered pair so that
/// non-commutative input tables can be represented and rejected.
class MulTable {
public:
    static constexpr std::int8_t kUnassigned = -1;

    MulTable() = default;
    explicit MulTable(int n);
    /// Every product is zero.
    static MulTable null_table(int n);

    int order() const { return n_; }
    int size() const { return n_ + 1; }

    std::optional<Element> get(Element x, Element y) const;
    /// Throws TableError if the entry is unassigned.
    Element at(Element x, Element y) const;
    /// Sets both x·y and y·x.
    void set(Element x, Element y, Element value);
    /// Sets x·y only (used when loading tables of unknown symmetry).
    void set_entry(Element x, Element y, Element value);
    void unset(Element x, Element y);
    bool is_total() const;

    std::int8_t raw(int x, int y) const { return cells_[x][y]; }

    friend bool operator==(const MulTable &, const MulTable &) = default;

private:
    void check(Element e) const;

    int n_ = 0;
    std::array<std::array<std::int8_t, kMaxVertices + 1>, kMaxVertices + 1> cells_{};
};

/// Row of x restricted to the vertices, in vertex order.
using Spectrum = std::vector<Element>;

/// A product slot: a nonadjacent pair a < b, or a square when a == b.
struct ProductSlot {
    Vertex a = 0;
    Vertex b = 0;

    bool is_square() const { return a == b; }
    auto operator<=>(const ProductSlot &) const = default;
};

struct CandidateSet {
    ProductSlot slot;
    ElementSet allowed;
};

/// Legal values for ab: { c : N(a) ∪ N(b) ⊆ N̄(c) } for nonadjacent a ≠ b,
/// and {0} ∪ { c : N(a) ⊆ N̄(c) } for the square a².
ElementSet candidate_products(const Graph &g, Vertex a, Vertex b);

/// One entry per nonadjacent pair and per square, ordered by slot.
std::vector<CandidateSet> compute_candidates(const Graph &g);

Spectrum row_spectrum(const MulTable &t, Element x);

struct Triple {
    Element x, y, z;
    auto operator<=>(const Triple &) const = default;
};

/// Light's test: for each a, compares the tables x·(a·y) and (x·a)·y.
/// Returns the lexicographically smallest (x, a, y) with (xa)y ≠ x(ay).
std::optional<Triple> first_associativity_violation(const MulTable &t);
bool is_associative(const MulTable &t);

/// Edge u–v iff u ≠ v and u·v = 0.
Graph graph_of_table(const MulTable &t);

struct WitnessCheck {
    bool ok = false;
    std::string diagnostic;
    std::optional<Triple> violation;

    explicit operator bool() const { return ok; }
};

/// Confirms that t is a commutative semigroup table with zero whose
/// zero-divisor graph is exactly g (same labels). Throws TableError on a
/// dimension mismatch or partial table.
WitnessCheck verify_witness(const Graph &g, const MulTable &t);

/// Relabels table entries: vertex v becomes perm[v].
MulTable permute_table(const MulTable &t, const std::vector<Vertex> &perm);

std::string to_string(Element e);

} // namespace zdg
