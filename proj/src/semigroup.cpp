#include "zdg/semigroup.hpp"

#include <sstream>

#include "zdg/errors.hpp"

namespace zdg {

std::vector<Element> ElementSet::members() const
{
    std::vector<Element> out;
    for (Bits rest = bits_; rest != 0; rest = static_cast<Bits>(rest & (rest - 1u)))
        out.push_back(Element::from_code(std::countr_zero(rest)));
    return out;
}

MulTable::MulTable(int n) : n_(n)
{
    if (n < 1 || n > kMaxVertices)
        throw TableError("table order must be in 1.." + std::to_string(kMaxVertices));
    for (auto &row : cells_)
        row.fill(kUnassigned);
    for (int i = 0; i <= n_; ++i) {
        cells_[0][i] = 0;
        cells_[i][0] = 0;
    }
}

MulTable MulTable::null_table(int n)
{
    MulTable t(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            t.cells_[i][j] = 0;
    return t;
}

void MulTable::check(Element e) const
{
    if (e.code() < 0 || e.code() > n_)
        throw TableError("element " + std::to_string(e.code()) + " outside table of order " + std::to_string(n_));
}

std::optional<Element> MulTable::get(Element x, Element y) const
{
    check(x);
    check(y);
    std::int8_t c = cells_[x.code()][y.code()];
    if (c == kUnassigned)
        return std::nullopt;
    return Element::from_code(c);
}

Element MulTable::at(Element x, Element y) const
{
    auto v = get(x, y);
    if (!v)
        throw TableError("product " + to_string(x) + "·" + to_string(y) + " is unassigned");
    return *v;
}

void MulTable::set(Element x, Element y, Element value)
{
    set_entry(x, y, value);
    set_entry(y, x, value);
}

void MulTable::set_entry(Element x, Element y, Element value)
{
    check(x);
    check(y);
    check(value);
    if ((x.is_zero() || y.is_zero()) && !value.is_zero())
        throw TableError("products with zero must be zero");
    cells_[x.code()][y.code()] = static_cast<std::int8_t>(value.code());
}

void MulTable::unset(Element x, Element y)
{
    check(x);
    check(y);
    if (x.is_zero() || y.is_zero())
        return;
    cells_[x.code()][y.code()] = kUnassigned;
    cells_[y.code()][x.code()] = kUnassigned;
}

bool MulTable::is_total() const
{
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= n_; ++j)
            if (cells_[i][j] == kUnassigned)
                return false;
    return true;
}

ElementSet candidate_products(const Graph &g, Vertex a, Vertex b)
{
    VertexSet need = g.row(a) | g.row(b);
    ElementSet out;
    if (a == b)
        out.insert(Element::zero());
    for (Vertex c = 0; c < g.order(); ++c)
        if (need.is_subset_of(closed_neighborhood(g, c)))
            out.insert(Element::vertex(c));
    return out;
}

std::vector<CandidateSet> compute_candidates(const Graph &g)
{
    if (!is_connected(g))
        throw PreconditionError("compute_candidates: graph must be connected");
    std::vector<CandidateSet> out;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a; b < g.order(); ++b)
            if (a == b || !g.adjacent(a, b))
                out.push_back({{a, b}, candidate_products(g, a, b)});
    return out;
}

Spectrum row_spectrum(const MulTable &t, Element x)
{
    Spectrum out;
    out.reserve(t.order());
    for (Vertex v = 0; v < t.order(); ++v)
        out.push_back(t.at(x, Element::vertex(v)));
    return out;
}

std::optional<Triple> first_associativity_violation(const MulTable &t)
{
    if (!t.is_total())
        throw TableError("associativity test needs a total table");
    const int size = t.size();
    std::optional<Triple> first;
    for (int a = 1; a < size; ++a) {
        // Light's a-table: row x, column y holds x·(a·y) versus (x·a)·y.
        for (int x = 1; x < size; ++x) {
            int xa = t.raw(x, a);
            for (int y = 1; y < size; ++y) {
                int left = t.raw(xa, y);
                int right = t.raw(x, t.raw(a, y));
                if (left != right) {
                    Triple found{Element::from_code(x), Element::from_code(a), Element::from_code(y)};
                    if (!first || found < *first)
                        first = found;
                    break;
                }
            }
        }
    }
    return first;
}

bool is_associative(const MulTable &t)
{
    return !first_associativity_violation(t).has_value();
}

Graph graph_of_table(const MulTable &t)
{
    if (!t.is_total())
        throw TableError("graph_of_table needs a total table");
    Graph g(t.order());
    for (Vertex u = 0; u < t.order(); ++u)
        for (Vertex v = u + 1; v < t.order(); ++v)
            if (t.raw(u + 1, v + 1) == 0)
                g.add_edge(u, v);
    return g;
}

WitnessCheck verify_witness(const Graph &g, const MulTable &t)
{
    if (g.order() != t.order())
        throw TableError("table order " + std::to_string(t.order()) + " does not match graph order " +
                         std::to_string(g.order()));
    if (!t.is_total())
        throw TableError("witness table is partial");

    const int size = t.size();
    for (int x = 0; x < size; ++x) {
        if (t.raw(0, x) != 0 || t.raw(x, 0) != 0)
            return {false, "zero row or column has a nonzero entry", std::nullopt};
        for (int y = x + 1; y < size; ++y)
            if (t.raw(x, y) != t.raw(y, x))
                return {false,
                        "not commutative at " + to_string(Element::from_code(x)) + "," +
                            to_string(Element::from_code(y)),
                        std::nullopt};
    }

    for (int x = 1; x < size; ++x) {
        bool annihilated = false;
        for (int y = 1; y < size && !annihilated; ++y)
            annihilated = t.raw(x, y) == 0;
        if (!annihilated)
            return {false, "vertex " + to_string(Element::from_code(x)) + " is not a zero-divisor", std::nullopt};
    }

    Graph induced = graph_of_table(t);
    if (!(induced == g)) {
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (induced.adjacent(u, v) != g.adjacent(u, v)) {
                    std::ostringstream os;
                    os << "zero pattern differs from graph at " << u << "," << v << " (product "
                       << to_string(t.at(Element::vertex(u), Element::vertex(v))) << ")";
                    return {false, os.str(), std::nullopt};
                }
    }

    if (auto bad = first_associativity_violation(t)) {
        std::ostringstream os;
        os << "not associative at (" << to_string(bad->x) << "," << to_string(bad->y) << "," << to_string(bad->z)
           << ")";
        return {false, os.str(), bad};
    }
    return {true, "ok", std::nullopt};
}

MulTable permute_table(const MulTable &t, const std::vector<Vertex> &perm)
{
    if (static_cast<int>(perm.size()) != t.order())
        throw TableError("permutation size mismatch");
    auto map = [&](int code) { return code <= 0 ? code : perm[code - 1] + 1; };
    MulTable out(t.order());
    for (int x = 1; x < t.size(); ++x)
        for (int y = 1; y < t.size(); ++y) {
            int v = t.raw(x, y);
            if (v != MulTable::kUnassigned)
                out.set_entry(Element::from_code(map(x)), Element::from_code(map(y)), Element::from_code(map(v)));
        }
    return out;
}

std::string to_string(Element e)
{
    return e.is_zero() ? "0" : "v" + std::to_string(e.vertex());
}

} // namespace zdg
