#include "zdg/patterns.hpp"

#include <algorithm>

#include "zdg/conditions.hpp"

namespace zdg {

namespace {

constexpr Vertex kZero = -1;

// Table builder over vertex indices; kZero stands for the zero element.
class Builder {
public:
    explicit Builder(int n) : t_(MulTable::null_table(n)) {}

    void put(Vertex u, Vertex v, Vertex value)
    {
        t_.set(Element::vertex(u), Element::vertex(v), value == kZero ? Element::zero() : Element::vertex(value));
    }

    void put_all(VertexSet us, VertexSet vs, Vertex value)
    {
        for (Vertex u : us)
            for (Vertex v : vs)
                put(u, v, value);
    }

    const MulTable &table() const { return t_; }

private:
    MulTable t_;
};

std::optional<MulTable> verified(const Graph &g, const MulTable &t)
{
    if (verify_witness(g, t))
        return t;
    return std::nullopt;
}

struct CoreWithEnds {
    VertexSet core;
    VertexSet ends;
    // Core vertices carrying at least one end.
    VertexSet attach;
};

// Core = vertices of degree >= 2; everything else must be an end hanging
// off the core.
std::optional<CoreWithEnds> split_core(const Graph &g)
{
    CoreWithEnds out;
    for (Vertex v = 0; v < g.order(); ++v)
        (degree(g, v) >= 2 ? out.core : out.ends).insert(v);
    for (Vertex e : out.ends) {
        VertexSet nb = g.row(e);
        if (nb.size() != 1 || !nb.is_subset_of(out.core))
            return std::nullopt;
        out.attach |= nb;
    }
    return out;
}

VertexSet ends_at(const Graph &g, const CoreWithEnds &s, Vertex x)
{
    return g.row(x) & s.ends;
}

bool is_clique(const Graph &g, VertexSet vs)
{
    for (Vertex v : vs)
        if (!(vs - VertexSet::single(v)).is_subset_of(g.row(v)))
            return false;
    return true;
}

MulTable star_table(const Graph &g, Vertex c)
{
    Builder b(g.order());
    VertexSet rest = g.vertices() - VertexSet::single(c);
    for (Vertex u : rest)
        for (Vertex v : rest)
            if (u <= v && (u == v || !g.adjacent(u, v)))
                b.put(u, v, c);
    return b.table();
}

// K_m plus ends on x1 and x2. One free core vertex k0 is idempotent and
// absorbs all ends; the other free core vertices send ends across.
MulTable complete_two_table(const Graph &g, const CoreWithEnds &s, Vertex x1, Vertex x2)
{
    VertexSet free = s.core - VertexSet{x1, x2};
    Vertex k0 = free.first();
    VertexSet others = free - VertexSet::single(k0);
    VertexSet e1 = ends_at(g, s, x1);
    VertexSet e2 = ends_at(g, s, x2);

    Builder b(g.order());
    b.put(k0, k0, k0);
    b.put_all(e1, VertexSet::single(x2), x2);
    b.put_all(e2, VertexSet::single(x1), x1);
    b.put_all(e1 | e2, VertexSet::single(k0), k0);
    b.put_all(e1, others, x2);
    b.put_all(e2, others, x1);
    b.put_all(e1, e1, e1.first());
    b.put_all(e2, e2, e2.first());
    b.put_all(e1, e2, k0);
    return b.table();
}

// Triangle with ends on every corner: corners idempotent, an end kills its
// own corner and fixes the other two.
MulTable triangle_table(const Graph &g, const CoreWithEnds &s)
{
    std::array<Vertex, 3> x{};
    std::array<VertexSet, 3> e{};
    int k = 0;
    for (Vertex v : s.core) {
        x[k] = v;
        e[k] = ends_at(g, s, v);
        ++k;
    }

    Builder b(g.order());
    for (int i = 0; i < 3; ++i) {
        b.put(x[i], x[i], x[i]);
        b.put_all(e[i], e[i], e[i].first());
        for (int j = 0; j < 3; ++j) {
            if (j == i)
                continue;
            b.put_all(e[i], VertexSet::single(x[j]), x[j]);
            if (j > i)
                b.put_all(e[i], e[j], x[3 - i - j]);
        }
    }
    return b.table();
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph &g, VertexSet core)
{
    VertexSet a = VertexSet::single(core.first());
    VertexSet b;
    for (bool grew = true; grew;) {
        grew = false;
        for (Vertex v : a) {
            VertexSet nb = (g.row(v) & core) - b;
            if (!nb.empty()) {
                b |= nb;
                grew = true;
            }
        }
        for (Vertex v : b) {
            VertexSet nb = (g.row(v) & core) - a;
            if (!nb.empty()) {
                a |= nb;
                grew = true;
            }
        }
    }
    if ((a | b) != core || !(a & b).empty())
        return std::nullopt;
    for (Vertex v : a)
        if ((g.row(v) & core) != b)
            return std::nullopt;
    for (Vertex v : b)
        if ((g.row(v) & core) != a)
            return std::nullopt;
    return std::make_pair(a, b);
}

// K_{p,q} with ends on x in part a. x is nilpotent and x·a' = x on the rest
// of its part; ends send that rest to x and the other part to b0.
MulTable bipartite_table(const Graph &g, const CoreWithEnds &s, VertexSet a, VertexSet b, std::optional<Vertex> x)
{
    Builder t(g.order());
    t.put_all(b, b, b.first());
    if (!x) {
        t.put_all(a, a, a.first());
        return t.table();
    }
    VertexSet rest = a - VertexSet::single(*x);
    VertexSet ends = ends_at(g, s, *x);
    t.put_all(rest, rest, rest.first());
    t.put_all(VertexSet::single(*x), rest, *x);
    t.put_all(ends, rest, *x);
    t.put_all(ends, b, b.first());
    t.put_all(ends, ends, b.first());
    return t.table();
}

} // namespace

std::string to_string(PatternFamily f)
{
    switch (f) {
    case PatternFamily::StarRefinement: return "StarRefinement";
    case PatternFamily::DoubleStar: return "DoubleStar";
    case PatternFamily::CompleteBipartitePlusEndsOneVertex: return "CompleteBipartitePlusEndsOneVertex";
    case PatternFamily::CompletePlusEndsAtMostTwoVertices: return "CompletePlusEndsAtMostTwoVertices";
    case PatternFamily::K3PlusEndsThreeVertices: return "K3PlusEndsThreeVertices";
    case PatternFamily::CompletePlusEndsThreePlusVertices: return "CompletePlusEndsThreePlusVertices";
    case PatternFamily::BipartitePlusEndsTwoVertices: return "BipartitePlusEndsTwoVertices";
    case PatternFamily::Duplication: return "Duplication";
    case PatternFamily::None: return "None";
    }
    return "None";
}

std::optional<MulTable> recognize_star_refinement(const Graph &g)
{
    for (Vertex c = 0; c < g.order(); ++c)
        if (degree(g, c) == g.order() - 1)
            return verified(g, star_table(g, c));
    return std::nullopt;
}

std::optional<MulTable> recognize_double_star(const Graph &g)
{
    auto s = split_core(g);
    if (!s || s->core.size() != 2 || s->attach != s->core)
        return std::nullopt;
    Vertex c1 = s->core.first();
    Vertex c2 = (s->core - VertexSet::single(c1)).first();
    if (!g.adjacent(c1, c2))
        return std::nullopt;
    VertexSet l1 = ends_at(g, *s, c1);
    VertexSet l2 = ends_at(g, *s, c2);

    Builder b(g.order());
    b.put(c1, c1, c1);
    b.put_all(l1, VertexSet::single(c2), c2);
    b.put_all(l2, VertexSet::single(c1), c1);
    b.put_all(l1, l1, l1.first());
    b.put_all(l2, l2, c1);
    b.put_all(l1, l2, c2);
    return verified(g, b.table());
}

PatternVerdict recognize_complete_plus_ends(const Graph &g)
{
    auto s = split_core(g);
    if (!s || s->core.size() < 3 || !is_clique(g, s->core))
        return {};

    int m = s->core.size();
    int k = s->attach.size();
    if (k >= 3 && m >= 4)
        return {PatternFamily::CompletePlusEndsThreePlusVertices, false, std::nullopt, std::nullopt};

    std::optional<MulTable> table;
    PatternFamily family = PatternFamily::CompletePlusEndsAtMostTwoVertices;
    if (k <= 1) {
        table = verified(g, star_table(g, k == 1 ? s->attach.first() : s->core.first()));
    } else if (k == 2) {
        Vertex x1 = s->attach.first();
        Vertex x2 = (s->attach - VertexSet::single(x1)).first();
        table = verified(g, complete_two_table(g, *s, x1, x2));
    } else {
        family = PatternFamily::K3PlusEndsThreeVertices;
        table = verified(g, triangle_table(g, *s));
    }
    if (!table)
        return {};
    return {family, true, std::move(table), std::nullopt};
}

PatternVerdict recognize_complete_bipartite_plus_ends(const Graph &g)
{
    auto s = split_core(g);
    if (!s || s->core.size() < 4)
        return {};
    auto parts = bipartition(g, s->core);
    if (!parts || parts->first.size() < 2 || parts->second.size() < 2)
        return {};
    if (s->attach.size() >= 2)
        return {PatternFamily::BipartitePlusEndsTwoVertices, false, std::nullopt, std::nullopt};

    auto [a, b] = *parts;
    std::optional<Vertex> x;
    if (!s->attach.empty()) {
        x = s->attach.first();
        if (!a.contains(*x))
            std::swap(a, b);
    }
    auto table = verified(g, bipartite_table(g, *s, a, b, x));
    if (!table)
        return {};
    return {PatternFamily::CompleteBipartitePlusEndsOneVertex, true, std::move(table), std::nullopt};
}

PatternVerdict recognize_patterns(const Graph &g)
{
    if (auto t = recognize_star_refinement(g))
        return {PatternFamily::StarRefinement, true, std::move(t), std::nullopt};
    if (auto t = recognize_double_star(g))
        return {PatternFamily::DoubleStar, true, std::move(t), std::nullopt};
    if (auto v = recognize_complete_plus_ends(g); v.family != PatternFamily::None)
        return v;
    return recognize_complete_bipartite_plus_ends(g);
}

std::pair<Graph, MulTable> duplicate_vertex(const Graph &g, const MulTable &t, Vertex x)
{
    if (x < 0 || x >= g.order())
        throw std::out_of_range("duplicate_vertex: vertex out of range");
    if (g.order() >= kMaxVertices)
        throw std::out_of_range("duplicate_vertex: graph already at maximum order");
    if (auto check = verify_witness(g, t); !check)
        throw TableError("duplicate_vertex: input is not a witness: " + check.diagnostic);

    const Element ex = Element::vertex(x);
    const Element sq = t.at(ex, ex);
    VertexSet nb = g.row(x);
    if (sq.is_zero())
        nb.insert(x);
    Graph out = g.with_vertex(nb);

    const int n = g.order();
    const Element ey = Element::vertex(n);
    MulTable ext(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            ext.set_entry(Element::from_code(i), Element::from_code(j), Element::from_code(t.raw(i, j)));
    for (Vertex z = 0; z < n; ++z)
        if (z != x)
            ext.set(ey, Element::vertex(z), t.at(ex, Element::vertex(z)));
    ext.set(ex, ey, sq);
    ext.set(ey, ey, sq);
    return {out, ext};
}

std::vector<DuplicationPair> duplication_pairs(const Graph &g)
{
    std::vector<DuplicationPair> out;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y) {
            if (g.adjacent(x, y)) {
                if (closed_neighborhood(g, x) == closed_neighborhood(g, y))
                    out.push_back({x, y, TwinMode::Closed});
            } else if (g.row(x) == g.row(y)) {
                out.push_back({x, y, TwinMode::Open});
            }
        }
    std::stable_sort(out.begin(), out.end(),
                     [&](const auto &p, const auto &q) { return degree(g, p.x) < degree(g, q.x); });
    return out;
}

std::optional<DuplicationPair> find_duplication_parent(const Graph &g)
{
    auto pairs = duplication_pairs(g);
    if (pairs.empty())
        return std::nullopt;
    return pairs.front();
}

Graph emanate_end(const Graph &g, Vertex x)
{
    if (x < 0 || x >= g.order())
        throw std::out_of_range("emanate_end: vertex out of range");
    return g.with_vertex(VertexSet::single(x));
}

std::optional<bool> lemma_end_preserves_star(const Graph &g, Vertex x)
{
    if (!is_connected(g) || degree(g, x) != max_degree(g) || !check_star_condition(g).star_ok)
        return std::nullopt;
    return check_star_condition(emanate_end(g, x)).star_ok;
}

} // namespace zdg
