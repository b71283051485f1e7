#include "zdg/conditions.hpp"

#include "zdg/errors.hpp"

namespace zdg {

namespace {

void require_connected(const Graph &g, const char *what)
{
    if (!is_connected(g))
        throw PreconditionError(std::string(what) + ": graph must be connected");
}

bool reachable_without_edge(const Graph &g, Vertex u, Vertex v)
{
    Graph cut = g;
    cut.remove_edge(u, v);
    return !distance(cut, u, v).is_infinite();
}

} // namespace

bool check_diameter3(const Graph &g)
{
    require_connected(g, "check_diameter3");
    for (const auto &row : distance_matrix(g))
        for (Distance d : row)
            if (d.hops() > 3)
                return false;
    return true;
}

std::vector<VertexPair> core_edges(const Graph &g)
{
    std::vector<VertexPair> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.row(u))
            if (u < v && reachable_without_edge(g, u, v))
                out.emplace_back(u, v);
    return out;
}

bool check_core_condition(const Graph &g)
{
    require_connected(g, "check_core_condition");
    auto edges = core_edges(g);
    if (edges.empty())
        return true;

    Graph core(g.order());
    VertexSet core_vertices;
    for (auto [u, v] : edges) {
        core.add_edge(u, v);
        core_vertices.insert(u);
        core_vertices.insert(v);
    }

    for (Vertex v = 0; v < g.order(); ++v)
        if (!core_vertices.contains(v) && degree(g, v) != 1)
            return false;

    for (auto [u, v] : edges) {
        VertexSet nu = core.row(u) - VertexSet::single(v);
        VertexSet nv = core.row(v) - VertexSet::single(u);
        if (!(nu & nv).empty())
            continue;
        bool square = false;
        for (Vertex w : nu)
            if (!(core.row(w) & nv).empty()) {
                square = true;
                break;
            }
        if (!square)
            return false;
    }
    return true;
}

VertexSet star_witnesses(const Graph &g, Vertex x, Vertex y)
{
    VertexSet need = g.row(x) | g.row(y);
    VertexSet out;
    for (Vertex z = 0; z < g.order(); ++z)
        if (need.is_subset_of(closed_neighborhood(g, z)))
            out.insert(z);
    return out;
}

ConditionReport check_star_condition(const Graph &g)
{
    require_connected(g, "check_star_condition");
    ConditionReport report;
    report.connected = true;
    report.star_ok = true;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y) {
            if (g.adjacent(x, y))
                continue;
            VertexSet w = star_witnesses(g, x, y);
            report.star_witnesses.emplace(VertexPair{x, y}, w);
            if (w.empty() && report.star_ok) {
                report.star_ok = false;
                report.failing_pair = VertexPair{x, y};
            }
        }
    return report;
}

ConditionReport check_all_conditions(const Graph &g)
{
    if (!is_connected(g))
        return ConditionReport{};
    ConditionReport report = check_star_condition(g);
    report.diameter3 = check_diameter3(g);
    report.core_ok = check_core_condition(g);
    return report;
}

} // namespace zdg
