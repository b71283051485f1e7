#include "zdg/graph.hpp"

#include <algorithm>
#include <sstream>

namespace zdg {

Graph::Graph(int n) : n_(n)
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxVertices));
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>> &edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

int Graph::edge_count() const
{
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += rows_[v].size();
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    rows_[u].insert(v);
    rows_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    rows_[u].erase(v);
    rows_[v].erase(u);
}

Graph Graph::without_vertex(Vertex v) const
{
    check_vertex(v);
    Graph out(n_ - 1);
    auto shift = [v](Vertex u) { return u < v ? u : u - 1; };
    for (Vertex u = 0; u < n_; ++u) {
        if (u == v)
            continue;
        for (Vertex w : rows_[u])
            if (w != v && u < w)
                out.add_edge(shift(u), shift(w));
    }
    return out;
}

Graph Graph::permuted(const std::vector<Vertex> &perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    Graph out(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex w : rows_[u])
            if (u < w)
                out.add_edge(perm[u], perm[w]);
    return out;
}

Graph Graph::with_vertex(VertexSet neighbors) const
{
    Graph out(n_ + 1);
    out.rows_ = rows_;
    for (Vertex u : neighbors)
        out.add_edge(u, n_);
    return out;
}

bool operator==(const Graph &a, const Graph &b)
{
    return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

VertexSet open_neighborhood(const Graph &g, Vertex v)
{
    return g.row(v);
}

VertexSet closed_neighborhood(const Graph &g, Vertex v)
{
    return g.row(v) | VertexSet::single(v);
}

namespace {

// Frontier expansion from `source`; hops[v] = -1 for unreached vertices.
std::array<int, kMaxVertices> bfs(const Graph &g, Vertex source)
{
    std::array<int, kMaxVertices> hops;
    hops.fill(-1);
    hops[source] = 0;
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    for (int level = 1; !frontier.empty(); ++level) {
        VertexSet next;
        for (Vertex u : frontier)
            next |= g.row(u);
        next = next - seen;
        for (Vertex u : next)
            hops[u] = level;
        seen |= next;
        frontier = next;
    }
    return hops;
}

} // namespace

bool is_connected(const Graph &g)
{
    auto hops = bfs(g, 0);
    return std::all_of(hops.begin(), hops.begin() + g.order(), [](int h) { return h >= 0; });
}

Distance distance(const Graph &g, Vertex u, Vertex v)
{
    int h = bfs(g, u)[v];
    return h < 0 ? Distance::infinite() : Distance(h);
}

std::vector<std::vector<Distance>> distance_matrix(const Graph &g)
{
    std::vector<std::vector<Distance>> out;
    out.reserve(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        auto hops = bfs(g, u);
        std::vector<Distance> row;
        for (Vertex v = 0; v < g.order(); ++v)
            row.push_back(hops[v] < 0 ? Distance::infinite() : Distance(hops[v]));
        out.push_back(std::move(row));
    }
    return out;
}

int degree(const Graph &g, Vertex v)
{
    return g.row(v).size();
}

int max_degree(const Graph &g)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, degree(g, v));
    return best;
}

std::string to_string(const Graph &g)
{
    std::ostringstream os;
    os << "n=" << g.order() << " {";
    bool first = true;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.row(u))
            if (u < v) {
                os << (first ? "" : " ") << u << '-' << v;
                first = false;
            }
    os << '}';
    return os.str();
}

} // namespace zdg
