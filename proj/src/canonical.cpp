#include "zdg/canonical.hpp"

#include <algorithm>
#include <array>

#include "zdg/graph6.hpp"

namespace zdg {

namespace {

using Colouring = std::array<int, kMaxVertices>;
using Rows = std::array<VertexSet::Bits, kMaxVertices>;

int count_colours(const Colouring &c, int n)
{
    VertexSet::Bits seen = 0;
    for (int v = 0; v < n; ++v)
        seen = static_cast<VertexSet::Bits>(seen | (1u << c[v]));
    return std::popcount(seen);
}

// Splits colour classes by neighbour counts per class until stable. Colours
// stay in 0..n-1 and the relative order of existing classes is preserved.
void refine(const Graph &g, Colouring &colour)
{
    const int n = g.order();
    int classes = count_colours(colour, n);
    while (true) {
        std::array<std::array<int, kMaxVertices + 1>, kMaxVertices> sig{};
        for (Vertex v = 0; v < n; ++v) {
            sig[v][0] = colour[v];
            for (Vertex u : g.row(v))
                ++sig[v][1 + colour[u]];
        }
        std::array<Vertex, kMaxVertices> order{};
        for (int v = 0; v < n; ++v)
            order[v] = v;
        std::sort(order.begin(), order.begin() + n, [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]])
                ++rank;
            colour[order[i]] = rank;
        }
        int next = rank + 1;
        if (next == classes)
            return;
        classes = next;
    }
}

struct Search {
    const Graph &g;
    Rows best{};
    std::vector<Vertex> best_labeling;
    bool have_best = false;

    void leaf(const Colouring &colour)
    {
        const int n = g.order();
        Rows rows{};
        for (Vertex v = 0; v < n; ++v) {
            VertexSet::Bits r = 0;
            for (Vertex u : g.row(v))
                r = static_cast<VertexSet::Bits>(r | (1u << colour[u]));
            rows[colour[v]] = r;
        }
        if (!have_best || rows > best) {
            best = rows;
            best_labeling.assign(colour.begin(), colour.begin() + n);
            have_best = true;
        }
    }

    void descend(Colouring colour)
    {
        const int n = g.order();
        refine(g, colour);
        if (count_colours(colour, n) == n) {
            leaf(colour);
            return;
        }
        std::array<int, kMaxVertices> size{};
        for (int v = 0; v < n; ++v)
            ++size[colour[v]];
        int target = 0;
        while (size[target] < 2)
            ++target;

        VertexSet cell;
        for (Vertex v = 0; v < n; ++v)
            if (colour[v] == target)
                cell.insert(v);

        VertexSet tried;
        for (Vertex v : cell) {
            bool twin_of_tried = false;
            for (Vertex u : tried)
                if ((g.row(u) - VertexSet::single(v)) == (g.row(v) - VertexSet::single(u))) {
                    twin_of_tried = true;
                    break;
                }
            if (twin_of_tried)
                continue;
            tried.insert(v);

            Colouring child{};
            for (Vertex u = 0; u < n; ++u)
                child[u] = 2 * colour[u] + (colour[u] == target && u != v ? 1 : 0);
            // Compress back into 0..n-1 keeping order.
            std::array<int, 2 * kMaxVertices> remap;
            remap.fill(-1);
            for (Vertex u = 0; u < n; ++u)
                remap[child[u]] = 0;
            int next = 0;
            for (int &r : remap)
                if (r == 0)
                    r = next++;
            for (Vertex u = 0; u < n; ++u)
                child[u] = remap[child[u]];
            descend(child);
        }
    }
};

} // namespace

std::string CanonicalCode::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

Canonization canonize(const Graph &g)
{
    Search search{g};
    Colouring start{};
    search.descend(start);
    Graph canon = g.permuted(search.best_labeling);
    CanonicalCode code{emit_graph6(canon)};
    return {std::move(search.best_labeling), std::move(canon), std::move(code)};
}

CanonicalCode canonical_form(const Graph &g)
{
    return canonize(g).code;
}

} // namespace zdg
