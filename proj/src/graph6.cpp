#include "zdg/graph6.hpp"

namespace zdg {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

} // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw FormatError("graph6: empty string");

    int first = static_cast<unsigned char>(text[0]);
    if (first < kBias || first > 126)
        throw FormatError("graph6: bad size byte");
    if (first == 126)
        throw FormatError("graph6: multi-byte orders are not supported");
    int n = first - kBias;
    if (n < 1 || n > kMaxVertices)
        throw FormatError("graph6: order " + std::to_string(n) + " out of range 1.." + std::to_string(kMaxVertices));

    int pairs = n * (n - 1) / 2;
    std::size_t body_len = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() != 1 + body_len)
        throw FormatError("graph6: expected " + std::to_string(1 + body_len) + " bytes, got " + std::to_string(text.size()));

    Graph g(n);
    int bit = 0;
    for (std::size_t i = 0; i < body_len; ++i) {
        int c = static_cast<unsigned char>(text[1 + i]);
        if (c < kBias || c > 126)
            throw FormatError("graph6: byte out of printable range");
        int word = c - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (word >> k) & 1;
            if (bit >= pairs) {
                if (set)
                    throw FormatError("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
                int j = 1;
                int base = 0;
                while (base + j <= bit) {
                    base += j;
                    ++j;
                }
                g.add_edge(bit - base, j);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph &g)
{
    std::string out;
    out.push_back(static_cast<char>(g.order() + kBias));
    int word = 0;
    int filled = 0;
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + kBias));
                word = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
    return out;
}

} // namespace zdg
