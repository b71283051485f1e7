#include "zdg/solver.hpp"

#include <array>
#include <vector>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

constexpr int kSize = kMaxVertices + 1;

struct State {
    std::array<std::array<std::int8_t, kSize>, kSize> cell;
    std::array<std::array<std::uint16_t, kSize>, kSize> domain;
};

enum class Scan { Conflict, Changed, Stable };

class Solver {
public:
    Solver(const Graph &g, Budget budget) : g_(g), n_(g.order()), budget_(budget) {}

    WitnessCertificate run()
    {
        State s;
        for (auto &row : s.cell)
            row.fill(MulTable::kUnassigned);
        for (auto &row : s.domain)
            row.fill(0);
        for (int i = 0; i <= n_; ++i) {
            s.cell[0][i] = s.cell[i][0] = 0;
        }
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (g_.adjacent(u, v))
                    s.cell[u + 1][v + 1] = s.cell[v + 1][u + 1] = 0;

        for (const auto &cs : compute_candidates(g_)) {
            std::uint16_t allowed = cs.allowed.bits();
            // An isolated vertex is a zero-divisor only through its own square.
            if (cs.slot.is_square() && g_.row(cs.slot.a).empty())
                allowed &= 1u;
            if (allowed == 0)
                return UnsatCertificate{0, true};
            int a = cs.slot.a + 1;
            int b = cs.slot.b + 1;
            s.domain[a][b] = s.domain[b][a] = allowed;
            vars_.push_back({a, b});
        }

        bool found = solve(s);
        if (found)
            return SatCertificate{*solution_, nodes_};
        return UnsatCertificate{nodes_, !aborted_};
    }

private:
    struct Slot {
        int a, b;
    };

    static void assign(State &s, int a, int b, int value)
    {
        s.cell[a][b] = s.cell[b][a] = static_cast<std::int8_t>(value);
    }

    bool allows(const State &s, int a, int b, int value) const
    {
        return (s.domain[a][b] >> value) & 1u;
    }

    // One pass over the triples (x·y)·z = x·(y·z) with x <= z. With `apply`,
    // a triple with one side known and the other side's product open forces
    // that product; without it, nothing is written and only conflicts count.
    Scan scan(State &s, bool apply) const
    {
        bool changed = false;
        for (int y = 1; y <= n_; ++y)
            for (int x = 1; x <= n_; ++x) {
                int p = s.cell[x][y];
                if (p < 0)
                    continue;
                for (int z = x; z <= n_; ++z) {
                    int q = s.cell[y][z];
                    if (q < 0)
                        continue;
                    int lhs = s.cell[p][z];
                    int rhs = s.cell[x][q];
                    if (lhs >= 0 && rhs >= 0) {
                        if (lhs != rhs)
                            return Scan::Conflict;
                    } else if (lhs >= 0) {
                        if (!allows(s, x, q, lhs))
                            return Scan::Conflict;
                        if (apply) {
                            assign(s, x, q, lhs);
                            changed = true;
                        }
                    } else if (rhs >= 0) {
                        if (!allows(s, p, z, rhs))
                            return Scan::Conflict;
                        if (apply) {
                            assign(s, p, z, rhs);
                            changed = true;
                        }
                    }
                }
            }
        return changed ? Scan::Changed : Scan::Stable;
    }

    bool propagate(State &s) const
    {
        while (true) {
            Scan r = scan(s, true);
            if (r == Scan::Conflict)
                return false;
            if (r == Scan::Changed)
                continue;

            bool forced = false;
            for (const Slot &v : vars_) {
                if (s.cell[v.a][v.b] >= 0)
                    continue;
                std::uint16_t kept = 0;
                for (std::uint16_t rest = s.domain[v.a][v.b]; rest; rest &= rest - 1) {
                    int value = std::countr_zero(rest);
                    assign(s, v.a, v.b, value);
                    if (scan(s, false) != Scan::Conflict)
                        kept |= static_cast<std::uint16_t>(1u << value);
                    assign(s, v.a, v.b, MulTable::kUnassigned);
                }
                if (kept == 0)
                    return false;
                s.domain[v.a][v.b] = s.domain[v.b][v.a] = kept;
                if (std::popcount(kept) == 1) {
                    assign(s, v.a, v.b, std::countr_zero(kept));
                    forced = true;
                }
            }
            if (!forced)
                return true;
        }
    }

    bool solve(State &s)
    {
        if (budget_.max_nodes && nodes_ >= *budget_.max_nodes) {
            aborted_ = true;
            return false;
        }
        ++nodes_;
        if (!propagate(s))
            return false;

        const Slot *pick = nullptr;
        int best = kSize + 1;
        for (const Slot &v : vars_) {
            if (s.cell[v.a][v.b] >= 0)
                continue;
            int size = std::popcount(s.domain[v.a][v.b]);
            if (size < best) {
                best = size;
                pick = &v;
            }
        }

        if (!pick) {
            MulTable t(n_);
            for (int x = 1; x <= n_; ++x)
                for (int y = 1; y <= n_; ++y)
                    t.set_entry(Element::from_code(x), Element::from_code(y), Element::from_code(s.cell[x][y]));
            if (!verify_witness(g_, t))
                return false;
            solution_ = std::move(t);
            return true;
        }

        for (std::uint16_t rest = s.domain[pick->a][pick->b]; rest; rest &= rest - 1) {
            State child = s;
            assign(child, pick->a, pick->b, std::countr_zero(rest));
            if (solve(child))
                return true;
            if (aborted_)
                return false;
        }
        return false;
    }

    const Graph &g_;
    int n_;
    Budget budget_;
    std::vector<Slot> vars_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::optional<MulTable> solution_;
};

} // namespace

WitnessCertificate find_realization(const Graph &g, Budget budget)
{
    if (!is_connected(g))
        throw PreconditionError("find_realization: graph must be connected");
    return Solver(g, budget).run();
}

} // namespace zdg
