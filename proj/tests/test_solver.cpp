#include "doctest.h"
#include "helpers.hpp"
#include "zdg/conditions.hpp"
#include "zdg/enumeration.hpp"
#include "zdg/errors.hpp"
#include "zdg/solver.hpp"

using namespace zdg;
using namespace zdg::test;

namespace {

void check_sat_table(const Graph &g, const MulTable &t)
{
    REQUIRE(verify_witness(g, t).ok);
    REQUIRE(check_star_condition(g).star_ok);
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a; b < g.order(); ++b) {
            if (a != b && g.adjacent(a, b))
                continue;
            Element ab = t.at(Element::vertex(a), Element::vertex(b));
            REQUIRE(candidate_products(g, a, b).contains(ab));
        }
    for (int x = 0; x < t.size(); ++x)
        REQUIRE(t.raw(0, x) == 0);
}

} // namespace

TEST_SUITE("solver") {

TEST_CASE("small cases")
{
    auto k2 = find_realization(Graph(2, {{0, 1}}));
    REQUIRE(is_sat(k2));
    CHECK(std::get<SatCertificate>(k2).table == MulTable::null_table(2));

    auto k16 = find_realization(star(6));
    REQUIRE(is_sat(k16));
    check_sat_table(star(6), std::get<SatCertificate>(k16).table);

    Graph g319 = fixture_graph("G319");
    auto c319 = find_realization(g319);
    REQUIRE(is_sat(c319));
    check_sat_table(g319, std::get<SatCertificate>(c319).table);

    auto c600 = find_realization(fixture_graph("G600"));
    CHECK(is_exhaustive_unsat(c600));
    CHECK(std::get<UnsatCertificate>(c600).nodes_explored > 0);
}

TEST_CASE("an empty candidate set is an immediate exhaustive refutation")
{
    auto c = find_realization(cycle(6));
    REQUIRE(is_exhaustive_unsat(c));
    CHECK(std::get<UnsatCertificate>(c).nodes_explored == 0);
}

TEST_CASE("budget exhaustion is never exhaustive")
{
    auto c = find_realization(fixture_graph("G600"), Budget::nodes(1));
    REQUIRE_FALSE(is_sat(c));
    CHECK_FALSE(std::get<UnsatCertificate>(c).exhaustive);
}

TEST_CASE("disconnected input")
{
    CHECK_THROWS_AS(find_realization(Graph(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("agrees with brute force on every connected graph up to 4 vertices")
{
    int checked = 0;
    for (int n = 1; n <= 4; ++n) {
        const std::uint32_t limit = 1u << (n * (n - 1) / 2);
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!is_connected(g))
                continue;
            auto c = find_realization(g);
            CAPTURE(to_string(g));
            REQUIRE((is_sat(c) || is_exhaustive_unsat(c)));
            REQUIRE(is_sat(c) == brute_realizable(g));
            if (is_sat(c))
                check_sat_table(g, std::get<SatCertificate>(c).table);
            ++checked;
        }
    }
    // labeled connected graphs on 1..4 vertices: 1 + 1 + 4 + 38
    CHECK(checked == 44);
}

TEST_CASE("every solution up to 6 vertices is sound and respects the candidate sets")
{
    for (int n = 2; n <= 6; ++n)
        for (const Graph &g : enumerate_connected(n)) {
            auto c = find_realization(g);
            REQUIRE((is_sat(c) || is_exhaustive_unsat(c)));
            if (is_sat(c))
                check_sat_table(g, std::get<SatCertificate>(c).table);
        }
}

TEST_CASE("the search is deterministic")
{
    Graph g = fixture_graph("G1024");
    auto a = find_realization(g), b = find_realization(g);
    CHECK(std::get<UnsatCertificate>(a).nodes_explored == std::get<UnsatCertificate>(b).nodes_explored);
}

} // TEST_SUITE solver
