#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "zdg/conditions.hpp"
#include "zdg/enumeration.hpp"
#include "zdg/patterns.hpp"
#include "zdg/solver.hpp"

using namespace zdg;
using namespace zdg::test;

namespace {

// K3 on 0,1,2 with ends 3,6 on 0, 4 on 1, 5 on 2
Graph triangle_with_ends() { return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {0, 6}}); }

// centers 0 and 1, ends 2,3 on 0 and 4,5,6 on 1
Graph double_star() { return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}}); }

// K_{1,6} with two extra edges among the leaves
Graph refined_star()
{
    Graph g = star(6);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    return g;
}

bool realizes(const Graph &g, const std::optional<MulTable> &t) { return t && verify_witness(g, *t).ok; }

} // namespace

TEST_SUITE("patterns") {

TEST_CASE("star refinement")
{
    CHECK(realizes(star(6), recognize_star_refinement(star(6))));
    CHECK(realizes(refined_star(), recognize_star_refinement(refined_star())));
    CHECK(realizes(complete(5), recognize_star_refinement(complete(5))));
    CHECK_FALSE(recognize_star_refinement(cycle(6)));
    CHECK(recognize_patterns(star(6)).family == PatternFamily::StarRefinement);
}

TEST_CASE("double star")
{
    CHECK(realizes(double_star(), recognize_double_star(double_star())));
    CHECK(realizes(path(4), recognize_double_star(path(4))));
    CHECK_FALSE(recognize_double_star(star(6)));
    CHECK_FALSE(recognize_double_star(cycle(6)));
}

TEST_CASE("complete graph plus ends")
{
    PatternVerdict v474 = recognize_complete_plus_ends(fixture_graph("G474"));
    CHECK(v474.family == PatternFamily::CompletePlusEndsAtMostTwoVertices);
    CHECK(v474.realizable == true);
    CHECK(realizes(fixture_graph("G474"), v474.constructive_table));

    PatternVerdict v475 = recognize_complete_plus_ends(fixture_graph("G475"));
    CHECK(v475.family == PatternFamily::CompletePlusEndsThreePlusVertices);
    CHECK(v475.realizable == false);
    CHECK_FALSE(v475.constructive_table);

    PatternVerdict k3 = recognize_complete_plus_ends(triangle_with_ends());
    CHECK(k3.family == PatternFamily::K3PlusEndsThreeVertices);
    CHECK(k3.realizable == true);
    CHECK(realizes(triangle_with_ends(), k3.constructive_table));

    CHECK(recognize_complete_plus_ends(cycle(6)).family == PatternFamily::None);
}

TEST_CASE("complete bipartite graph plus ends")
{
    Graph g319 = fixture_graph("G319");
    PatternVerdict v319 = recognize_complete_bipartite_plus_ends(g319);
    CHECK(v319.family == PatternFamily::CompleteBipartitePlusEndsOneVertex);
    CHECK(v319.realizable == true);
    CHECK(realizes(g319, v319.constructive_table));

    PatternVerdict v322 = recognize_complete_bipartite_plus_ends(fixture_graph("G322"));
    CHECK(v322.family == PatternFamily::BipartitePlusEndsTwoVertices);
    CHECK(v322.realizable == false);

    CHECK(recognize_complete_bipartite_plus_ends(complete(4)).family == PatternFamily::None);

    // K_{3,3} without ends
    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    PatternVerdict bare = recognize_complete_bipartite_plus_ends(k33);
    CHECK(bare.realizable == true);
    CHECK(realizes(k33, bare.constructive_table));
}

TEST_CASE("impossibility verdicts agree with the solver")
{
    CHECK(is_exhaustive_unsat(find_realization(fixture_graph("G475"))));
    CHECK(is_exhaustive_unsat(find_realization(fixture_graph("G322"))));
}

TEST_CASE("duplication")
{
    auto [k3, t3] = duplicate_vertex(Graph(2, {{0, 1}}), MulTable::null_table(2), 0);
    CHECK(k3 == complete(3));
    CHECK(t3 == MulTable::null_table(3));
    CHECK(verify_witness(k3, t3).ok);

    MulTable s3 = *recognize_star_refinement(star(3));
    auto [k14, t14] = duplicate_vertex(star(3), s3, 1);
    CHECK(k14 == star(4));
    CHECK(verify_witness(k14, t14).ok);

    MulTable bad = MulTable::null_table(2);
    bad.set(Element::vertex(0), Element::vertex(1), Element::vertex(0));
    CHECK_THROWS_AS(duplicate_vertex(Graph(2, {{0, 1}}), bad, 0), TableError);
    CHECK_THROWS_AS(duplicate_vertex(Graph(2, {{0, 1}}), MulTable::null_table(2), 2), std::out_of_range);
}

TEST_CASE("duplicating an end rebuilds a graph with an open twin")
{
    FixtureEntry f = fixture("G384");
    REQUIRE(f.table);
    REQUIRE(verify_witness(f.graph, f.table->table).ok);
    // the ends 5 and 6 (vertices 4 and 5) are open twins
    auto pair = find_duplication_parent(f.graph);
    REQUIRE(pair);
    CHECK(*pair == DuplicationPair{4, 5, TwinMode::Open});

    Graph parent = f.graph.without_vertex(pair->y);
    auto c = find_realization(parent);
    REQUIRE(is_sat(c));
    const MulTable &t = std::get<SatCertificate>(c).table;
    REQUIRE_FALSE(t.at(Element::vertex(pair->x), Element::vertex(pair->x)).is_zero());
    auto [child, table] = duplicate_vertex(parent, t, pair->x);
    CHECK(brute_isomorphic(child, f.graph));
    CHECK(verify_witness(child, table).ok);
}

TEST_CASE("twin detection")
{
    auto p = find_duplication_parent(fixture_graph("G319"));
    REQUIRE(p);
    CHECK(*p == DuplicationPair{4, 5, TwinMode::Open});

    auto k3 = find_duplication_parent(complete(3));
    REQUIRE(k3);
    CHECK(k3->mode == TwinMode::Closed);

    CHECK_FALSE(find_duplication_parent(path(4)));
    CHECK(duplication_pairs(path(4)).empty());
}

TEST_CASE("end emanation")
{
    CHECK(emanate_end(star(3), 0) == star(4));
    CHECK(brute_isomorphic(emanate_end(Graph(2, {{0, 1}}), 0), path(3)));
    CHECK_THROWS_AS(emanate_end(path(3), 3), std::out_of_range);

    Graph g145 = fixture_graph("DGSW-G145");
    Graph g163 = fixture_graph("DGSW-G163");
    bool hit504 = false, hit617 = false;
    for (Vertex x = 0; x < 6; ++x) {
        if (degree(g145, x) == max_degree(g145)) {
            CHECK(lemma_end_preserves_star(g145, x) == true);
            hit504 = hit504 || brute_isomorphic(emanate_end(g145, x), fixture_graph("G504"));
        }
        if (degree(g163, x) == max_degree(g163)) {
            CHECK(lemma_end_preserves_star(g163, x) == true);
            hit617 = hit617 || brute_isomorphic(emanate_end(g163, x), fixture_graph("G617"));
        }
    }
    CHECK(hit504);
    CHECK(hit617);
    CHECK(lemma_end_preserves_star(star(6), 0) == true);
    // not of maximum degree, and a graph failing star
    CHECK_FALSE(lemma_end_preserves_star(star(6), 1));
    CHECK_FALSE(lemma_end_preserves_star(cycle(6), 0));
}

TEST_CASE("end emanation at maximum degree preserves star up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : enumerate_connected(n))
            for (Vertex x = 0; x < n; ++x)
                if (auto r = lemma_end_preserves_star(g, x))
                    REQUIRE(*r);
}

TEST_CASE("end emanation on the four six-vertex graphs is refuted")
{
    for (const char *name : {"DGSW-G98", "DGSW-G145", "DGSW-G163", "DGSW-G181"}) {
        Graph g = fixture_graph(name);
        for (Vertex x = 0; x < g.order(); ++x)
            if (degree(g, x) == max_degree(g)) {
                CAPTURE(name);
                CAPTURE(x);
                CHECK(is_exhaustive_unsat(find_realization(emanate_end(g, x))));
            }
    }
}

TEST_CASE("random duplications verify")
{
    std::vector<std::pair<Graph, MulTable>> witnesses;
    for (int n = 2; n <= 6; ++n)
        for (const Graph &g : enumerate_connected(n))
            if (auto c = find_realization(g); is_sat(c))
                witnesses.emplace_back(g, std::get<SatCertificate>(c).table);
    REQUIRE_FALSE(witnesses.empty());

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto &[g, t] = witnesses[rng() % witnesses.size()];
        Vertex x = static_cast<Vertex>(rng() % g.order());
        auto [child, table] = duplicate_vertex(g, t, x);
        CAPTURE(to_string(g));
        CAPTURE(x);
        REQUIRE(verify_witness(child, table).ok);
        bool closed = t.at(Element::vertex(x), Element::vertex(x)).is_zero();
        REQUIRE(child.adjacent(x, g.order()) == closed);
    }
}

TEST_CASE("duplication keeps star failures")
{
    for (int n = 2; n <= 6; ++n)
        for (const Graph &g : enumerate_connected(n)) {
            if (check_star_condition(g).star_ok)
                continue;
            for (Vertex x = 0; x < n; ++x) {
                REQUIRE_FALSE(check_star_condition(g.with_vertex(g.row(x))).star_ok);
                VertexSet closed = g.row(x);
                closed.insert(x);
                REQUIRE_FALSE(check_star_condition(g.with_vertex(closed)).star_ok);
            }
        }
}

TEST_CASE("recognizers agree with the solver up to 6 vertices")
{
    int answered = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : enumerate_connected(n)) {
            PatternVerdict v = recognize_patterns(g);
            if (!v.realizable)
                continue;
            ++answered;
            CAPTURE(to_string(g));
            auto c = find_realization(g);
            if (*v.realizable) {
                REQUIRE(v.constructive_table);
                REQUIRE(verify_witness(g, *v.constructive_table).ok);
                REQUIRE(is_sat(c));
            } else {
                REQUIRE(is_exhaustive_unsat(c));
            }
        }
    CHECK(answered > 0);
}

} // TEST_SUITE patterns
