#include "generators.hpp"

#include "sqchoose/discharging.hpp"
#include "sqchoose/sparsity.hpp"

#include <doctest.h>

#include <sstream>

using namespace sqchoose;

namespace {

Graph complete(int n)
{
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return Graph::from_edges(n, edges);
}

Graph subdivide_times(Graph g, VertexId u, VertexId v, int times)
{
    for (int i = 0; i < times; ++i) {
        g = testing::subdivide(g, u, v);
        u = g.vertex_count() - 1;
    }
    return g;
}

RotationSystem plane_k4(const Graph& k4)
{
    std::istringstream in("0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
    return parse_rotation(k4, in);
}

}  // namespace

TEST_CASE("initial charges")
{
    std::vector<Edge> c8;
    for (int i = 0; i < 8; ++i) c8.emplace_back(i, (i + 1) % 8);
    CHECK(initial_charges(Graph::from_edges(8, c8), 1).total() == Rational(16));

    std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    ChargeState s = initial_charges(Graph::from_edges(5, star), 3);
    CHECK(s.total() == Rational(8));
    CHECK(s.vertex_charge[0] == Rational(4));

    Graph k4 = complete(4);
    FaceList faces = faces_of(k4, plane_k4(k4));
    ChargeState plane = initial_charges(k4, 6, &faces);
    CHECK(plane.total() == Rational(-12));
    REQUIRE(plane.face_charge.has_value());
    for (const Rational& c : *plane.face_charge) CHECK(c == Rational(-3));

    CHECK_THROWS_AS(initial_charges(k4, 6), PreconditionError);
    CHECK_THROWS_AS(initial_charges(k4, 1, &faces), PreconditionError);
}

TEST_CASE("lemma 1 pays a 3-thread between 4-vertices 6/7")
{
    Graph g = subdivide_times(complete(5), 0, 1, 3);
    ChargeState after = discharge(g, 1);
    REQUIRE(after.thread_charge.size() == 1);
    CHECK(after.thread_charge[0] == Rational(6, 7));
    CHECK(after.vertex_charge[0] == Rational(4) - Rational(3, 7));
    CHECK(after.total() == Rational(2 * g.edge_count()));
    BoundReport report = verify_bound(after, 1);
    CHECK(report.holds());
    CHECK(report.final_vertex[5] == Rational(2) + Rational(2, 7));
}

TEST_CASE("lemma 5 pays a 2-vertex between 4-vertices up to 10/3")
{
    Graph g = subdivide_times(complete(5), 0, 1, 1);
    ChargeState after = discharge(g, 5);
    CHECK(after.vertex_charge[5] == Rational(10, 3));
    CHECK(after.total() == Rational(2 * g.edge_count()));
    CHECK(verify_bound(after, 5).holds());
}

TEST_CASE("rules refuse graphs that still hold a configuration")
{
    Graph k4 = complete(4);
    RotationSystem rot = plane_k4(k4);
    try {
        discharge(k4, 6, &rot);
        FAIL("expected ConfigurationPresent");
    } catch (const ConfigurationPresent& e) {
        CHECK(e.match().lemma == 6);
        CHECK(e.match().config == 2);
    }
    Graph pendant = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
    CHECK_THROWS_AS(discharge(pendant, 3), ConfigurationPresent);
}

TEST_CASE("a corrupted charge is reported as a violator")
{
    ChargeState state = discharge(complete(5), 2);
    CHECK(verify_bound(state, 2).holds());
    state.vertex_charge[3] = Rational(2);
    BoundReport report = verify_bound(state, 2);
    CHECK_FALSE(report.holds());
    CHECK(report.vertex_violators == std::vector<VertexId>{3});
    CHECK(report.threshold == Rational(22, 9));
}

TEST_CASE("bare cycles are exempt")
{
    std::vector<Edge> c6;
    for (int i = 0; i < 6; ++i) c6.emplace_back(i, (i + 1) % 6);
    Graph g = Graph::from_edges(6, c6);
    BoundReport report = verify_bound(initial_charges(g, 3), 3);
    CHECK(report.holds());
    CHECK(report.exempt.size() == 6);
}

TEST_CASE("discharging conserves charge and reaches the bound on config-free graphs")
{
    testing::Rng rng(51);
    for (int lemma = 1; lemma <= 5; ++lemma) {
        int free_graphs = 0;
        for (int trial = 0; trial < 600 && free_graphs < 10; ++trial) {
            const int n = 5 + static_cast<int>(rng() % 36);
            Graph g = testing::random_core_graph(n, static_cast<int>(rng() % (2 * n)), rng);
            if (!find_configs(g, lemma).empty()) continue;
            ++free_graphs;
            ChargeState before = initial_charges(g, lemma);
            ChargeState after = apply_rules(g, lemma, before, assign_sponsors(g, lemma));
            CHECK(after.total() == before.total());
            BoundReport report = verify_bound(after, lemma);
            CHECK(report.holds());
            if (report.exempt.empty()) {
                CHECK(mad_with_maximal_witness(g).value >= discharge_threshold(lemma));
            }
        }
        CHECK(free_graphs > 0);
    }
}

TEST_CASE("every plane graph of max degree 4 holds a lemma 6 configuration")
{
    testing::Rng rng(52);
    for (int trial = 0; trial < 40; ++trial) {
        testing::PlaneGraph pg = testing::medial(testing::random_apollonian(4 + static_cast<int>(rng() % 20), rng));
        FaceList faces = faces_of(pg.graph, pg.rotation);
        ChargeState before = initial_charges(pg.graph, 6, &faces);
        CHECK(before.total() == Rational(-12));
        CHECK_FALSE(find_configs(pg.graph, 6, pg.rotation).empty());
        CHECK_THROWS_AS(discharge(pg.graph, 6, &pg.rotation), ConfigurationPresent);
    }
}
