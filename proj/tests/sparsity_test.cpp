#include "generators.hpp"

#include "sqchoose/errors.hpp"
#include "sqchoose/sparsity.hpp"

#include <doctest.h>

#include <sstream>

using namespace sqchoose;

namespace {

Graph cycle(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete(int n)
{
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("mad of C5 with a pendant is 2 with the cycle as witness")
{
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}};
    Graph g = Graph::from_edges(6, edges);
    MadResult r = mad_exact(g);
    CHECK(r.value == Rational(2));
    CHECK(r.witness == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(mad_with_maximal_witness(g).value == Rational(2));
}

TEST_CASE("mad of small named graphs")
{
    CHECK(mad_exact(complete(4)).value == Rational(3));
    CHECK(mad_exact(complete(5)).value == Rational(4));
    CHECK(mad_exact(Graph(3)).value == Rational(0));
    CHECK(mad_exact(Graph(3)).witness.size() == 1);
    std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}};
    CHECK(mad_exact(Graph::from_edges(4, path)).value == Rational(3, 2));
    CHECK_THROWS_AS(mad_exact(Graph()), PreconditionError);
}

TEST_CASE("mad witness densities match the value")
{
    testing::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = testing::random_max4_graph(5 + static_cast<int>(rng() % 60), rng);
        MadResult exact = mad_exact(g);
        MadResult maximal = mad_with_maximal_witness(g);
        CHECK(exact.value == maximal.value);
        CHECK(induced_density(g, exact.witness) == exact.value);
        CHECK(induced_density(g, maximal.witness) == maximal.value);
        CHECK(exact.witness.size() <= maximal.witness.size());
    }
}

TEST_CASE("mad agrees with brute force on small graphs")
{
    testing::Rng rng(32);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = testing::random_max4_graph(1 + static_cast<int>(rng() % 10), rng);
        CHECK(mad_exact(g).value == testing::brute_force_mad(g));
    }
}

TEST_CASE("thresholds and table rows")
{
    CHECK(discharge_threshold(1) == Rational(16, 7));
    CHECK(discharge_threshold(5) == Rational(10, 3));
    CHECK(discharge_threshold(6) == Rational(0));
    CHECK_THROWS_AS(discharge_threshold(7), PreconditionError);
    ProfileTable table;
    CHECK(table.profile(1).k == 5);
    CHECK(table.profile(2).k == 6);
    CHECK(table.profile(3).k == 7);
    CHECK(table.profile(4).k == 8);
    CHECK(table.profile(5).k == 12);
    CHECK(table.profile(6).k == 14);
    CHECK(table.profile(6).planar_required);
    CHECK(table.profile(3).girth_threshold == 9);
}

TEST_CASE("routing picks the strongest applicable row")
{
    ProfileTable table;
    CHECK(table.route(Rational(2))->lemma == 1);
    CHECK(table.route(Rational(16, 7))->lemma == 2);
    CHECK(table.route(Rational(5, 2))->lemma == 3);
    CHECK(table.route(Rational(3))->lemma == 5);
    CHECK_FALSE(table.route(Rational(10, 3)).has_value());
    CHECK(profile_for(cycle(7))->lemma == 1);
    CHECK(profile_for(complete(4))->lemma == 5);
    CHECK_FALSE(profile_for(complete(5)).has_value());
    Graph k6 = complete(6);
    CHECK_THROWS_AS(profile_for(k6), PreconditionError);
}

TEST_CASE("profile overrides replace rows")
{
    ProfileTable table;
    std::istringstream in("lemma 1\nk 9\nmad_num 2\nmad_den 1\n\nlemma 7\nk 20\nmad_num 7\nmad_den 2\n");
    table.apply_overrides(in);
    CHECK(table.profile(1).k == 9);
    CHECK(table.profile(1).mad_threshold == Rational(2));
    CHECK(table.profile(7).k == 20);
    CHECK(table.route(Rational(2))->lemma == 2);
    CHECK(table.route(Rational(10, 3))->lemma == 7);
    std::istringstream bad("k 3\n");
    CHECK_THROWS_AS(table.apply_overrides(bad), PreconditionError);
}

TEST_CASE("girth implies a mad bound on plane graphs")
{
    testing::Rng rng(33);
    for (int g : {3, 5, 7, 9}) {
        for (int trial = 0; trial < 10; ++trial) {
            testing::PlaneGraph pg = testing::random_girth_graph(g, rng);
            Fact1Verdict verdict = check_fact1(pg.graph, pg.rotation);
            REQUIRE(verdict.girth.has_value());
            CHECK(*verdict.girth >= g);
            CHECK(verdict.holds);
            CHECK(verdict.bound == Rational(2 * *verdict.girth, *verdict.girth - 2));
        }
    }
}
