#include "generators.hpp"

#include "sqchoose/errors.hpp"
#include "sqchoose/listcolor.hpp"
#include "sqchoose/profile.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
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

Graph subdivide_all(const Graph& g, int times)
{
    Graph out = g;
    for (auto [u, v] : g.edges()) {
        VertexId a = u;
        for (int i = 0; i < times; ++i) {
            out = testing::subdivide(out, a, v);
            a = out.vertex_count() - 1;
        }
    }
    return out;
}

std::vector<VertexId> iota_cycle(int n)
{
    std::vector<VertexId> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[i] = i;
    return c;
}

bool proper_on_cycle(const std::vector<VertexId>& cycle, const ListAssignment& lists, const Coloring& col)
{
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        VertexId v = cycle[i];
        if (!std::binary_search(lists[v].begin(), lists[v].end(), col[v])) return false;
        if (n > 1 && col[v] == col[cycle[(i + 1) % n]]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("square of P3 gets three distinct colors")
{
    Graph p3 = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
    ListAssignment lists = uniform_lists(3, 5);
    Coloring col = color_square(p3, lists, ProfileTable().profile(1));
    CHECK(std::set<Color>(col.begin(), col.end()).size() == 3);
    CHECK(testing::verify_square_coloring(p3, lists, col));
}

TEST_CASE("cycle with 2-lists")
{
    ListAssignment same(5, std::vector<Color>{1, 2});
    auto c4 = color_cycle_2lists(iota_cycle(4), same);
    REQUIRE(c4.coloring.has_value());
    CHECK(proper_on_cycle(iota_cycle(4), same, *c4.coloring));

    auto c3 = color_cycle_2lists(iota_cycle(3), same);
    CHECK_FALSE(c3.coloring.has_value());
    CHECK(c3.obstruction == std::vector<Color>{1, 2});

    ListAssignment mixed = same;
    mixed[4] = {2, 3};
    auto c5 = color_cycle_2lists(iota_cycle(5), mixed);
    REQUIRE(c5.coloring.has_value());
    CHECK(proper_on_cycle(iota_cycle(5), mixed, *c5.coloring));
    CHECK((*c5.coloring)[4] == 3);
}

TEST_CASE("even cycles are 2-choosable for every list from four colors")
{
    std::vector<std::vector<Color>> pairs;
    for (Color a = 0; a < 4; ++a) {
        for (Color b = a + 1; b < 4; ++b) pairs.push_back({a, b});
    }
    for (int n : {2, 4, 6}) {
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            ListAssignment lists;
            for (int i : idx) lists.push_back(pairs[i]);
            auto r = color_cycle_2lists(iota_cycle(n), lists);
            REQUIRE(r.coloring.has_value());
            CHECK(proper_on_cycle(iota_cycle(n), lists, *r.coloring));
            int pos = 0;
            while (pos < n && ++idx[pos] == 6) idx[pos++] = 0;
            if (pos == n) break;
        }
    }
}

TEST_CASE("triangle plus ear needs the second ear color")
{
    ListAssignment lists{{1, 2, 3}, {1, 2, 3}, {2, 3}, {1, 2}};
    Coloring col = color_cycle_plus_ear(iota_cycle(3), 3, {0, 1}, lists);
    CHECK(col[3] == 2);
    CHECK(proper_on_cycle(iota_cycle(3), lists, col));
    CHECK(col[3] != col[0]);
    CHECK(col[3] != col[1]);
}

TEST_CASE("ear with disjoint colors takes its first color")
{
    ListAssignment lists{{1, 2, 3}, {1, 2, 3}, {1, 2}, {1, 2}, {4, 5}};
    Coloring col = color_cycle_plus_ear(iota_cycle(4), 4, {0, 1}, lists);
    CHECK(col[4] == 4);
    CHECK(proper_on_cycle(iota_cycle(4), lists, col));
}

TEST_CASE("C5 plus ear with lists of size equal to degree")
{
    testing::Rng rng(61);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        ListAssignment lists(6);
        for (VertexId v = 0; v < 6; ++v) {
            const std::size_t size = (v == 0 || v == 1) ? 3 : 2;
            std::set<Color> s;
            while (s.size() < size) s.insert(pick(rng));
            lists[v].assign(s.begin(), s.end());
        }
        Coloring col = color_cycle_plus_ear(iota_cycle(5), 5, {0, 1}, lists);
        CHECK(proper_on_cycle(iota_cycle(5), lists, col));
        CHECK(std::binary_search(lists[5].begin(), lists[5].end(), col[5]));
        CHECK(col[5] != col[0]);
        CHECK(col[5] != col[1]);
    }
}

TEST_CASE("greedy extension")
{
    // spider: center 0, legs 0-i-(i+4)
    std::vector<Edge> edges;
    for (int i = 1; i <= 4; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i + 4);
    }
    Graph g = Graph::from_edges(9, edges);
    ListAssignment lists = uniform_lists(9, 12);
    Coloring partial(9, uncolored);
    for (VertexId v = 1; v <= 8; ++v) partial[v] = v - 1;
    Coloring done = greedy_extend(g, partial, {0}, lists);
    CHECK(done[0] == 8);
    CHECK(greedy_extend(g, done, {}, lists) == done);

    ListAssignment tight = lists;
    tight[0] = {3};
    CHECK_THROWS_AS(greedy_extend(g, partial, {0}, tight), InvariantError);

    Graph path = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    Coloring c = greedy_extend(path, Coloring(4, uncolored), {0, 1, 2, 3}, uniform_lists(4, 5));
    CHECK(c == Coloring{0, 1, 2, 0});
}

TEST_CASE("exhaustive list coloring")
{
    Graph k3 = complete(3);
    CHECK_FALSE(list_color_exhaustive(k3, ListAssignment(3, {1, 2})).has_value());
    auto col = list_color_exhaustive(k3, ListAssignment(3, {1, 2, 3}));
    REQUIRE(col.has_value());
    CHECK(std::set<Color>(col->begin(), col->end()).size() == 3);
    Coloring partial{2, uncolored, uncolored};
    auto kept = list_color_exhaustive(k3, ListAssignment(3, {1, 2, 3}), partial);
    REQUIRE(kept.has_value());
    CHECK((*kept)[0] == 2);
}

TEST_CASE("list files and random lists")
{
    std::istringstream in("# lists\n0: 3 1\n1: 2 5 4\n");
    ListAssignment lists = parse_lists(in, 2);
    CHECK(lists[0] == std::vector<Color>{1, 3});
    CHECK(lists[1] == std::vector<Color>{2, 4, 5});
    std::istringstream missing("0: 1\n");
    CHECK_THROWS_AS(parse_lists(missing, 2), PreconditionError);
    std::istringstream junk("0: a\n");
    CHECK_THROWS_AS(parse_lists(junk, 1), PreconditionError);

    ListAssignment r = random_lists(50, 6, 9);
    CHECK(r == random_lists(50, 6, 9));
    CHECK(r != random_lists(50, 6, 10));
    for (const auto& l : r) {
        CHECK(l.size() == 6);
        CHECK(std::is_sorted(l.begin(), l.end()));
        CHECK(l.front() >= 0);
        CHECK(l.back() < 12);
    }
}

TEST_CASE("color_square checks its hypotheses")
{
    ProfileTable table;
    Graph k4 = complete(4);
    CHECK_THROWS_AS(color_square(k4, uniform_lists(4, 5), table.profile(1)), PreconditionError);
    CHECK_THROWS_AS(color_square(k4, uniform_lists(4, 11), table.profile(5)), PreconditionError);
    CHECK_THROWS_AS(color_square(k4, uniform_lists(4, 14), table.profile(6)), PreconditionError);
    CHECK_THROWS_AS(color_square(complete(6), uniform_lists(6, 14), table.profile(5)), PreconditionError);
    Coloring col = color_square(k4, uniform_lists(4, 12), table.profile(5));
    CHECK(testing::verify_square_coloring(k4, uniform_lists(4, 12), col));
}

TEST_CASE("cubic graphs with every edge a 2-thread are 5-colored by lemma 1")
{
    std::vector<Edge> prism{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
    for (const Graph& base : {complete(4), Graph::from_edges(6, prism)}) {
        Graph g = subdivide_all(base, 2);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            ListAssignment lists = random_lists(g.vertex_count(), 5, seed);
            Coloring col = color_square(g, lists, ProfileTable().profile(1));
            CHECK(testing::verify_square_coloring(g, lists, col));
        }
    }
}

TEST_CASE("octahedron squares are 14-choosable along the lemma 6 path")
{
    std::vector<Edge> edges;
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            if (b != a + 3) edges.emplace_back(a, b);
        }
    }
    Graph oct = Graph::from_edges(6, edges);
    std::istringstream in("0: 1 2 4 5\n1: 0 5 3 2\n2: 0 1 3 4\n3: 1 5 4 2\n4: 0 2 3 5\n5: 0 4 3 1\n");
    RotationSystem rot = parse_rotation(oct, in);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ListAssignment lists = random_lists(6, 14, seed);
        Coloring col = color_square(oct, lists, ProfileTable().profile(6), &rot);
        CHECK(testing::verify_square_coloring(oct, lists, col));
    }
}

TEST_CASE("random hypothesis graphs are colored for every profile")
{
    testing::Rng rng(62);
    ProfileTable table;
    for (int lemma = 1; lemma <= 5; ++lemma) {
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = testing::random_profile_graph(lemma, rng, 150);
            ListAssignment lists = random_lists(g.vertex_count(), table.profile(lemma).k, rng());
            Coloring col = color_square(g, lists, table.profile(lemma));
            CHECK(testing::verify_square_coloring(g, lists, col));
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        testing::PlaneGraph pg = testing::random_lemma6_graph(rng, 150);
        ListAssignment lists = random_lists(pg.graph.vertex_count(), 14, rng());
        Coloring col = color_square(pg.graph, lists, table.profile(6), &pg.rotation);
        CHECK(testing::verify_square_coloring(pg.graph, lists, col));
    }
}
