#include <ramsey/errors.hh>
#include <ramsey/families.hh>
#include <ramsey/graph.hh>
#include <ramsey/graph6.hh>

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

using namespace ramsey;
using std::string;

namespace
{
    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        GraphBuilder b{ n };
        for (int v = 1 ; v < n ; ++v)
            for (int u = 0 ; u < v ; ++u)
                if (coin(rng))
                    b.add_edge(u, v);
        return std::move(b).build();
    }

    auto k(int n) -> Graph { return build_named(Complete{ n }); }
}

TEST_CASE("vertex sets")
{
    VertexSet s(130, { 0, 63, 64, 129 });
    CHECK(s.count() == 4);
    CHECK(s.first() == 0);
    CHECK(s.members() == std::vector<int>{ 0, 63, 64, 129 });
    s.erase(0);
    CHECK(s.first() == 63);
    CHECK((VertexSet::full(130) - s).count() == 127);
    CHECK((VertexSet(130) & s).empty());
    CHECK((VertexSet(130, { 1 }) | s).count() == 4);
}

TEST_CASE("builder rejects loops and out of range vertices")
{
    GraphBuilder b{ 4 };
    CHECK_THROWS_AS(b.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(b.add_edge(0, 4), GraphError);
    CHECK_THROWS_AS(GraphBuilder{ Graph::max_order + 1 }, GraphError);
    b.add_edge(0, 1).add_edge(1, 0);
    CHECK(std::move(b).build().edge_count() == 1);
}

TEST_CASE("adjacency is symmetric and irreflexive, handshake holds")
{
    std::mt19937_64 rng(3);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        int n = 1 + int(rng() % 140);
        auto g = random_graph(n, 0.3, rng);
        long degree_sum = 0;
        for (int v = 0 ; v < n ; ++v) {
            CHECK_FALSE(g.adjacent(v, v));
            degree_sum += g.degree(v);
            for (int u = 0 ; u < n ; ++u)
                REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("complement")
{
    CHECK(complement(k(4)) == Graph(4));
    CHECK(complement(disjoint_union(k(4), k(4))) == build_named(CompleteBipartite{ 4, 4 }));
    auto c5 = complement(build_named(Cycle{ 5 }));
    CHECK(degree_profile(c5).sequence == std::vector<int>(5, 2));
    CHECK(is_connected(c5));

    std::mt19937_64 rng(5);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = random_graph(int(rng() % 100), 0.4, rng);
        auto c = complement(g);
        CHECK(complement(c) == g);
        CHECK(edge_difference(g, c) == long(g.order()) * (g.order() - 1) / 2);
    }
}

TEST_CASE("disjoint union")
{
    auto two = disjoint_union(k(3), k(3));
    CHECK(two.order() == 6);
    CHECK(two.edge_count() == 6);
    CHECK_FALSE(two.adjacent(0, 3));
    CHECK(disjoint_union(k(5), Graph(0)) == k(5));
    CHECK(disjoint_union(k(8), k(8)).edge_count() == 56);
    CHECK_THROWS_AS(disjoint_union(Graph(300), Graph(300)), GraphError);

    std::mt19937_64 rng(9);
    auto a = random_graph(7, 0.5, rng), b = random_graph(9, 0.5, rng), c = random_graph(5, 0.5, rng);
    auto left = disjoint_union(disjoint_union(a, b), c);
    CHECK(left == disjoint_union(a, disjoint_union(b, c)));
    CHECK(left.edge_count() == a.edge_count() + b.edge_count() + c.edge_count());
}

TEST_CASE("induced subgraphs")
{
    CHECK(induced(k(5), VertexSet(5, { 0, 1, 2 })) == k(3));
    CHECK(induced(build_named(Cycle{ 6 }), VertexSet(6, { 0, 1, 2, 3 })) == build_named(Path{ 4 }));
    CHECK(induced(k(5), VertexSet(5)).order() == 0);
    CHECK_THROWS_AS(induced(k(5), VertexSet(6, { 5 })), GraphError);
}

TEST_CASE("degree profiles")
{
    auto k44 = build_named(CompleteBipartite{ 4, 4 });
    CHECK(degree_profile(k44) == DegreeProfile{ 4, 4, std::vector<int>(8, 4) });
    CHECK(degree_profile(build_tree(JoinedStars{ 7, 3 })) == DegreeProfile{ 1, 4, { 4, 3, 1, 1, 1, 1, 1 } });
    CHECK_THROWS_AS(degree_profile(Graph(0)), GraphError);
}

TEST_CASE("components and trees")
{
    auto g = disjoint_union(build_named(Path{ 3 }), k(4));
    auto parts = connected_components(g);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].members() == std::vector<int>{ 0, 1, 2 });
    CHECK(parts[1].count() == 4);
    CHECK_FALSE(is_connected(g));
    CHECK(is_tree(build_named(Path{ 6 })));
    CHECK_FALSE(is_tree(build_named(Cycle{ 6 })));
    CHECK_FALSE(is_tree(g));
}

TEST_CASE("graph6 reference encodings")
{
    // reference strings from an independent graph6 implementation
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_encode(k(4)) == "C~");
    CHECK(graph6_encode(build_named(Cycle{ 5 })) == "Dhc");
    CHECK(graph6_encode(build_named(Path{ 4 })) == "Ch");
    CHECK(graph6_encode(build_named(CompleteBipartite{ 4, 4 })) == "G?~vf_");
    CHECK(graph6_encode(build_named(Wheel{ 8 })) == "H|eKKF@");

    auto petersen = graph6_decode("IheA@GUAo");
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(degree_profile(petersen).sequence == std::vector<int>(10, 3));

    auto g = graph6_decode(">>graph6<<Fw??G\n");
    CHECK(g.order() == 7);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{ { 0, 1 }, { 0, 2 }, { 1, 2 }, { 5, 6 } });

    auto k63 = graph6_encode(k(63));
    CHECK(k63.size() == 330);
    CHECK(k63.substr(0, 6) == "~??~~~");
    CHECK(graph6_encode(Graph(64)).substr(0, 4) == "~?@?");
}

TEST_CASE("graph6 round trip")
{
    std::mt19937_64 rng(11);
    for (int n : { 0, 1, 2, 5, 62, 63, 64, 65, 200, 258, 512 }) {
        auto g = random_graph(n, 0.5, rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 errors carry offsets")
{
    auto offset_of = [] (const string & text) -> long {
        try {
            graph6_decode(text);
        }
        catch (const Graph6ParseError & e) {
            return long(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("C~~") == 2);
    CHECK(offset_of("C") == 1);
    CHECK(offset_of("C\x7f") == 1);
    CHECK(offset_of("C ") == 1);
}
