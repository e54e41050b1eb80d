#include <doctest.h>

#include <lcc/graph.hpp>

#include "support.hpp"

using namespace lcc;

TEST_SUITE("graph") {

TEST_CASE("parse and serialize round trip") {
    const auto parsed = parse_graph("# triangle plus tail\n4 4\n0 1\n1 2\n2 0\n2 3\n");
    const Graph& g = parsed.graph;
    CHECK(g.order() == 4);
    CHECK(g.size() == 4);
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(parsed.warnings.empty());
    CHECK(parse_graph(serialize_graph(g)).graph == g);
    CHECK(serialize_graph(g) == "4 4\n0 1\n0 2\n1 2\n2 3\n");
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n0 x\n"), ParseError);
    try {
        parse_graph("3 1\n0 1 2\n");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("duplicate edges are dropped with a warning") {
    const auto parsed = parse_graph("3 3\n0 1\n1 0\n1 2\n");
    CHECK(parsed.graph.size() == 2);
    REQUIRE(parsed.warnings.size() == 1);
    CHECK(parsed.warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
}

TEST_CASE("edge ids follow input order") {
    const Graph g(4, {{2, 3}, {1, 0}, {1, 2}});
    CHECK(g.edge(0) == Edge{2, 3});
    CHECK(g.edge(1) == Edge{0, 1});
    CHECK(*g.edge_id(2, 1) == 2);
    CHECK_FALSE(g.edge_id(0, 3).has_value());
}

TEST_CASE("content hash is label-order independent of edge input order") {
    const Graph a(3, {{0, 1}, {1, 2}});
    const Graph b(3, {{2, 1}, {1, 0}});
    CHECK(content_hash(a) == content_hash(b));
    CHECK(content_hash(a).size() == 16);
    CHECK(content_hash(a) != content_hash(complement(a)));
}

TEST_CASE("complement") {
    const Graph c5 = cycle_graph(5);
    const Graph co = complement(c5);
    CHECK(co.size() == 5);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) CHECK(co.adjacent(u, v) != c5.adjacent(u, v));
    CHECK(complement(co) == c5);
}

TEST_CASE("components and cutvertices") {
    const Graph g = disjoint_union(path_graph(3), complete_graph(3));
    CHECK(components(g) == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(is_connected(g));
    CHECK_THROWS_AS(cutvertices(g), GraphError);
    CHECK(cutvertices(path_graph(5)) == VertexSet{1, 2, 3});
    CHECK(cutvertices(cycle_graph(5)).empty());
}

TEST_CASE("cutvertices agree with deletion oracle") {
    Rng rng(test::kSeed);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = gnp(rng.between(1, 12), 0.25 + 0.5 * rng.unit(), rng);
        if (!is_connected(g)) continue;
        ++checked;
        CHECK(cutvertices(g) == test::brute_cutvertices(g));
    }
    CHECK(checked > 100);
}

TEST_CASE("twin reduction") {
    // K2 joined to a path end: 0,1 are true twins.
    const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const TwinReduction tr = twin_reduce(g);
    CHECK(tr.reduced.order() == 3);
    CHECK(tr.class_of[0] == tr.class_of[1]);
    CHECK(tr.representative[tr.class_of[0]] == 0);
    CHECK(is_reduced(tr.reduced));
    CHECK_FALSE(is_reduced(g));
    CHECK(twin_reduce(complete_graph(5)).reduced.order() == 1);
}

TEST_CASE("twin reduction is idempotent and keeps reduced graphs") {
    Rng rng(test::kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = gnp(rng.between(1, 10), rng.unit(), rng);
        const TwinReduction tr = twin_reduce(g);
        CHECK(is_reduced(tr.reduced));
        CHECK(twin_reduce(tr.reduced).reduced == tr.reduced);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (tr.class_of[u] != tr.class_of[v])
                    CHECK(g.adjacent(u, v) == tr.reduced.adjacent(tr.class_of[u], tr.class_of[v]));
    }
}

TEST_CASE("induced and relabel") {
    const Graph c5 = cycle_graph(5);
    const InducedSubgraph s = induced(c5, std::vector<Vertex>{4, 0, 1});
    CHECK(s.graph == path_graph(3));
    CHECK(s.original == std::vector<Vertex>{4, 0, 1});
    const Graph r = relabel(path_graph(3), std::vector<Vertex>{1, 0, 2});
    CHECK(r.adjacent(0, 1));
    CHECK(r.adjacent(0, 2));
    CHECK_FALSE(r.adjacent(1, 2));
}

TEST_CASE("universal vertices") {
    CHECK(universal_vertices(Graph(4, {{0, 1}, {0, 2}, {0, 3}})) == VertexSet{0});
    CHECK(universal_vertices(cycle_graph(4)).empty());
}

}
