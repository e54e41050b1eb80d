#include <doctest.h>

#include <lcc/oracle.hpp>
#include <lcc/orderings.hpp>
#include <lcc/structure.hpp>

#include <set>

#include "support.hpp"

using namespace lcc;

TEST_SUITE("oracle") {

TEST_CASE("rng streams") {
    Rng a(7), b(7), c(8);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    CHECK(Rng(7).next() != c.next());
    // First output of MT19937-64 with the reference default seed.
    CHECK(Rng(5489).next() == 14514284786278117030ull);

    Rng r(test::kSeed);
    std::set<int> seen;
    for (int i = 0; i < 2000; ++i) {
        const int x = r.between(-3, 3);
        CHECK(x >= -3);
        CHECK(x <= 3);
        seen.insert(x);
        const double u = r.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(seen.size() == 7u);
    CHECK_THROWS_AS(r.below(0), std::invalid_argument);
    CHECK_THROWS_AS(r.between(2, 1), std::invalid_argument);

    std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
    r.shuffle(v);
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("brute-force colourings of hand-checked graphs") {
    CHECK(brute_force_colourings(path_graph(3)).count == 2u);
    CHECK(brute_force_colourings(path_graph(4)).count == 2u);
    CHECK(brute_force_colourings(complete_graph(3)).count == 8u);
    CHECK(brute_force_colourings(cycle_graph(4)).count == 2u);
    CHECK(brute_force_colourings(cycle_graph(5)).count == 0u);
    CHECK(brute_force_colourings(paper_instance("claw")).count == 0u);
    CHECK(brute_force_colourings(Graph(3)).count == 1u);

    const auto k4 = brute_force_colourings(complete_graph(4), 3);
    CHECK(k4.count == 64u);
    CHECK(k4.colourings.size() == 3u);
    for (const auto& c : k4.colourings) CHECK(verify_locally_complete(complete_graph(4), c).ok);

    CHECK_THROWS_AS(brute_force_colourings(complete_graph(7)), std::length_error);
}

TEST_CASE("brute-force orderings") {
    CHECK_FALSE(brute_force_straight(cycle_graph(4)));
    CHECK(brute_force_round(cycle_graph(4)));
    const auto k3 = brute_force_straight(complete_graph(3));
    REQUIRE(k3);
    CHECK(k3->order == std::vector<Vertex>{0, 1, 2});
    CHECK(brute_force_straight(path_graph(5)));
    CHECK_FALSE(brute_force_round(paper_instance("claw")));
    CHECK(brute_force_round(paper_instance("tent")));
    CHECK_THROWS_AS(brute_force_straight(path_graph(9)), std::length_error);
}

TEST_CASE("brute-force clique cover") {
    CHECK(brute_force_clique_cover(complete_graph(4)) == 1);
    CHECK(brute_force_clique_cover(Graph(4)) == 4);
    CHECK(brute_force_clique_cover(cycle_graph(5)) == 3);
    CHECK(brute_force_clique_cover(cycle_graph(6)) == 3);
    CHECK(brute_force_clique_cover(path_graph(5)) == 3);
    CHECK_THROWS_AS(brute_force_clique_cover(Graph(15)), std::length_error);
}

TEST_CASE("fixed constructions") {
    const Graph s = staircase_graph({2, 3, 4, 5, 5, 5});
    CHECK(s.order() == 6);
    CHECK(s.size() == 9);
    CHECK(s.adjacent(0, 2));
    CHECK_FALSE(s.adjacent(0, 3));
    CHECK(s.adjacent(3, 5));
    CHECK_THROWS_AS(staircase_graph({2, 1, 2}), std::invalid_argument);

    const Graph l = labelled_graph(3, 0b101);
    CHECK(l == Graph(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS_AS(labelled_graph(3, 0b1000), std::invalid_argument);

    CHECK(paper_instance("co-C5") == complement(cycle_graph(5)));
    CHECK(paper_instance("K4") == complete_graph(4));
    CHECK_THROWS_AS(paper_instance("nope"), std::invalid_argument);
}

TEST_CASE("type templates have their type") {
    for (PigClass cls : {PigClass::Type1, PigClass::Type2, PigClass::Type3, PigClass::Type4})
        for (int k = 2; k <= 6; ++k) {
            if (k == 2 && (cls == PigClass::Type2 || cls == PigClass::Type3)) {
                CHECK_THROWS_AS(type_template(cls, k), std::invalid_argument);
                continue;
            }
            const Generated t = type_template(cls, k);
            REQUIRE(t.straight);
            CHECK(is_reduced(t.graph));
            CHECK(cutvertices(t.graph).empty());
            const auto cover = canonical_cover(t.graph, *t.straight);
            CHECK(static_cast<int>(cover.s.size()) == k);
            CHECK(classify_type(t.graph, *t.straight, cover).cls == cls);
        }
}

TEST_CASE("generator families") {
    SUBCASE("determinism") {
        for (const char* family : {"gnp", "staircase-pig", "circular-arc-pca", "bipartite-complement"}) {
            GeneratorSpec spec{.family = family, .n = 12, .p = 0.3, .seed = 99};
            CHECK(generate(spec).graph == generate(spec).graph);
        }
    }
    SUBCASE("witnesses survive relabelling") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const Generated s = generate({.family = "staircase-pig", .n = 15, .seed = seed});
            REQUIRE(s.straight);
            CHECK(verify_straight(s.graph, *s.straight).ok());
            const Generated c = generate({.family = "circular-arc-pca", .n = 15, .p = 0.2, .seed = seed});
            REQUIRE(c.round);
            CHECK(verify_round(c.graph, *c.round).ok());
        }
    }
    SUBCASE("bipartite complements") {
        CHECK(generate({.family = "bipartite-complement", .n = 6, .p = 0.0}).graph == complete_graph(6));
        const Generated g = generate({.family = "bipartite-complement", .n = 9, .p = 0.4, .seed = 3});
        REQUIRE(g.side.size() == 9u);
        for (Vertex u = 0; u < 9; ++u)
            for (Vertex v = u + 1; v < 9; ++v)
                if (g.side[u] == g.side[v]) CHECK(g.graph.adjacent(u, v));
        CHECK(clique_cover_number(g.graph) <= 2);
    }
    SUBCASE("evenly spaced arcs") {
        const Generated g = generate({.family = "circular-arc-pca", .n = 6, .p = 0.25, .shuffle = false, .even = true});
        CHECK(g.graph == cycle_graph(6));
    }
    SUBCASE("named instances with a deleted vertex") {
        const Graph g = generate({.family = "paper", .name = "F1", .drop = 0}).graph;
        CHECK(g == test::without(paper_instance("F1"), 0));
        CHECK_THROWS_AS(generate({.family = "paper", .name = "F1", .drop = 7}), std::invalid_argument);
    }
    SUBCASE("block cycles") {
        const Generated b = block_cycle(3, 3);
        REQUIRE(b.round);
        CHECK_FALSE(find_straight(b.graph));
        CHECK(pseudo_cutvertices(b.graph, *b.round).pseudo_cut.size() == 3u);
        CHECK_THROWS_AS(block_cycle(1, 3), std::invalid_argument);
    }
    CHECK_THROWS_AS(generate({.family = "unknown"}), std::invalid_argument);
}

TEST_CASE("equivalence harness") {
    std::vector<GeneratorSpec> corpus;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        corpus.push_back({.family = "gnp", .n = 7, .p = 0.5, .seed = seed});
        corpus.push_back({.family = "staircase-pig", .n = 14, .seed = seed});
        corpus.push_back({.family = "circular-arc-pca", .n = 12, .p = 0.2, .seed = seed});
        corpus.push_back({.family = "weak-blocks", .seed = seed, .blocks = 4});
    }
    corpus.push_back({.family = "paper", .name = "F2", .expect = false});
    corpus.push_back({.family = "type-template", .type = "Type1", .k = 4, .expect = true});
    const HarnessReport ok = equivalence_harness(corpus);
    CHECK(ok.instances == corpus.size());
    CHECK(ok.brute_forced > 0u);
    for (const auto& f : ok.failures) FAIL_CHECK(f.spec << ": " << f.what);

    const HarnessReport bad = equivalence_harness({{.family = "paper", .name = "C5", .expect = true},
                                                   {.family = "paper", .name = "missing"}});
    CHECK(bad.failures.size() == 2u);
}

}  // TEST_SUITE
