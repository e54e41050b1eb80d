#include <doctest.h>

#include <lcc/io.hpp>

#include <nlohmann/json.hpp>

#include "support.hpp"

using namespace lcc;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("graph text format") {
    const ParsedGraph p = parse_graph("# comment\n4 3\n0 1\n1 2\n2 3\n");
    CHECK(p.graph == path_graph(4));
    CHECK(p.warnings.empty());
    CHECK(serialize_graph(p.graph) == "4 3\n0 1\n1 2\n2 3\n");

    const ParsedGraph dup = parse_graph("3 3\n0 1\n1 0\n1 2\n");
    CHECK(dup.graph.size() == 2);
    CHECK(dup.warnings.size() == 1u);

    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n0 x\n"), ParseError);
    try {
        parse_graph("3 2\n0 1\n0 9\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3u);
    }
}

TEST_CASE("graph round trip and hash") {
    Rng rng(test::kSeed);
    for (int i = 0; i < 50; ++i) {
        const Graph g = gnp(rng.between(0, 20), 0.3, rng);
        CHECK(parse_graph(serialize_graph(g)).graph == g);
        CHECK(content_hash(parse_graph(serialize_graph(g)).graph) == content_hash(g));
    }
    CHECK(content_hash(path_graph(4)).size() == 16u);
    CHECK(content_hash(path_graph(4)) != content_hash(cycle_graph(4)));
}

TEST_CASE("colourings") {
    const Graph g = paper_instance("F1");
    const EdgeColouring c = *recognize(test::without(g, 0)).colouring;
    const Graph h = test::without(g, 0);
    CHECK(parse_colouring(h, serialize_colouring(h, c)) == c);
    CHECK(colouring_from_json(h, colouring_to_json(h, c)) == c);

    const Graph p3 = path_graph(3);
    CHECK(parse_colouring(p3, "# x\n1 2 2\n0 1 1\n") == EdgeColouring({Colour::one, Colour::two}));
    CHECK_THROWS_AS(parse_colouring(p3, "0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring(p3, "0 1 1\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring(p3, "0 1 1\n0 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring(p3, "0 1 1\n0 1 2\n1 2 1\n"), ParseError);
    CHECK_THROWS_AS(colouring_from_json(p3, "{\"edges\": 3}"), ParseError);
    CHECK_THROWS_AS(colouring_from_json(p3, "not json"), ParseError);
}

TEST_CASE("kaleidoscopes") {
    const Graph g = paper_instance("F3");
    const RecognitionResult r = recognize(g);
    REQUIRE_FALSE(r.colourable());
    const Kaleidoscope kal = extract_kaleidoscope(g, r.odd_cycle);
    const std::string text = kaleidoscope_to_json(kal);
    CHECK(kaleidoscope_from_json(text) == kal);
    const json j = json::parse(text);
    CHECK(j["host"] == "complement");
    CHECK(j["k"] == kal.order());
    CHECK(j["host_hash"] == content_hash(complement(g)));
    CHECK_THROWS_AS(kaleidoscope_from_json("{\"anchors\": [0, 1]}"), ParseError);
}

TEST_CASE("orderings") {
    const auto s = *find_straight(paper_instance("F1"));
    CHECK(straight_from_json(ordering_to_json(s)) == s);
    const auto r = *find_round(cycle_graph(7));
    CHECK(round_from_json(ordering_to_json(r)) == r);
    CHECK(json::parse(ordering_to_json(r))["circular"] == true);
    CHECK_THROWS_AS(straight_from_json(ordering_to_json(r)), ParseError);
    CHECK_THROWS_AS(round_from_json("[1, 2]"), ParseError);
}

TEST_CASE("occurrences") {
    const auto occ = non_pca_witness(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    REQUIRE(occ);
    const Occurrence back = occurrence_from_json(occurrence_to_json(*occ));
    CHECK(back.pattern == occ->pattern);
    CHECK(back.k == occ->k);
    CHECK(back.map == occ->map);
}

TEST_CASE("recognition and report documents") {
    const Graph c5 = cycle_graph(5);
    const RecognitionResult r = recognize(c5);
    const json no = json::parse(recognition_to_json(c5, r, extract_kaleidoscope(c5, r.odd_cycle), count_colourings(c5)));
    CHECK(no["status"] == "not_colourable");
    CHECK(no["odd_cycle"].size() == r.odd_cycle.size());
    CHECK(no["count"] == 0);
    CHECK(no.contains("kaleidoscope"));

    const Graph p4 = path_graph(4);
    const json yes = json::parse(recognition_to_json(p4, recognize(p4), std::nullopt, count_colourings(p4)));
    CHECK(yes["status"] == "colourable");
    CHECK(yes["colouring"]["edges"].size() == 3u);
    CHECK(yes["count"] == 2);

    const json rep = json::parse(report_to_json(c5, structural_recognize(c5)));
    CHECK(rep["colourable"] == false);
    CHECK(rep.contains("reason"));
}

TEST_CASE("generator specs and manifests") {
    GeneratorSpec spec{.family = "circular-arc-pca", .n = 9, .p = 0.25, .seed = 4, .even = true, .expect = true};
    CHECK(spec_from_json(spec_to_json(spec)) == spec);
    CHECK_THROWS_AS(spec_from_json("{\"family\": \"gnp\", \"bogus\": 1}"), ParseError);
    CHECK_THROWS_AS(spec_from_json("{\"n\": \"three\"}"), ParseError);

    const auto corpus = parse_manifest("{\"family\": \"gnp\", \"n\": 5, \"seed\": 10, \"count\": 3}\n\n"
                                       "{\"family\": \"labelled\", \"n\": 3}\n");
    REQUIRE(corpus.size() == 3u + 8u);
    CHECK(corpus[2].seed == 12u);
    CHECK(corpus[3].family == "labelled");
    CHECK(corpus.back().index == 7u);
    CHECK_THROWS_AS(parse_manifest("{\"family\": \"gnp\"\n"), ParseError);

    const json h = json::parse(harness_to_json(equivalence_harness(corpus)));
    CHECK(h["instances"] == 11);
    CHECK(h["failures"].empty());
}

}  // TEST_SUITE
