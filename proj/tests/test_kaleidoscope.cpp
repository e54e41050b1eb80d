#include <doctest.h>

#include <deque>

#include <lcc/kaleidoscope.hpp>
#include <lcc/oracle.hpp>
#include <lcc/patterns.hpp>
#include <lcc/recognizer.hpp>

#include "support.hpp"

using namespace lcc;

namespace {

// Order-2 kaleidoscope (a, b) in h: a alone, and an odd closed walk from b
// avoiding N[a]. Found by breadth-first parity search; nullopt if none.
std::optional<Kaleidoscope> order2_in(const Graph& h, Vertex a, Vertex b) {
    if (a == b || h.adjacent(a, b)) return std::nullopt;
    const int n = h.order();
    auto ok = [&](Vertex v) { return v != a && !h.adjacent(a, v); };
    // state (v, parity)
    std::vector<int> prev(2 * n, -2);
    std::deque<int> queue{2 * b};
    prev[2 * b] = -1;
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        const Vertex v = s / 2;
        for (Vertex w : h.neighbours(v)) {
            if (!ok(w)) continue;
            const int t = 2 * w + (1 - s % 2);
            if (prev[t] != -2) continue;
            prev[t] = s;
            queue.push_back(t);
        }
    }
    if (prev[2 * b + 1] == -2) return std::nullopt;
    std::vector<Vertex> walk;
    for (int s = 2 * b + 1; s != -1; s = prev[s]) walk.push_back(s / 2);
    std::reverse(walk.begin(), walk.end());
    Kaleidoscope kal;
    kal.anchors = {a, b};
    kal.walks = {{a}, walk};
    return kal;
}

}  // namespace

TEST_SUITE("kaleidoscope") {

TEST_CASE("claw certificate lives in the complement") {
    const Graph claw = pattern("claw").graph;
    const auto r = recognize(claw);
    REQUIRE_FALSE(r.colourable());
    const Kaleidoscope kal = extract_kaleidoscope(claw, r.odd_cycle);
    const Graph h = complement(claw);
    const KaleidoscopeCheck check = verify_kaleidoscope(h, kal);
    CHECK_MESSAGE(check.ok, check.violation);
    CHECK(kal.order() == 2);
    CHECK(kal.total_length() == 3);
    const Order2Subgraph sub = order2_to_subgraph(h, kal);
    CHECK(sub.kind == Order2Subgraph::Kind::K1PlusK3);
    CHECK(is_induced_embedding(h, pattern("K1+K3").graph, sub.vertices));
}

TEST_CASE("odd cycles") {
    for (int n : {5, 7, 9}) {
        const Graph c = cycle_graph(n);
        const auto r = recognize(c);
        REQUIRE_FALSE(r.colourable());
        const Kaleidoscope kal = extract_kaleidoscope(c, r.odd_cycle);
        const KaleidoscopeCheck check = verify_kaleidoscope(complement(c), kal);
        CHECK_MESSAGE(check.ok, check.violation);
        CHECK(kal.total_length() == static_cast<int>(r.odd_cycle.size()));
    }
}

TEST_CASE("random rejections give verified certificates of the aux cycle length") {
    Rng rng(test::kSeed + 20);
    int rejected = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = gnp(rng.between(3, 16), rng.unit(), rng);
        const auto r = recognize(g);
        if (r.colourable()) continue;
        ++rejected;
        const Kaleidoscope kal = extract_kaleidoscope(g, r.odd_cycle);
        const KaleidoscopeCheck check = verify_kaleidoscope(complement(g), kal);
        CHECK_MESSAGE(check.ok, check.violation);
        CHECK(kal.total_length() % 2 == 1);
        CHECK(kal.total_length() == static_cast<int>(r.odd_cycle.size()));
    }
    CHECK(rejected > 100);
}

TEST_CASE("certificates are bound to their host") {
    const Graph c5 = cycle_graph(5);
    const Kaleidoscope kal = extract_kaleidoscope(c5, recognize(c5).odd_cycle);
    CHECK(verify_kaleidoscope(complement(c5), kal).ok);
    const Graph other = complement(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}));
    const KaleidoscopeCheck bad = verify_kaleidoscope(other, kal);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violation.find("different host") != std::string::npos);
    Kaleidoscope loose = kal;
    loose.host_hash.clear();
    CHECK(verify_kaleidoscope(complement(c5), loose).ok);
}

TEST_CASE("verifier clauses") {
    const Graph h = complement(pattern("claw").graph);  // triangle 1 2 3 plus isolated 0
    Kaleidoscope kal{{0, 1}, {{0}, {1, 2, 3, 1}}};
    CHECK(verify_kaleidoscope(h, kal).ok);
    Kaleidoscope even{{0, 1}, {{0}, {1, 2, 1}}};
    CHECK(verify_kaleidoscope(h, even).violation.find("even") != std::string::npos);
    Kaleidoscope gap{{0, 1}, {{0}, {1, 0, 1}}};
    CHECK_FALSE(verify_kaleidoscope(h, gap).ok);
    Kaleidoscope wrong_end{{0, 1}, {{0}, {1, 2, 3}}};
    CHECK_FALSE(verify_kaleidoscope(h, wrong_end).ok);
    Kaleidoscope tiny{{0}, {{0}}};
    CHECK_FALSE(verify_kaleidoscope(h, tiny).ok);
    Kaleidoscope outside{{0, 9}, {{0}, {9}}};
    CHECK_THROWS_AS(verify_kaleidoscope(h, outside), std::out_of_range);
}

TEST_CASE("extraction rejects non-cycles") {
    const Graph claw = pattern("claw").graph;
    CHECK_THROWS_AS(extract_kaleidoscope(claw, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(extract_kaleidoscope(claw, {0, 1, 7}), std::invalid_argument);
    const Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(extract_kaleidoscope(k3, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("order-2 kaleidoscopes contain K1+K3 or an odd hole") {
    Rng rng(test::kSeed + 21);
    int found = 0;
    for (int trial = 0; trial < 2000 && found < 50; ++trial) {
        const Graph h = gnp(rng.between(4, 11), 0.2 + 0.4 * rng.unit(), rng);
        const Vertex a = static_cast<Vertex>(rng.below(h.order()));
        const Vertex b = static_cast<Vertex>(rng.below(h.order()));
        const auto kal = order2_in(h, a, b);
        if (!kal) continue;
        REQUIRE(verify_kaleidoscope(h, *kal).ok);
        ++found;
        const Order2Subgraph sub = order2_to_subgraph(h, *kal);
        if (sub.kind == Order2Subgraph::Kind::K1PlusK3) {
            CHECK(is_induced_embedding(h, pattern("K1+K3").graph, sub.vertices));
        } else {
            CHECK(sub.vertices.size() % 2 == 1);
            CHECK(sub.vertices.size() >= 5);
            CHECK(is_induced_embedding(h, cycle_graph(static_cast<int>(sub.vertices.size())), sub.vertices));
        }
    }
    CHECK(found == 50);
}

TEST_CASE("induced odd cycle inside a closed walk") {
    const Graph h = Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    const auto c = induced_odd_cycle_in_walk(h, {0, 1, 2, 3, 4});
    CHECK(c.size() == 3);
    CHECK_THROWS_AS(induced_odd_cycle_in_walk(h, {0, 1, 2, 3}), std::invalid_argument);
}

}
