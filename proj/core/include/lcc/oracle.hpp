#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcc/graph.hpp"
#include "lcc/orderings.hpp"
#include "lcc/recognizer.hpp"
#include "lcc/structure.hpp"

namespace lcc {

/// Seedable source built on MT19937-64 (std::mt19937_64, seeded with the
/// 64-bit seed directly). Bounded integers use rejection sampling on the raw
/// 64-bit output and doubles take its top 53 bits, so streams reproduce on
/// every conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    int between(int lo, int hi);
    /// Uniform in [0, 1).
    double unit();
    bool chance(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// LCC_SEED from the environment, else 1.
std::uint64_t default_seed();

struct BruteForce {
    std::vector<EdgeColouring> colourings;  // at most `cap`
    std::uint64_t count = 0;                // exact
};

/// Enumerates all 2-colourings of E(g) with the first edge fixed to colour 1
/// and checks the definition at every vertex. Throws std::length_error when
/// m > 20.
BruteForce brute_force_colourings(const Graph& g, std::size_t cap = std::numeric_limits<std::size_t>::max());

/// First ordering in lexicographic permutation order that verifies. Throw
/// std::length_error when n > 8.
std::optional<StraightOrdering> brute_force_straight(const Graph& g);
std::optional<RoundOrdering> brute_force_round(const Graph& g);

/// Exact clique cover number by subset dynamic programming; throws
/// std::length_error when n > 14.
int brute_force_clique_cover(const Graph& g);

struct GeneratorSpec {
    // gnp | staircase-pig | circular-arc-pca | circular-staircase |
    // clique-cycle | bipartite-complement | paper |
    // type-template | block-cycle | weak-blocks | labelled
    std::string family = "gnp";
    int n = 0;
    double p = 0.5;        // edge probability, or arc length as a fraction of the circle
    std::uint64_t seed = 1;
    bool shuffle = true;
    int width = 3;         // staircase and circular-staircase reach bound
    bool even = false;     // circular-arc-pca: evenly spaced arcs
    std::string name;      // named instance
    int drop = -1;         // named instance: vertex to delete
    std::string type;      // type-template: Type1..Type4
    int k = 2;             // cliques per template / block
    int blocks = 2;        // block-cycle, weak-blocks, clique-cycle
    std::uint64_t index = 0;  // labelled: edge bitmask
    std::optional<bool> expect;  // expected decision, checked by the harness

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct Generated {
    Graph graph;
    std::optional<StraightOrdering> straight;  // witness, after relabelling
    std::optional<RoundOrdering> round;
    std::vector<int> side;  // bipartite-complement: side of each vertex
};

/// circular-staircase lets vertex i reach r[i] <= width steps clockwise with
/// r[i+1] >= r[i] - 1 around the circle; the witness is a round ordering.
/// clique-cycle places `blocks` cliques around a circle, each split into two
/// parts of 2..n vertices (default 3) joined to the neighbouring cliques by
/// staircases; reduced, colourable, no pseudo-cutvertex.
/// weak-blocks glues `blocks` random pieces (cliques on two or three vertices
/// or reduced Type4 graphs of at most n vertices, default 8) end to end around
/// a circle. Throws std::invalid_argument on bad parameters.
Generated generate(const GeneratorSpec& spec);

Graph gnp(int n, double p, Rng& rng);

/// Vertex i adjacent to i+1..reach[i]; reach must be non-decreasing with
/// reach[i] >= i.
Graph staircase_graph(const std::vector<int>& reach);

/// F1, F2, F3, claw, K1+K3, tent, tucker-*, C<n>, P<n>, K<n>, co-C<n>.
Graph paper_instance(const std::string& name);

/// Labelled graph on n vertices whose edges are the set bits of `mask` over
/// pairs (0,1), (0,2), ..., (n-2,n-1).
Graph labelled_graph(int n, std::uint64_t mask);

/// Reduced template of the given type with k canonical cliques, in its
/// straight ordering (identity labels).
Generated type_template(PigClass cls, int k);

/// `blocks` copies of the Type4 template with k cliques glued end to end
/// around a circle; identity labels, round witness.
Generated block_cycle(int blocks, int k);

struct HarnessFailure {
    std::string spec;   // manifest line
    std::string graph;  // serialized instance
    std::string what;
};

struct HarnessReport {
    std::size_t instances = 0;
    std::size_t brute_forced = 0;
    std::vector<HarnessFailure> failures;
};

/// Runs every spec through the aux recognizer, the structural decision, the
/// certificate verifiers and, for m <= 16, brute force; records every
/// disagreement.
HarnessReport equivalence_harness(const std::vector<GeneratorSpec>& corpus);

/// One spec per non-empty line (JSON). A "count" field expands a line into
/// that many specs with consecutive seeds; family "labelled" without an index
/// expands to all graphs on n vertices. "expect" is "colourable",
/// "not_colourable" or a boolean. Throws ParseError.
std::vector<GeneratorSpec> parse_manifest(std::string_view text);

}  // namespace lcc
