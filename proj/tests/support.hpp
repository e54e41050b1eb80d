#pragma once

#include <lcc/graph.hpp>
#include <lcc/oracle.hpp>

#include <vector>

namespace lcc::test {

// Fixed seeds so every run sees the same corpora.
inline constexpr std::uint64_t kSeed = 20240611;

inline Graph random_graph(Rng& rng, int n, double p) { return gnp(n, p, rng); }

// Vertices whose removal increases the number of components.
inline VertexSet brute_cutvertices(const Graph& g) {
    VertexSet out;
    const auto base = components(g).size();
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<Vertex> keep;
        for (Vertex u = 0; u < g.order(); ++u)
            if (u != v) keep.push_back(u);
        if (components(induced(g, keep).graph).size() > base) out.push_back(v);
    }
    return out;
}

inline Graph without(const Graph& g, Vertex v) {
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
    return induced(g, keep).graph;
}

}  // namespace lcc::test
