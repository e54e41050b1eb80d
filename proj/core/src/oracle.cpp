#include "lcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "lcc/io.hpp"
#include "lcc/kaleidoscope.hpp"
#include "lcc/patterns.hpp"

namespace lcc {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

int Rng::between(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t default_seed() {
    if (const char* s = std::getenv("LCC_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

BruteForce brute_force_colourings(const Graph& g, std::size_t cap) {
    const int m = g.size();
    if (m > 20) throw std::length_error("brute force limited to 20 edges");
    BruteForce out;
    if (m == 0) {
        out.count = 1;
        if (cap > 0) out.colourings.emplace_back(0);
        return out;
    }
    // Pairs of edges at a common vertex whose other ends are non-adjacent.
    std::vector<std::pair<int, int>> clash;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::pair<Vertex, EdgeId>> at;
        for (Vertex u : g.neighbours(v)) at.emplace_back(u, *g.edge_id(u, v));
        for (std::size_t i = 0; i < at.size(); ++i)
            for (std::size_t j = i + 1; j < at.size(); ++j)
                if (!g.adjacent(at[i].first, at[j].first)) clash.emplace_back(at[i].second, at[j].second);
    }
    // Bit e of an assignment is 1 for colour 2; edge 0 stays at colour 1.
    const std::uint64_t total = std::uint64_t{1} << (m - 1);
    for (std::uint64_t a = 0; a < total; ++a) {
        const std::uint64_t bits = a << 1;
        bool ok = true;
        for (auto [e, f] : clash)
            if (((bits >> e) & 1) == ((bits >> f) & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        out.count += 2;
        for (int flip = 0; flip < 2 && out.colourings.size() < cap; ++flip) {
            EdgeColouring c(m);
            for (EdgeId e = 0; e < m; ++e) c[e] = (((bits >> e) & 1) ^ flip) ? Colour::two : Colour::one;
            out.colourings.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

template <class Fit>
auto first_permutation(const Graph& g, Fit fit) -> decltype(fit(std::vector<Vertex>{})) {
    if (g.order() > 8) throw std::length_error("exhaustive ordering search limited to 8 vertices");
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (auto o = fit(order)) return o;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

Generated shuffled(Generated gen, Rng& rng) {
    const int n = gen.graph.order();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<Vertex> label(n);  // old vertex -> new vertex
    for (int i = 0; i < n; ++i) label[perm[i]] = i;
    Generated out;
    out.graph = relabel(gen.graph, perm);
    auto remap = [&](const std::vector<Vertex>& order) {
        std::vector<Vertex> r;
        for (Vertex v : order) r.push_back(label[v]);
        return r;
    };
    if (gen.straight) {
        out.straight = as_straight(out.graph, remap(gen.straight->order));
        if (!out.straight) throw std::logic_error("straight witness lost in relabelling");
    }
    if (gen.round) {
        out.round = as_round(out.graph, remap(gen.round->order));
        if (!out.round) throw std::logic_error("round witness lost in relabelling");
    }
    if (!gen.side.empty()) {
        out.side.resize(n);
        for (int i = 0; i < n; ++i) out.side[i] = gen.side[perm[i]];
    }
    return out;
}

std::vector<Vertex> identity_order(int n) {
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Generated with_straight(Graph g) {
    Generated out;
    out.straight = as_straight(g, identity_order(g.order()));
    if (!out.straight) throw std::logic_error("construction is not straight in its own order");
    out.graph = std::move(g);
    return out;
}

Generated circular_arcs(int n, double length, bool even, Rng& rng) {
    if (n < 1 || !(length > 0) || length >= 1) throw std::invalid_argument("circular-arc-pca needs n >= 1 and 0 < p < 1");
    std::vector<double> at(n);
    for (int i = 0; i < n; ++i) at[i] = even ? static_cast<double>(i) / n : rng.unit();
    std::sort(at.begin(), at.end());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = at[j] - at[i];
            if (std::min(d, 1 - d) <= length + 1e-12) edges.emplace_back(i, j);
        }
    Generated out;
    out.graph = Graph(n, edges);
    out.round = as_round(out.graph, identity_order(n));
    if (!out.round) throw std::logic_error("angular order is not a round ordering");
    return out;
}

// Vertex i reaches r[i] steps clockwise with r[i+1] >= r[i] - 1 around the
// circle, so every reach is a clique and the identity order is round.
Generated circular_staircase(int n, int width, Rng& rng) {
    if (n < 3 || width < 1) throw std::invalid_argument("circular-staircase needs n >= 3 and width >= 1");
    width = std::min(width, n - 2);
    for (;;) {
        std::vector<int> r(n);
        r[0] = rng.between(1, width);
        for (int i = 1; i < n; ++i) r[i] = std::max(r[i - 1] - 1, rng.between(1, width));
        if (r[0] < r[n - 1] - 1) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int i = 0; i < n; ++i)
            for (int d = 1; d <= r[i]; ++d) edges.push_back(std::minmax(i, (i + d) % n));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        Generated out;
        out.graph = Graph(n, edges);
        out.round = as_round(out.graph, identity_order(n));
        if (out.round) return out;
    }
}

// Cliques C_0..C_{m-1} around the circle, each split into a left part L_i and
// a right part R_i. Vertex j of R_i sees the first j (or j - 1) vertices of
// L_{i+1}; every staircase value is used once, so no twins arise and no
// vertex is a pseudo-cutvertex.
Generated clique_cycle(int m, int max_part, Rng& rng) {
    if (m < 3 || max_part < 2) throw std::invalid_argument("clique-cycle needs blocks >= 3 and n >= 2");
    std::vector<int> left(m), right(m);
    for (int i = 0; i < m; ++i) left[i] = rng.between(2, max_part);
    std::vector<char> lead(m);
    for (int i = 0; i < m; ++i) {
        lead[i] = rng.chance(0.5);
        right[i] = left[(i + 1) % m] + lead[i];
    }
    std::vector<int> start(m);
    int n = 0;
    for (int i = 0; i < m; ++i) {
        start[i] = n;
        n += left[i] + right[i];
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < m; ++i) {
        const int size = left[i] + right[i];
        for (int x = 0; x < size; ++x)
            for (int y = x + 1; y < size; ++y) edges.emplace_back(start[i] + x, start[i] + y);
        const int next = start[(i + 1) % m];
        for (int j = 0; j < right[i]; ++j) {
            const Vertex r = start[i] + left[i] + j;
            const int reach = j + 1 - lead[i];
            for (int t = 0; t < reach; ++t) edges.push_back(std::minmax(r, next + t));
        }
    }
    Generated out;
    out.graph = Graph(n, edges);
    out.round = as_round(out.graph, identity_order(n));
    if (!out.round) throw std::logic_error("clique cycle is not round in its own order");
    return out;
}

Generated bipartite_complement(int n, double p, Rng& rng) {
    if (n < 1 || p < 0 || p > 1) throw std::invalid_argument("bipartite-complement needs n >= 1 and 0 <= p <= 1");
    const int a = n / 2;
    std::vector<std::pair<Vertex, Vertex>> cross;
    for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j)
            if (rng.chance(p)) cross.emplace_back(i, j);
    Generated out;
    out.graph = complement(Graph(n, cross));
    out.side.assign(n, 1);
    std::fill(out.side.begin(), out.side.begin() + a, 0);
    return out;
}

PigClass parse_class(const std::string& s) {
    for (PigClass c : {PigClass::Clique, PigClass::Type1, PigClass::Type2, PigClass::Type3, PigClass::Type4})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown type " + s);
}

}  // namespace

std::optional<StraightOrdering> brute_force_straight(const Graph& g) {
    return first_permutation(g, [&](std::vector<Vertex> order) { return as_straight(g, std::move(order)); });
}

std::optional<RoundOrdering> brute_force_round(const Graph& g) {
    return first_permutation(g, [&](std::vector<Vertex> order) { return as_round(g, std::move(order)); });
}

int brute_force_clique_cover(const Graph& g) {
    const int n = g.order();
    if (n > 14) throw std::length_error("exhaustive clique cover limited to 14 vertices");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= std::uint32_t{1} << e.v;
        adj[e.v] |= std::uint32_t{1} << e.u;
    }
    std::vector<char> clique(full + 1, 0);
    clique[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int low = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        clique[s] = clique[rest] && (rest & ~adj[low]) == 0;
    }
    std::vector<int> best(full + 1, n + 1);
    best[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const std::uint32_t low = s & (0 - s);
        const std::uint32_t rest = s ^ low;
        // cliques through the lowest vertex
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            if (clique[sub | low]) best[s] = std::min(best[s], 1 + best[rest ^ sub]);
            if (sub == 0) break;
        }
    }
    return best[full];
}

Graph gnp(int n, double p, Rng& rng) {
    if (n < 0 || p < 0 || p > 1) throw std::invalid_argument("gnp needs n >= 0 and 0 <= p <= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph staircase_graph(const std::vector<int>& reach) {
    const int n = static_cast<int>(reach.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) {
        if (reach[i] < i || reach[i] >= n || (i > 0 && reach[i] < reach[i - 1]))
            throw std::invalid_argument("reach must be non-decreasing with i <= reach[i] < n");
        for (int j = i + 1; j <= reach[i]; ++j) edges.emplace_back(i, j);
    }
    return Graph(n, edges);
}

Graph paper_instance(const std::string& name) {
    if (name.starts_with("co-")) return complement(paper_instance(name.substr(3)));
    for (const auto& p : catalogue())
        if (p.name == name) return p.graph;
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'P' || name[0] == 'K')) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(name.substr(1), &used);
            if (used != name.size() - 1) n = -1;
        } catch (const std::exception&) {
            n = -1;
        }
        if (name[0] == 'C' && n >= 3) return cycle_graph(n);
        if (name[0] == 'P' && n >= 1) return path_graph(n);
        if (name[0] == 'K' && n >= 1) return complete_graph(n);
    }
    throw std::invalid_argument("unknown instance " + name);
}

Graph labelled_graph(int n, std::uint64_t mask) {
    if (n < 0 || n * (n - 1) / 2 > 63) throw std::invalid_argument("labelled graphs limited to 11 vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    if (bit < 64 && (mask >> bit) != 0) throw std::invalid_argument("mask has bits beyond the vertex pairs");
    return Graph(n, edges);
}

Generated type_template(PigClass cls, int k) {
    if (cls == PigClass::NotTyped) throw std::invalid_argument("no template for untyped graphs");
    if (cls == PigClass::Clique) {
        if (k != 1) throw std::invalid_argument("a clique template has one clique");
        return with_straight(complete_graph(3));
    }
    const int min_k = cls == PigClass::Type2 || cls == PigClass::Type3 ? 3 : 2;
    if (k < min_k) throw std::invalid_argument("too few cliques for " + to_string(cls));
    auto shared = [&](int b) {  // boundary between cliques b and b+1
        switch (cls) {
            case PigClass::Type1: return b == 0 || b == k - 2;
            case PigClass::Type2: return b == 0;
            case PigClass::Type3: return b == k - 2;
            default: return false;
        }
    };
    // End cliques have three vertices, middle ones four.
    std::vector<int> s{0}, t{2};
    for (int i = 1; i < k; ++i) {
        s.push_back(shared(i - 1) ? t[i - 1] : t[i - 1] + 1);
        t.push_back(s[i] + (i == k - 1 ? 2 : 3));
    }
    const int n = t.back() + 1;
    std::vector<int> reach(n, 0);
    for (int i = 0; i < k; ++i)
        for (int p = s[i]; p <= t[i]; ++p) reach[p] = std::max(reach[p], t[i]);
    for (int b = 0; b + 1 < k; ++b) {
        const int c = t[b];
        if (shared(b)) {
            reach[c - 1] = std::max(reach[c - 1], c + 1);
        } else {
            reach[c - 1] = std::max(reach[c - 1], c + 1);
            reach[c] = std::max(reach[c], c + 2);
        }
    }
    return with_straight(staircase_graph(reach));
}

Generated block_cycle(int blocks, int k) {
    if (blocks < 2) throw std::invalid_argument("block-cycle needs at least two blocks");
    const Generated block = type_template(PigClass::Type4, k);
    const int len = block.graph.order();
    const int n = blocks * (len - 1);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int b = 0; b < blocks; ++b)
        for (const Edge& e : block.graph.edges())
            edges.emplace_back((b * (len - 1) + e.u) % n, (b * (len - 1) + e.v) % n);
    Generated out;
    out.graph = Graph(n, edges);
    out.round = as_round(out.graph, identity_order(n));
    if (!out.round) throw std::logic_error("block cycle is not round in its own order");
    return out;
}

Generated weak_blocks(int blocks, int max_block, Rng& rng) {
    if (blocks < 2 || max_block < 2) throw std::invalid_argument("weak-blocks needs blocks >= 2 and n >= 2");
    // Each piece is a clique on two or three vertices or a reduced Type4
    // graph without cutvertex, in its straight ordering.
    auto piece = [&]() {
        for (;;) {
            const int size = rng.between(2, max_block);
            std::vector<int> reach(size);
            for (int i = 0; i < size; ++i)
                reach[i] = std::min(size - 1, std::max(i > 0 ? reach[i - 1] : 0, i + rng.between(1, 3)));
            const Graph h = staircase_graph(reach);
            if (size <= 3 && h.size() == size * (size - 1) / 2) return h;
            if (size < 4 || !is_reduced(h) || !cutvertices(h).empty()) continue;
            const auto o = *as_straight(h, identity_order(size));
            const auto cover = canonical_cover(h, o);
            if (classify_type(h, o, cover).cls == PigClass::Type4) return h;
        }
    };
    for (;;) {
        std::vector<Graph> parts;
        int n = 0;
        for (int b = 0; b < blocks; ++b) {
            parts.push_back(piece());
            n += parts.back().order() - 1;
        }
        if (n < 5) continue;
        std::vector<std::pair<Vertex, Vertex>> edges;
        int offset = 0;
        for (const Graph& h : parts) {
            for (const Edge& e : h.edges()) edges.push_back(std::minmax((offset + e.u) % n, (offset + e.v) % n));
            offset += h.order() - 1;
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Generated out;
        out.graph = Graph(n, edges);
        out.round = as_round(out.graph, identity_order(n));
        if (!out.round || !is_reduced(out.graph)) continue;
        return out;
    }
}

Generated generate(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    Generated gen;
    const std::string& f = spec.family;
    if (f == "gnp") {
        gen.graph = gnp(spec.n, spec.p, rng);
    } else if (f == "staircase-pig") {
        if (spec.n < 1 || spec.width < 1) throw std::invalid_argument("staircase-pig needs n >= 1 and width >= 1");
        std::vector<int> reach(spec.n);
        for (int i = 0; i < spec.n; ++i)
            reach[i] = std::min(spec.n - 1, std::max(i > 0 ? reach[i - 1] : 0, i + rng.between(1, spec.width)));
        gen = with_straight(staircase_graph(reach));
    } else if (f == "circular-arc-pca") {
        gen = circular_arcs(spec.n, spec.p, spec.even, rng);
    } else if (f == "circular-staircase") {
        gen = circular_staircase(spec.n, spec.width, rng);
    } else if (f == "clique-cycle") {
        gen = clique_cycle(spec.blocks, spec.n > 0 ? spec.n : 3, rng);
    } else if (f == "bipartite-complement") {
        gen = bipartite_complement(spec.n, spec.p, rng);
    } else if (f == "paper") {
        gen.graph = paper_instance(spec.name);
        if (spec.drop >= 0) {
            if (spec.drop >= gen.graph.order()) throw std::invalid_argument("deleted vertex out of range");
            std::vector<Vertex> keep;
            for (Vertex v = 0; v < gen.graph.order(); ++v)
                if (v != spec.drop) keep.push_back(v);
            gen.graph = induced(gen.graph, keep).graph;
        }
    } else if (f == "type-template") {
        gen = type_template(parse_class(spec.type), spec.k);
    } else if (f == "block-cycle") {
        gen = block_cycle(spec.blocks, spec.k);
    } else if (f == "weak-blocks") {
        gen = weak_blocks(spec.blocks, spec.n > 0 ? spec.n : 8, rng);
    } else if (f == "labelled") {
        gen.graph = labelled_graph(spec.n, spec.index);
    } else {
        throw std::invalid_argument("unknown family " + f);
    }
    const bool random_labels = spec.shuffle && f != "paper" && f != "labelled";
    return random_labels ? shuffled(std::move(gen), rng) : gen;
}

HarnessReport equivalence_harness(const std::vector<GeneratorSpec>& corpus) {
    HarnessReport report;
    for (const GeneratorSpec& spec : corpus) {
        ++report.instances;
        Generated gen;
        try {
            gen = generate(spec);
        } catch (const std::exception& e) {
            report.failures.push_back({spec_to_json(spec), "", std::string("generation: ") + e.what()});
            continue;
        }
        const Graph& g = gen.graph;
        auto fail = [&](const std::string& what) { report.failures.push_back({spec_to_json(spec), serialize_graph(g), what}); };
        try {
            const RecognitionResult r = recognize(g);
            if (r.colourable()) {
                if (!verify_locally_complete(g, *r.colouring)) fail("aux colouring does not verify");
            } else {
                const Kaleidoscope kal = extract_kaleidoscope(g, r.odd_cycle);
                const KaleidoscopeCheck check = verify_kaleidoscope(complement(g), kal);
                if (!check) fail("kaleidoscope does not verify: " + check.violation);
                if (kal.total_length() % 2 == 0 || kal.total_length() != static_cast<int>(r.odd_cycle.size()))
                    fail("kaleidoscope length differs from the aux odd cycle");
            }
            if (spec.expect && *spec.expect != r.colourable())
                fail(std::string("expected ") + (*spec.expect ? "colourable" : "not colourable"));

            const StructuralReport s = structural_recognize(g);
            if (s.colourable != r.colourable()) fail("structural decision differs from aux");

            if (g.size() <= 16) {
                ++report.brute_forced;
                const BruteForce bf = brute_force_colourings(g, 0);
                if ((bf.count > 0) != r.colourable()) fail("brute-force decision differs from aux");
                const auto count = count_colourings(g).value();
                if (!count || *count != bf.count) fail("colouring count differs from brute force");
            }
            if (gen.straight && !verify_straight(g, *gen.straight)) fail("generated straight witness fails");
            if (gen.round && !verify_round(g, *gen.round)) fail("generated round witness fails");
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }
    return report;
}

}  // namespace lcc
