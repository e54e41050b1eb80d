#pragma once

// Explicit colourings for round orderings without pseudo-cutvertex: the
// construction picks pairwise non-adjacent v1, va, vb with G[b, a] smallest,
// reduces G[1, b] to H and, when H has no cutvertex and is of type 2 or 4,
// writes down the colouring for that case.

#include <lcc/orderings.hpp>
#include <lcc/structure.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lcc::test {

struct CaseVector {
    std::string kind;     // "type2", "type4-a", "type4-b", or why nothing applies
    bool claims = true;   // adjacency facts the construction relies on
    std::optional<EdgeColouring> phi;
};

inline CaseVector pca_case_vector(const Graph& g, const RoundOrdering& o) {
    const int n = g.order();
    auto adj = [&](int p, int q) { return g.adjacent(o.order[((p % n) + n) % n], o.order[((q % n) + n) % n]); };

    int best = n + 1, rot = -1, a = -1, b = -1;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                if (adj(x, y) || adj(y, z) || adj(x, z)) continue;
                const int triples[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
                for (const auto& t : triples) {
                    const int aa = ((t[1] - t[0]) % n + n) % n, bb = ((t[2] - t[0]) % n + n) % n;
                    const int size = n - bb + aa + 1;
                    if (size < best) best = size, rot = t[0], a = aa, b = bb;
                }
            }
    if (rot < 0) return {"no independent triple"};

    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = o.order[(rot + i) % n];
    const auto r = as_round(g, order);
    if (!r) return {"rotation lost the round ordering"};
    auto at = [&](int p) { return order[((p % n) + n) % n]; };
    auto near = [&](int p, int q) { return g.adjacent(at(p), at(q)); };

    // H: G[0, b] with twins merged; classes are runs of positions.
    std::vector<Vertex> prefix(order.begin(), order.begin() + b + 1);
    const InducedSubgraph sub = induced(g, prefix);
    const TwinReduction tr = twin_reduce(sub.graph);
    const int q = tr.reduced.order();
    std::vector<int> first(q, n), last(q, -1);
    for (int p = 0; p <= b; ++p) {
        const Vertex c = tr.class_of[p];
        first[c] = std::min(first[c], p);
        last[c] = std::max(last[c], p);
    }
    std::vector<Vertex> cls(q);
    for (Vertex c = 0; c < q; ++c) cls[c] = c;
    std::sort(cls.begin(), cls.end(), [&](Vertex x, Vertex y) { return first[x] < first[y]; });
    for (int i = 0; i < q; ++i)
        if (last[cls[i]] - first[cls[i]] + 1 != static_cast<int>(std::count(tr.class_of.begin(), tr.class_of.end(), cls[i])))
            return {"twin class not contiguous"};
    std::vector<Vertex> h_order(q);
    for (int i = 0; i < q; ++i) h_order[i] = cls[i];
    const auto hs = as_straight(tr.reduced, h_order);
    if (!hs) return {"G[1,b] not straight"};
    if (!cutvertices(tr.reduced).empty()) return {"H has a cutvertex"};
    const CanonicalCliqueCover cover = canonical_cover(tr.reduced, *hs);
    const PigClass type = classify_type(tr.reduced, *hs, cover).cls;
    const int k = cover.k();

    // Representatives: the clique ends next to a gap are taken at the gap side
    // so that consecutive cliques meet in G as they do in H.
    auto s_pos = [&](int i) { return first[cls[cover.s[i]]]; };
    auto t_pos = [&](int i) { return i == k - 1 ? last[cls[cover.t[i]]] : (cover.t[i] == cover.s[i + 1] ? first[cls[cover.t[i]]] : last[cls[cover.t[i]]]); };
    if (s_pos(0) != 0 || t_pos(k - 1) != b) return {"ends of H moved"};
    if (t_pos(0) != a - 1) return {"first clique does not end at a-1"};

    auto in_arc = [&](int p, int from, int to) { return ((p - from) % n + n) % n <= ((to - from) % n + n) % n; };
    auto paint = [&](auto&& same) {
        EdgeColouring phi(g.size());
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        for (EdgeId e = 0; e < g.size(); ++e)
            phi[e] = same(pos[g.edge(e).u], pos[g.edge(e).v]) ? Colour::one : Colour::two;
        return phi;
    };
    auto in_cliques = [&](int x, int y, int lo, int hi) {
        for (int i = lo; i <= hi; ++i)
            if (in_arc(x, s_pos(i), t_pos(i)) && in_arc(y, s_pos(i), t_pos(i))) return true;
        return false;
    };

    const int sk = s_pos(k - 1);
    const bool a1_b1 = near(a - 1, b + 1), b1_sk = near(b + 1, sk);
    CaseVector out;
    if (type == PigClass::Type2) {
        out.kind = "type2";
        out.claims = !a1_b1 && !b1_sk && near(a - 2, b + 1);
        out.phi = paint([&](int x, int y) {
            return (in_arc(x, b + 1, a - 2) && in_arc(y, b + 1, a - 2)) || in_cliques(x, y, 1, k - 1);
        });
    } else if (type == PigClass::Type4 && a1_b1 && !b1_sk) {
        out.kind = "type4-a";
        out.phi = paint([&](int x, int y) {
            return (in_arc(x, b + 1, a - 1) && in_arc(y, b + 1, a - 1)) || in_cliques(x, y, 1, k - 1);
        });
    } else if (type == PigClass::Type4 && !a1_b1 && b1_sk) {
        out.kind = "type4-b";
        const int l2 = r->ell[1];
        out.claims = !near(1, b + 1) && near(n - 1, a - 1) && !near(n - 1, sk) && r->ell[a - 1] == l2 &&
                     !near(sk, l2) && near(sk, l2 - 1);
        out.phi = paint([&](int x, int y) {
            return (in_arc(x, sk, l2 - 1) && in_arc(y, sk, l2 - 1)) || (in_arc(x, l2, a - 1) && in_arc(y, l2, a - 1)) ||
                   in_cliques(x, y, 1, k - 2);
        });
    } else if (type == PigClass::Type4) {
        out.kind = "type4 with an excluded adjacency pattern";
        out.claims = false;
    } else {
        out.kind = "H is " + to_string(type);
        out.claims = type != PigClass::Type1 && type != PigClass::Type3;
    }
    return out;
}

}  // namespace lcc::test
