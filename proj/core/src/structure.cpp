#include "lcc/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lcc {

std::string to_string(PigClass c) {
    switch (c) {
        case PigClass::Clique: return "Clique";
        case PigClass::Type1: return "Type1";
        case PigClass::Type2: return "Type2";
        case PigClass::Type3: return "Type3";
        case PigClass::Type4: return "Type4";
        case PigClass::NotTyped: return "NotTyped";
    }
    return "?";
}

namespace {

// Side (0/1) of every vertex in a proper 2-colouring, if one exists.
std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    std::deque<Vertex> queue;
    for (Vertex r = 0; r < g.order(); ++r) {
        if (side[r] != -1) continue;
        side[r] = 0;
        queue.push_back(r);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbours(v)) {
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

class Colourer {
public:
    explicit Colourer(const Graph& h) : n_(h.order()), adj_(n_, 0), colour_(n_, -1) {
        for (const Edge& e : h.edges()) {
            adj_[e.u] |= std::uint64_t{1} << e.v;
            adj_[e.v] |= std::uint64_t{1} << e.u;
        }
    }

    int chromatic_number() {
        if (n_ == 0) return 0;
        best_ = n_;
        search(0);
        return best_;
    }

private:
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] != -1) continue;
            int sat = 0;
            for (std::uint64_t cls : classes_) sat += (cls & adj_[v]) != 0;
            const int deg = std::popcount(adj_[v]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void search(int coloured) {
        const int used = static_cast<int>(classes_.size());
        if (used >= best_) return;
        if (coloured == n_) {
            best_ = used;
            return;
        }
        const int v = pick();
        const std::uint64_t bit = std::uint64_t{1} << v;
        for (int c = 0; c < used; ++c) {
            if (classes_[c] & adj_[v]) continue;
            classes_[c] |= bit;
            colour_[v] = c;
            search(coloured + 1);
            classes_[c] &= ~bit;
            colour_[v] = -1;
        }
        if (used + 1 < best_) {
            classes_.push_back(bit);
            colour_[v] = used;
            search(coloured + 1);
            classes_.pop_back();
            colour_[v] = -1;
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> colour_;
    std::vector<std::uint64_t> classes_;
    int best_ = 0;
};

std::vector<int> identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void require_verified(const Graph& g, const StraightOrdering& o) {
    if (static_cast<int>(o.order.size()) != g.order() || !verify_straight(g, o))
        throw std::invalid_argument("ordering is not a verified straight ordering");
}

void require_verified(const Graph& g, const RoundOrdering& o) {
    if (static_cast<int>(o.order.size()) != g.order() || !verify_round(g, o))
        throw std::invalid_argument("ordering is not a verified round ordering");
}

std::string span(int a, int b) { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

void check_local(const Graph& g, const EdgeColouring& c, const char* what) {
    if (!verify_locally_complete(g, c)) throw std::logic_error(std::string(what) + " colouring failed verification");
}

}  // namespace

int clique_cover_number(const Graph& g) {
    int total = 0;
    for (const auto& comp : components(g)) {
        const Graph h = induced(g, comp).graph;
        if (auto o = find_straight(h)) {
            total += canonical_cover(h, *o).k();
        } else {
            if (h.order() > 40) throw std::length_error("exact clique cover limited to 40 vertices");
            total += Colourer(complement(h)).chromatic_number();
        }
    }
    return total;
}

CanonicalCliqueCover canonical_cover(const Graph& g, const StraightOrdering& o) {
    require_verified(g, o);
    if (!is_connected(g)) throw std::invalid_argument("canonical cover needs a connected graph");
    const int n = g.order();
    CanonicalCliqueCover c;
    if (n == 0) return c;
    int t = o.gamma[0];
    c.t.push_back(t);
    c.s.push_back(o.ell[t]);
    while (t < n - 1) {
        t = o.gamma[t + 1];
        c.t.push_back(t);
        c.s.push_back(o.ell[t]);
    }
    const int k = c.k();
    auto fail = [](const std::string& what) { throw std::logic_error("canonical cover: " + what); };
    if (c.s.front() != 0 || c.t.back() != n - 1) fail("does not span the ordering");
    for (int i = 0; i < k; ++i) {
        if (o.gamma[c.s[i]] != c.t[i] || o.ell[c.t[i]] != c.s[i]) fail("clique " + std::to_string(i) + " not maximal");
        if (i > 0 && (c.s[i] <= c.s[i - 1] || c.t[i] <= c.t[i - 1])) fail("bounds not increasing");
    }
    return c;
}

TypeResult classify_type(const Graph& g, const StraightOrdering& o, const CanonicalCliqueCover& cover) {
    if (!is_connected(g)) throw std::invalid_argument("classify_type needs a connected graph");
    if (!cutvertices(g).empty()) throw std::invalid_argument("classify_type needs a graph without cutvertex");
    require_verified(g, o);
    const int k = cover.k();
    TypeResult r;
    if (k <= 1) {
        r.cls = PigClass::Clique;
        return r;
    }
    const auto& s = cover.s;
    const auto& t = cover.t;
    auto shared = [&](int i) { return t[i] == s[i + 1]; };  // boundary between cliques i and i+1
    auto gap = [&](int i) { return t[i] + 1 == s[i + 1]; };
    auto gaps = [&](int from, int to) {
        for (int i = from; i <= to; ++i)
            if (!gap(i)) return false;
        return true;
    };
    const int last = k - 2;  // last boundary
    if (gaps(0, last)) {
        r.cls = PigClass::Type4;
    } else if (shared(0) && shared(last) && gaps(1, last - 1)) {
        r.cls = PigClass::Type1;
    } else if (k >= 3 && shared(0) && gaps(1, last)) {
        r.cls = PigClass::Type2;
    } else if (k >= 3 && shared(last) && gaps(0, last - 1)) {
        r.cls = PigClass::Type3;
    } else {
        for (int i = 0; i <= last && r.reason.empty(); ++i)
            if (s[i + 1] < t[i])
                r.reason = "cliques " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                           " overlap in more than one vertex";
        for (int i = 1; i < last && r.reason.empty(); ++i)
            if (shared(i)) {
                r.reason = "cliques " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                           " share a vertex away from the ends";
                break;
            }
        if (r.reason.empty()) r.reason = "consecutive cliques neither share nor abut";
    }
    if (r.cls != PigClass::NotTyped) {
        for (int i = 1; i + 1 < k; ++i) {
            const int a = o.gamma[s[i] - 1];
            const int b = o.ell[t[i] + 1];
            if (a >= b) {
                r.cls = PigClass::NotTyped;
                r.reason = "clique " + std::to_string(i + 1) + ": gamma(s-1) = " + std::to_string(a) +
                           " is not before ell(t+1) = " + std::to_string(b);
                break;
            }
        }
    }
    if (r.cls == PigClass::NotTyped && g.order() <= 60) {
        for (const char* f : {"F1", "F2", "F3"}) {
            if (auto occ = find_induced(g, pattern(f))) {
                r.witness = std::move(occ);
                break;
            }
        }
    }
    return r;
}

EdgeColouring type_colouring(const Graph& g, const StraightOrdering& o, const CanonicalCliqueCover& cover,
                             PigClass cls, MonoEnd end) {
    if (cls == PigClass::NotTyped) throw std::invalid_argument("no colouring for an untyped graph");
    const int k = cover.k();
    if (cls != PigClass::Clique && k < 2) throw std::invalid_argument("typed colouring needs at least two cliques");
    const auto pos = positions_of(o.order, g.order());
    const auto& s = cover.s;
    const auto& t = cover.t;
    EdgeColouring c(g.size());
    for (EdgeId e = 0; e < g.size(); ++e) {
        const int p = std::min(pos[g.edge(e).u], pos[g.edge(e).v]);
        const int q = std::max(pos[g.edge(e).u], pos[g.edge(e).v]);
        auto inside = [&](int from, int to) {
            for (int i = from; i <= to; ++i)
                if (s[i] <= p && q <= t[i]) return true;
            return false;
        };
        bool one = false;
        switch (cls) {
            case PigClass::Clique: one = true; break;
            case PigClass::Type1:
                if (k == 2)
                    one = end == MonoEnd::First ? (q <= t[0] || p > s[1]) : (q < t[0] || p >= s[1]);
                else
                    one = q < t[0] || p > s[k - 1] || inside(1, k - 2);
                break;
            case PigClass::Type2: one = q < t[0] || inside(1, k - 1); break;
            case PigClass::Type3: one = p > s[k - 1] || inside(0, k - 2); break;
            case PigClass::Type4: one = inside(0, k - 1); break;
            case PigClass::NotTyped: break;
        }
        c[e] = one ? Colour::one : Colour::two;
    }
    return c;
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& path) {
    const int len = static_cast<int>(path.size());
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            if (path[i] == path[j]) return false;
            if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
        }
    return len > 0;
}

std::vector<TypedPath> typed_paths(const Graph& g, const StraightOrdering& o, const CanonicalCliqueCover& cover,
                                   PigClass cls) {
    const int k = cover.k();
    if (k < 3) throw std::invalid_argument("typed paths need at least three cliques");
    // 1-based accessors, as the positions are usually written.
    auto S = [&](int i) { return cover.s[i - 1]; };
    auto T = [&](int i) { return cover.t[i - 1]; };
    auto alternate = [&](std::vector<int>& seq, int from, int to) {
        for (int i = from; i <= to; ++i) {
            seq.push_back(S(i));
            seq.push_back(T(i));
        }
    };
    std::vector<std::pair<std::string, std::pair<std::vector<int>, bool>>> raw;
    auto add = [&](std::string ends, std::vector<int> seq, bool odd) {
        raw.push_back({std::move(ends), {std::move(seq), odd}});
    };
    std::vector<int> q;
    switch (cls) {
        case PigClass::Type1:
            q.clear(), alternate(q, 2, k - 1), q.push_back(S(k)), add("s2..sk", q, true);
            q = {T(2)}, alternate(q, 3, k - 1), q.push_back(S(k)), q.push_back(T(k)), add("t2..tk", q, true);
            q = {S(2) + 1, T(2)}, alternate(q, 3, k - 1), q.push_back(S(k)), add("s2+1..sk", q, true);
            q = {S(2) - 1, S(2) + 1, T(2)}, alternate(q, 3, k - 1), q.push_back(S(k)), q.push_back(T(k));
            add("s2-1..tk", q, true);
            q = {S(1)}, alternate(q, 2, k - 1), q.push_back(S(k)), add("s1..sk", q, false);
            q = {S(1)}, alternate(q, 2, k), add("s1..tk", q, true);
            q = {T(1), T(2)}, alternate(q, 3, k), add("t1..tk", q, false);
            break;
        case PigClass::Type2:
            q = {T(2)}, alternate(q, 3, k - 1), q.push_back(S(k)), add("t2..sk", q, true);
            q = {T(2)}, alternate(q, 3, k), add("t2..tk", q, false);
            q = {S(2) + 1, T(2)}, alternate(q, 3, k - 1), q.push_back(S(k)), add("s2+1..sk", q, false);
            q = {S(1)}, alternate(q, 2, k - 1), q.push_back(S(k)), add("s1..sk", q, true);
            q = {S(1)}, alternate(q, 2, k), add("s1..tk", q, false);
            q = {S(2) + 1, T(2)}, alternate(q, 3, k), add("s2+1..tk", q, true);
            break;
        case PigClass::Type3:
            q.clear(), alternate(q, 2, k - 1), q.push_back(S(k)), add("s2..sk", q, true);
            q.clear(), alternate(q, 2, k - 1), q.push_back(S(k)), q.push_back(S(k) + 1), add("s2..sk+1", q, false);
            q.clear(), alternate(q, 1, k - 1), q.push_back(S(k)), add("s1..sk", q, true);
            q.clear(), alternate(q, 1, k), add("s1..tk", q, false);
            q.clear(), alternate(q, 1, k - 2), q.push_back(S(k - 1)), add("s1..sk-1", q, false);
            q = {T(1)}, alternate(q, 2, k - 2), q.push_back(S(k - 1)), q.push_back(S(k) - 1), q.push_back(S(k) + 1),
            q.push_back(T(k)), add("t1..tk", q, false);
            break;
        case PigClass::Type4:
            q.clear(), alternate(q, 2, k - 1), q.push_back(S(k)), add("s2..sk", q, false);
            q.clear(), alternate(q, 1, k - 1), q.push_back(S(k)), add("s1..sk", q, false);
            q.clear(), alternate(q, 1, k), add("s1..tk", q, true);
            q = {T(1)}, alternate(q, 2, k), add("t1..tk", q, false);
            break;
        default: throw std::invalid_argument("typed paths need a typed graph");
    }
    std::vector<TypedPath> out;
    const int n = g.order();
    for (auto& [ends, body] : raw) {
        auto& [seq, odd] = body;
        seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
        TypedPath p{ends, {}, odd};
        for (int position : seq) {
            if (position < 0 || position >= n) throw std::logic_error("typed path " + ends + " leaves the ordering");
            p.vertices.push_back(o.order[position]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

struct SegmentGraph {
    Graph graph;
    std::vector<Vertex> vertices;  // local vertex i is vertices[i]
};

// Vertices from position first to last (clockwise when round). On a round
// ordering each edge is kept only on its clique arc, so an edge joining two
// pseudo-cutvertices belongs to one weak block, not both.
SegmentGraph segment_graph(const Graph& g, const std::vector<Vertex>& order, int first, int last,
                           const std::vector<int>* round_gamma) {
    const int n = static_cast<int>(order.size());
    SegmentGraph s;
    for (int p = first;; p = (p + 1) % n) {
        s.vertices.push_back(order[p]);
        if (p == last && s.vertices.size() > 1) break;
    }
    if (!round_gamma) {
        s.graph = induced(g, s.vertices).graph;
        return s;
    }
    auto clockwise = [n](int from, int to) { return ((to - from) % n + n) % n; };
    std::vector<std::pair<Vertex, Vertex>> edges;
    const int len = static_cast<int>(s.vertices.size());
    for (int a = 0; a < len; ++a) {
        const int pa = (first + a) % n;
        const int reach = clockwise(pa, (*round_gamma)[pa]);
        for (int b = a + 1; b < len && b - a <= reach; ++b) edges.emplace_back(a, b);
    }
    s.graph = Graph(len, edges);
    return s;
}

Segment make_segment(const Graph& g, const std::vector<Vertex>& order, int first, int last,
                     const std::vector<int>* round_gamma) {
    const SegmentGraph sg = segment_graph(g, order, first, last, round_gamma);
    const Graph& h = sg.graph;
    auto o = as_straight(h, identity(h.order()));
    if (!o) throw std::logic_error("segment " + span(first, last) + " is not straight in the inherited order");
    Segment seg{first, last, canonical_cover(h, *o), {}};
    if (h.order() > 2 && !cutvertices(h).empty()) {
        seg.type.reason = "segment has a cutvertex";
    } else {
        seg.type = classify_type(h, *o, seg.cover);
    }
    return seg;
}

// Colouring of a segment, transferred to g.
void paint_segment(const Graph& g, const std::vector<Vertex>& order, const Segment& seg, MonoEnd end, bool swap,
                   const std::vector<int>* round_gamma, EdgeColouring& out) {
    const SegmentGraph sg = segment_graph(g, order, seg.first, seg.last, round_gamma);
    const Graph& h = sg.graph;
    const auto o = *as_straight(h, identity(h.order()));
    EdgeColouring c = type_colouring(h, o, seg.cover, seg.type.cls, end);
    if (swap) c = c.switched();
    for (EdgeId e = 0; e < h.size(); ++e) {
        const auto ge = g.edge_id(sg.vertices[h.edge(e).u], sg.vertices[h.edge(e).v]);
        if (!ge) throw std::logic_error("segment edge missing from the graph");
        if (out[*ge] != Colour::unset) throw std::logic_error("edge painted by two segments");
        out[*ge] = c[e];
    }
}

}  // namespace

Decision pig_decide(const Graph& g, const StraightOrdering& o) {
    require_verified(g, o);
    if (!is_connected(g)) throw std::invalid_argument("pig_decide needs a connected graph");
    if (!is_reduced(g)) throw std::invalid_argument("pig_decide needs a reduced graph");
    const int n = g.order();
    Decision d;
    if (n <= 1) {
        d.colourable = true;
        d.colouring = EdgeColouring(g.size());
        return d;
    }
    const auto pos = positions_of(o.order, n);
    for (Vertex v : cutvertices(g)) d.cuts.push_back(pos[v]);
    std::sort(d.cuts.begin(), d.cuts.end());

    std::vector<int> bounds{0};
    bounds.insert(bounds.end(), d.cuts.begin(), d.cuts.end());
    bounds.push_back(n - 1);
    const int segs = static_cast<int>(bounds.size()) - 1;
    for (int i = 0; i < segs; ++i) d.segments.push_back(make_segment(g, o.order, bounds[i], bounds[i + 1], nullptr));

    auto cls = [&](int i) { return d.segments[i].type.cls; };
    auto two_type1 = [&](int i) { return cls(i) == PigClass::Type1 && d.segments[i].cover.k() == 2; };
    auto describe = [&](int i) {
        const Segment& s = d.segments[i];
        std::string text = span(s.first, s.last) + " is " + to_string(s.type.cls);
        if (s.type.cls == PigClass::Type1) text += " with " + std::to_string(s.cover.k()) + " cliques";
        if (!s.type.reason.empty()) text += " (" + s.type.reason + ")";
        if (s.type.witness) text += ", contains " + s.type.witness->pattern;
        return text;
    };

    if (segs == 1) {
        if (cls(0) == PigClass::NotTyped) {
            d.reason = "graph " + describe(0);
            return d;
        }
    } else {
        for (int i = 0; i < segs; ++i) {
            const PigClass c = cls(i);
            bool ok = c == PigClass::Clique || c == PigClass::Type4;
            if (i == 0) ok = ok || two_type1(i) || c == PigClass::Type2;
            if (i == segs - 1) ok = ok || two_type1(i) || c == PigClass::Type3;
            if (!ok) {
                d.reason = std::string(i == 0 ? "first" : i == segs - 1 ? "last" : "middle") + " segment " + describe(i);
                return d;
            }
        }
    }

    EdgeColouring c(g.size());
    for (int i = 0; i < segs; ++i) {
        // a two-clique type 1 segment keeps its cutvertex side monochromatic
        const MonoEnd end = segs > 1 && i == 0 ? MonoEnd::Last : MonoEnd::First;
        paint_segment(g, o.order, d.segments[i], end, i % 2 == 1, nullptr, c);
    }
    check_local(g, c, "proper interval");
    d.colourable = true;
    d.colouring = std::move(c);
    return d;
}

WeakBlockDecomposition pseudo_cutvertices(const Graph& g, const RoundOrdering& o) {
    require_verified(g, o);
    if (!is_connected(g)) throw std::invalid_argument("pseudo_cutvertices needs a connected graph");
    if (find_straight(g)) throw std::invalid_argument("graph is a proper interval graph");
    const int n = g.order();
    WeakBlockDecomposition w;
    for (int i = 0; i < n; ++i)
        if (!g.adjacent(o.order[(i + n - 1) % n], o.order[(i + 1) % n])) w.pseudo_cut.push_back(i);
    const int p = static_cast<int>(w.pseudo_cut.size());
    if (p >= 2)
        for (int i = 0; i < p; ++i)
            w.blocks.push_back(make_segment(g, o.order, w.pseudo_cut[i], w.pseudo_cut[(i + 1) % p], &o.gamma));
    return w;
}

bool is_perfect(const Graph& g) {
    if (g.order() > 30) throw std::length_error("perfection test limited to 30 vertices");
    return !find_hole(g, 5, Parity::Odd) && !find_hole(complement(g), 5, Parity::Odd);
}

Decision pca_decide(const Graph& g, const RoundOrdering& o) {
    require_verified(g, o);
    if (!is_connected(g)) throw std::invalid_argument("pca_decide needs a connected graph");
    if (!is_reduced(g)) throw std::invalid_argument("pca_decide needs a reduced graph");
    if (bipartition(complement(g))) throw std::invalid_argument("pca_decide needs clique cover number at least 3");
    const WeakBlockDecomposition w = pseudo_cutvertices(g, o);
    Decision d;
    d.cuts = w.pseudo_cut;
    d.segments = w.blocks;
    const int p = static_cast<int>(w.pseudo_cut.size());
    if (p == 1) {
        d.reason = "exactly one pseudo-cutvertex";
        return d;
    }
    if (p >= 2) {
        if (p % 2 == 1) {
            d.reason = std::to_string(p) + " pseudo-cutvertices (odd)";
            return d;
        }
        for (const Segment& b : w.blocks) {
            if (b.type.cls != PigClass::Clique && b.type.cls != PigClass::Type4) {
                d.reason = "weak block " + span(b.first, b.last) + " is " + to_string(b.type.cls);
                if (!b.type.reason.empty()) d.reason += " (" + b.type.reason + ")";
                return d;
            }
        }
        EdgeColouring c(g.size());
        for (int i = 0; i < p; ++i) paint_segment(g, o.order, w.blocks[i], MonoEnd::First, i % 2 == 1, &o.gamma, c);
        check_local(g, c, "weak block");
        d.colourable = true;
        d.colouring = std::move(c);
        return d;
    }
    if (g.order() > 30) {
        RecognitionResult r = recognize(g);
        d.reason = "no pseudo-cutvertex; decided by G+ (perfection test capped at 30 vertices)";
        d.colourable = r.colourable();
        d.colouring = std::move(r.colouring);
        return d;
    }
    if (!is_perfect(g)) {
        d.reason = "not perfect";
        return d;
    }
    for (const char* f : {"F1", "F2", "F3"}) {
        if (find_induced(g, pattern(f))) {
            d.reason = std::string("contains ") + f;
            return d;
        }
    }
    RecognitionResult r = recognize(g);
    if (!r.colourable()) throw std::logic_error("perfect F-free proper circular-arc graph rejected by G+");
    d.colourable = true;
    d.colouring = std::move(r.colouring);
    return d;
}

EdgeColouring cc2_colouring(const Graph& g) {
    const auto side = bipartition(complement(g));
    if (!side) throw std::invalid_argument("complement is not bipartite");
    EdgeColouring c(g.size());
    for (EdgeId e = 0; e < g.size(); ++e)
        c[e] = (*side)[g.edge(e).u] == (*side)[g.edge(e).v] ? Colour::one : Colour::two;
    check_local(g, c, "bipartite complement");
    return c;
}

StructuralReport structural_recognize(const Graph& g) {
    StructuralReport report;
    report.colourable = true;
    EdgeColouring lifted(g.size());
    bool all_pig = true;

    for (const auto& comp : components(g)) {
        const InducedSubgraph sub = induced(g, comp);
        const TwinReduction tr = twin_reduce(sub.graph);
        const Graph& r = tr.reduced;
        auto label = [&](Vertex reduced_vertex) { return sub.original[tr.representative[reduced_vertex]]; };

        ComponentReport cr;
        cr.vertices = comp;
        cr.reduced_n = r.order();
        cr.straight = find_straight(r);
        if (cr.straight) {
            cr.cls = "PIG";
            cr.cover = canonical_cover(r, *cr.straight);
            if (cr.cover->k() == 1) {
                cr.type = to_string(PigClass::Clique);
            } else if (r.order() > 2 && !cutvertices(r).empty()) {
                cr.type = "segments";
            } else {
                cr.type = to_string(classify_type(r, *cr.straight, *cr.cover).cls);
            }
        } else {
            // exhaustive round search is meant for desk-scale components
            if (r.order() <= 40) cr.round = find_round(r);
            cr.cls = cr.round ? "PCA" : "other";
            if (cr.round) {
                const auto& order = cr.round->order;
                const int n = r.order();
                for (int i = 0; i < n; ++i)
                    if (!r.adjacent(order[(i + n - 1) % n], order[(i + 1) % n]))
                        cr.pseudo_cutvertices.push_back(label(order[i]));
            }
        }
        all_pig = all_pig && cr.cls == "PIG";

        std::optional<EdgeColouring> colouring;
        if (bipartition(complement(r))) {
            cr.method = "cc2";
            colouring = cc2_colouring(r);
        } else if (cr.straight) {
            cr.method = "pig";
            Decision d = pig_decide(r, *cr.straight);
            colouring = std::move(d.colouring);
            cr.reason = d.reason;
        } else if (cr.round) {
            cr.method = "pca";
            Decision d = pca_decide(r, *cr.round);
            colouring = std::move(d.colouring);
            cr.reason = d.reason;
        } else {
            cr.method = "aux";
            colouring = recognize(r).colouring;
            if (!colouring) cr.reason = "G+ has an odd cycle";
        }
        cr.colourable = colouring.has_value();

        if (colouring) {
            for (EdgeId e = 0; e < sub.graph.size(); ++e) {
                const Vertex x = tr.class_of[sub.graph.edge(e).u];
                const Vertex y = tr.class_of[sub.graph.edge(e).v];
                const Colour c = x == y ? Colour::one : (*colouring)[*r.edge_id(x, y)];
                lifted[*g.edge_id(sub.original[sub.graph.edge(e).u], sub.original[sub.graph.edge(e).v])] = c;
            }
        } else if (report.colourable) {
            report.colourable = false;
            report.reason = cr.reason;
        }
        report.reduced_n += cr.reduced_n;
        report.components.push_back(std::move(cr));
    }

    if (report.components.size() == 1)
        report.cls = report.components.front().cls;
    else
        report.cls = all_pig ? "PIG" : "other";
    if (report.colourable) {
        check_local(g, lifted, "lifted structural");
        report.colouring = std::move(lifted);
    }
    return report;
}

}  // namespace lcc
