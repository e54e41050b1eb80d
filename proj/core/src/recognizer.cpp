#include "lcc/recognizer.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "odd_cycle.hpp"

namespace lcc {

bool EdgeColouring::total() const {
    return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c == Colour::unset; });
}

EdgeColouring EdgeColouring::switched() const {
    EdgeColouring out = *this;
    for (auto& c : out.colours_)
        if (c != Colour::unset) c = other(c);
    return out;
}

AuxGraph::AuxGraph(const Graph& host) : adj_(host.size()) {
    // Each induced P3 u-w-v contributes the aux edge (wu, wv).
    for (Vertex w = 0; w < host.order(); ++w) {
        auto nb = host.neighbours(w);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (host.adjacent(nb[i], nb[j])) continue;
                EdgeId e = *host.edge_id(w, nb[i]);
                EdgeId f = *host.edge_id(w, nb[j]);
                adj_[e].push_back(f);
                adj_[f].push_back(e);
            }
        }
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
}

bool AuxGraph::adjacent(EdgeId e, EdgeId f) const {
    return std::binary_search(adj_[e].begin(), adj_[e].end(), f);
}

std::size_t AuxGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return total / 2;
}

AuxGraph build_aux(const Graph& g) { return AuxGraph(g); }

bool forms_induced_path(const Graph& g, EdgeId e, EdgeId f) {
    if (e == f) return false;
    const Edge a = g.edge(e), b = g.edge(f);
    Vertex shared, x, y;
    if (a.u == b.u) {
        shared = a.u, x = a.v, y = b.v;
    } else if (a.u == b.v) {
        shared = a.u, x = a.v, y = b.u;
    } else if (a.v == b.u) {
        shared = a.v, x = a.u, y = b.v;
    } else if (a.v == b.v) {
        shared = a.v, x = a.u, y = b.u;
    } else {
        return false;
    }
    (void)shared;
    return !g.adjacent(x, y);
}

namespace {

struct Layering {
    std::vector<int> depth;
    std::vector<EdgeId> parent;
    std::vector<Colour> colour;
    std::size_t components = 0;
    std::optional<std::pair<EdgeId, EdgeId>> conflict;
};

Layering layer(const AuxGraph& aux) {
    const int m = aux.order();
    Layering L;
    L.depth.assign(m, -1);
    L.parent.assign(m, -1);
    L.colour.assign(m, Colour::unset);
    std::deque<EdgeId> queue;
    for (EdgeId root = 0; root < m; ++root) {
        if (L.depth[root] != -1) continue;
        ++L.components;
        L.depth[root] = 0;
        L.colour[root] = Colour::one;
        queue.push_back(root);
        while (!queue.empty()) {
            EdgeId e = queue.front();
            queue.pop_front();
            for (EdgeId f : aux.neighbours(e)) {
                if (L.depth[f] == -1) {
                    L.depth[f] = L.depth[e] + 1;
                    L.parent[f] = e;
                    L.colour[f] = other(L.colour[e]);
                    queue.push_back(f);
                } else if (L.colour[f] == L.colour[e] && !L.conflict) {
                    L.conflict = std::pair{e, f};
                }
            }
        }
    }
    return L;
}

// Closes the odd cycle formed by the tree paths from x and y to their lowest
// common ancestor plus the edge xy.
std::vector<EdgeId> odd_cycle_from(const Layering& L, EdgeId x, EdgeId y) {
    std::vector<EdgeId> from_x{x}, from_y{y};
    EdgeId a = x, b = y;
    while (L.depth[a] > L.depth[b]) from_x.push_back(a = L.parent[a]);
    while (L.depth[b] > L.depth[a]) from_y.push_back(b = L.parent[b]);
    while (a != b) {
        from_x.push_back(a = L.parent[a]);
        from_y.push_back(b = L.parent[b]);
    }
    from_y.pop_back();  // lca already ends from_x
    std::vector<EdgeId> cycle = std::move(from_x);
    cycle.insert(cycle.end(), from_y.rbegin(), from_y.rend());
    return cycle;
}

}  // namespace

RecognitionResult recognize(const Graph& g) {
    const AuxGraph aux(g);
    const Layering L = layer(aux);
    RecognitionResult r;
    if (L.conflict) {
        r.odd_cycle = detail::induced_odd_cycle(odd_cycle_from(L, L.conflict->first, L.conflict->second),
                                                [&](EdgeId e, EdgeId f) { return aux.adjacent(e, f); });
        return r;
    }
    r.colouring = EdgeColouring(L.colour);
    return r;
}

LocalCheck verify_locally_complete(const Graph& g, const EdgeColouring& c) {
    if (c.size() != g.size() || !c.total())
        throw std::invalid_argument("colouring is not total on the edge set");
    for (Vertex w = 0; w < g.order(); ++w) {
        auto nb = g.neighbours(w);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const Colour ci = c[*g.edge_id(w, nb[i])];
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (c[*g.edge_id(w, nb[j])] != ci) continue;
                if (!g.adjacent(nb[i], nb[j])) return {false, LocalViolation{w, nb[i], nb[j]}};
            }
        }
    }
    return {};
}

std::optional<std::uint64_t> ColouringCount::value() const {
    if (!colourable) return 0;
    if (free_components >= 64) return std::nullopt;
    return std::uint64_t{1} << free_components;
}

std::string ColouringCount::decimal() const {
    if (!colourable) return "0";
    // Little-endian decimal digits, doubled free_components times.
    std::vector<int> digits{1};
    for (std::size_t i = 0; i < free_components; ++i) {
        int carry = 0;
        for (auto& d : digits) {
            d = d * 2 + carry;
            carry = d / 10;
            d %= 10;
        }
        if (carry) digits.push_back(carry);
    }
    std::string out;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) out.push_back(static_cast<char>('0' + *it));
    return out;
}

ColouringCount count_colourings(const Graph& g) {
    const Layering L = layer(AuxGraph(g));
    if (L.conflict) return {false, 0};
    return {true, L.components};
}

}  // namespace lcc
