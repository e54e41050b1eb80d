#include "lcc/kaleidoscope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lcc/recognizer.hpp"
#include "odd_cycle.hpp"

namespace lcc {

int Kaleidoscope::total_length() const {
    int total = 0;
    for (const auto& w : walks) total += static_cast<int>(w.size()) - 1;
    return total;
}

KaleidoscopeCheck verify_kaleidoscope(const Graph& h, const Kaleidoscope& kal) {
    auto fail = [](std::string why) { return KaleidoscopeCheck{false, std::move(why)}; };
    auto check_vertex = [&](Vertex v) {
        if (v < 0 || v >= h.order()) throw std::out_of_range("vertex " + std::to_string(v) + " not in host");
    };
    for (Vertex a : kal.anchors) check_vertex(a);
    for (const auto& w : kal.walks)
        for (Vertex v : w) check_vertex(v);

    if (!kal.host_hash.empty() && (kal.host_hash != content_hash(h) || kal.host_edges != h.size()))
        return fail("certificate was built for a different host");
    const int k = kal.order();
    if (k < 2) return fail("order " + std::to_string(k) + " is below 2");
    if (static_cast<int>(kal.walks.size()) != k) return fail("walk count differs from anchor count");

    for (int i = 0; i < k; ++i) {
        const auto& w = kal.walks[i];
        const std::string name = "walk " + std::to_string(i);
        if (w.empty()) return fail(name + " is empty");
        if (w.front() != kal.anchors[i]) return fail(name + " does not start at anchor " + std::to_string(i));
        if (w.back() != kal.anchors[(i + 2) % k])
            return fail(name + " does not end at anchor " + std::to_string((i + 2) % k));
        for (std::size_t j = 0; j + 1 < w.size(); ++j)
            if (!h.adjacent(w[j], w[j + 1]))
                return fail(name + " step " + std::to_string(j) + ": " + std::to_string(w[j]) + "-" +
                            std::to_string(w[j + 1]) + " is not an edge");
        const Vertex avoid = kal.anchors[(i + 1) % k];
        for (Vertex v : w)
            if (v == avoid || h.adjacent(v, avoid))
                return fail(name + " meets anchor " + std::to_string((i + 1) % k) + " at vertex " + std::to_string(v));
    }
    if (kal.total_length() % 2 == 0) return fail("total length " + std::to_string(kal.total_length()) + " is even");
    return {};
}

std::vector<Vertex> induced_odd_cycle_in_walk(const Graph& h, std::vector<Vertex> closed_walk) {
    if (closed_walk.size() % 2 == 0) throw std::invalid_argument("closed walk has even length");
    return detail::induced_odd_cycle(std::move(closed_walk), [&](Vertex a, Vertex b) { return h.adjacent(a, b); });
}

namespace {

Vertex common_end(const Edge& a, const Edge& b) {
    if (a.u == b.u || a.u == b.v) return a.u;
    return a.v;
}

Vertex other_end(const Edge& e, Vertex x) { return e.u == x ? e.v : e.u; }

Kaleidoscope from_induced_cycle(const std::vector<Vertex>& c, Vertex centre) {
    Kaleidoscope kal;
    const int len = static_cast<int>(c.size());
    if (len == 3) {
        // centre plus the triangle form K1+K3 in the complement
        kal.anchors = {centre, c[0]};
        kal.walks = {{centre}, {c[0], c[1], c[2], c[0]}};
        return kal;
    }
    const int q = (len - 1) / 2;
    for (int j = 0; j < len; ++j) {
        const int at = (j * q) % len;
        kal.anchors.push_back(c[at]);
        kal.walks.push_back({c[at], c[(at - 1 + len) % len]});
    }
    return kal;
}

}  // namespace

Kaleidoscope extract_kaleidoscope(const Graph& g, const std::vector<EdgeId>& odd_cycle) {
    const int len = static_cast<int>(odd_cycle.size());
    if (len < 3 || len % 2 == 0) throw std::invalid_argument("aux cycle must have odd length at least 3");
    for (EdgeId e : odd_cycle)
        if (e < 0 || e >= g.size()) throw std::invalid_argument("aux node " + std::to_string(e) + " out of range");
    for (int i = 0; i < len; ++i)
        if (!forms_induced_path(g, odd_cycle[i], odd_cycle[(i + 1) % len]))
            throw std::invalid_argument("aux nodes " + std::to_string(odd_cycle[i]) + " and " +
                                        std::to_string(odd_cycle[(i + 1) % len]) + " are not adjacent in G+");

    auto e = [&](int i) { return g.edge(odd_cycle[((i % len) + len) % len]); };
    // c[i]: shared end of e_i and e_{i+1}
    std::vector<Vertex> c(len);
    for (int i = 0; i < len; ++i) c[i] = common_end(e(i), e(i + 1));

    const Graph h = complement(g);
    Kaleidoscope kal;
    if (std::all_of(c.begin(), c.end(), [&](Vertex x) { return x == c[0]; })) {
        const Vertex u = c[0];
        std::vector<Vertex> walk;
        for (int i = 0; i < len; ++i) walk.push_back(other_end(e(i), u));
        kal = from_induced_cycle(induced_odd_cycle_in_walk(h, std::move(walk)), u);
    } else {
        std::vector<int> dist;
        for (int i = 0; i < len; ++i)
            if (c[(i - 1 + len) % len] != c[i]) dist.push_back(i);
        const int k = static_cast<int>(dist.size());
        // Edges e_{d_j}..e_{d_{j+1}} all contain x_j = c[d_j]; their other ends
        // walk from x_{j-1} to x_{j+1} in the complement avoiding x_j.
        for (int j = 0; j < k; ++j) {
            const int from = dist[j];
            const int to = j + 1 < k ? dist[j + 1] : dist[0] + len;
            const Vertex x = c[from];
            std::vector<Vertex> walk;
            for (int i = from; i <= to; ++i) walk.push_back(other_end(e(i), x));
            kal.anchors.push_back(walk.front());
            kal.walks.push_back(std::move(walk));
        }
    }
    kal.host_edges = h.size();
    kal.host_hash = content_hash(h);
    return kal;
}

Order2Subgraph order2_to_subgraph(const Graph& h, const Kaleidoscope& kal) {
    if (kal.order() != 2) throw std::invalid_argument("kaleidoscope order is not 2");
    if (auto check = verify_kaleidoscope(h, kal); !check) throw std::invalid_argument(check.violation);
    const int odd = (kal.walks[0].size() - 1) % 2 == 1 ? 0 : 1;
    std::vector<Vertex> walk = kal.walks[odd];
    walk.pop_back();
    std::vector<Vertex> cycle = induced_odd_cycle_in_walk(h, std::move(walk));
    if (cycle.size() >= 5) return {Order2Subgraph::Kind::OddHole, std::move(cycle)};
    std::vector<Vertex> vs{kal.anchors[1 - odd]};
    vs.insert(vs.end(), cycle.begin(), cycle.end());
    return {Order2Subgraph::Kind::K1PlusK3, std::move(vs)};
}

}  // namespace lcc
