#include "lcc/orderings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lcc {

std::string to_string(OrderingClause c) {
    switch (c) {
        case OrderingClause::None: return "ok";
        case OrderingClause::NotContiguous: return "neighbourhood not contiguous";
        case OrderingClause::BoundsMismatch: return "ell/gamma mismatch";
        case OrderingClause::LeftNotClique: return "left side not a clique";
        case OrderingClause::RightNotClique: return "right side not a clique";
        case OrderingClause::EdgeNotClique: return "edge spans no clique";
    }
    return "?";
}

std::vector<int> positions_of(const std::vector<Vertex>& order, int n) {
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("ordering is not a permutation");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) throw std::invalid_argument("ordering is not a permutation");
        pos[v] = i;
    }
    return pos;
}

namespace {

struct Bounds {
    std::vector<int> ell, gamma;
    int bad = -1;  // first non-contiguous position
};

std::vector<int> neighbour_positions(const Graph& g, const std::vector<Vertex>& order, const std::vector<int>& pos,
                                     int i) {
    std::vector<int> ps{i};
    for (Vertex u : g.neighbours(order[i])) ps.push_back(pos[u]);
    std::sort(ps.begin(), ps.end());
    return ps;
}

Bounds straight_bounds(const Graph& g, const std::vector<Vertex>& order, const std::vector<int>& pos) {
    const int n = static_cast<int>(order.size());
    Bounds b{std::vector<int>(n), std::vector<int>(n)};
    for (int i = 0; i < n; ++i) {
        auto ps = neighbour_positions(g, order, pos, i);
        b.ell[i] = ps.front();
        b.gamma[i] = ps.back();
        if (b.bad < 0 && ps.back() - ps.front() + 1 != static_cast<int>(ps.size())) b.bad = i;
    }
    return b;
}

// Arc lengths: a position's closed neighbourhood covers len(i) positions
// clockwise from ell(i).
struct Circle {
    int n;
    std::vector<int> lo, len;

    int dist(int a, int b) const { return ((b - a) % n + n) % n; }
    bool covers(int p, int a, int length) const {
        if (len[p] == n) return true;
        return dist(lo[p], a) + length <= len[p];
    }
    bool clique(int a, int b) const {
        const int length = dist(a, b) + 1;
        for (int k = 0, p = a; k < length; ++k, p = (p + 1) % n)
            if (!covers(p, a, length)) return false;
        return true;
    }
};

struct RoundBounds {
    Circle circle;
    std::vector<int> ell, gamma;
    int bad = -1;
};

RoundBounds round_bounds(const Graph& g, const std::vector<Vertex>& order, const std::vector<int>& pos) {
    const int n = static_cast<int>(order.size());
    RoundBounds r{Circle{n, std::vector<int>(n), std::vector<int>(n)}, std::vector<int>(n), std::vector<int>(n)};
    std::vector<int> full;
    for (int i = 0; i < n; ++i) {
        auto ps = neighbour_positions(g, order, pos, i);
        const int s = static_cast<int>(ps.size());
        if (s == n) {
            r.circle.lo[i] = 0;
            r.circle.len[i] = n;
            full.push_back(i);
            continue;
        }
        int gaps = 0, start = ps.front(), end = ps.back();
        for (int t = 0; t + 1 < s; ++t) {
            if (ps[t + 1] - ps[t] > 1) {
                ++gaps;
                start = ps[t + 1];
                end = ps[t];
            }
        }
        if (ps.front() + n - ps.back() > 1) ++gaps;
        if (gaps != 1 && r.bad < 0) r.bad = i;
        r.ell[i] = start;
        r.gamma[i] = end;
        r.circle.lo[i] = start;
        r.circle.len[i] = s;
    }
    // A vertex seeing everything: choose where its arc is cut so that both
    // halves are cliques, largest right half first.
    for (int i : full) {
        int chosen = n - 1;
        for (int d = n - 1; d >= 0; --d) {
            const int gam = (i + d) % n, el = (gam + 1) % n;
            if (r.circle.clique(i, gam) && r.circle.clique(el, i)) {
                chosen = d;
                break;
            }
        }
        r.gamma[i] = (i + chosen) % n;
        r.ell[i] = (r.gamma[i] + 1) % n;
    }
    return r;
}

}  // namespace

OrderingCheck verify_straight(const Graph& g, const StraightOrdering& o) {
    const int n = g.order();
    const auto pos = positions_of(o.order, n);
    const Bounds b = straight_bounds(g, o.order, pos);
    if (b.bad >= 0) return {OrderingClause::NotContiguous, b.bad};
    if (!o.ell.empty() || !o.gamma.empty()) {
        if (static_cast<int>(o.ell.size()) != n || static_cast<int>(o.gamma.size()) != n)
            return {OrderingClause::BoundsMismatch, 0};
        for (int i = 0; i < n; ++i)
            if (o.ell[i] != b.ell[i] || o.gamma[i] != b.gamma[i]) return {OrderingClause::BoundsMismatch, i};
    }
    auto clique = [&](int a, int c) {
        for (int p = a; p <= c; ++p)
            if (b.ell[p] > a || b.gamma[p] < c) return false;
        return true;
    };
    for (int i = 0; i < n; ++i) {
        if (!clique(b.ell[i], i)) return {OrderingClause::LeftNotClique, i};
        if (!clique(i, b.gamma[i])) return {OrderingClause::RightNotClique, i};
    }
    return {};
}

OrderingCheck verify_round(const Graph& g, const RoundOrdering& o) {
    const int n = g.order();
    const auto pos = positions_of(o.order, n);
    RoundBounds r = round_bounds(g, o.order, pos);
    if (r.bad >= 0) return {OrderingClause::NotContiguous, r.bad};
    if (!o.ell.empty() || !o.gamma.empty()) {
        if (static_cast<int>(o.ell.size()) != n || static_cast<int>(o.gamma.size()) != n)
            return {OrderingClause::BoundsMismatch, 0};
        for (int i = 0; i < n; ++i) {
            if (o.ell[i] < 0 || o.ell[i] >= n || o.gamma[i] < 0 || o.gamma[i] >= n)
                return {OrderingClause::BoundsMismatch, i};
            if (r.circle.len[i] == n) {
                // any cut of a full neighbourhood is acceptable
                if (o.ell[i] != (o.gamma[i] + 1) % n) return {OrderingClause::BoundsMismatch, i};
                r.ell[i] = o.ell[i];
                r.gamma[i] = o.gamma[i];
            } else if (o.ell[i] != r.ell[i] || o.gamma[i] != r.gamma[i]) {
                return {OrderingClause::BoundsMismatch, i};
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!r.circle.clique(r.ell[i], i)) return {OrderingClause::LeftNotClique, i};
        if (!r.circle.clique(i, r.gamma[i])) return {OrderingClause::RightNotClique, i};
    }
    for (const Edge& e : g.edges()) {
        const int i = pos[e.u], j = pos[e.v];
        if (!r.circle.clique(i, j) && !r.circle.clique(j, i)) return {OrderingClause::EdgeNotClique, std::min(i, j)};
    }
    return {};
}

std::optional<StraightOrdering> as_straight(const Graph& g, std::vector<Vertex> order) {
    const auto pos = positions_of(order, g.order());
    Bounds b = straight_bounds(g, order, pos);
    if (b.bad >= 0) return std::nullopt;
    StraightOrdering o{std::move(order), std::move(b.ell), std::move(b.gamma)};
    if (!verify_straight(g, o)) return std::nullopt;
    return o;
}

std::optional<RoundOrdering> as_round(const Graph& g, std::vector<Vertex> order) {
    const auto pos = positions_of(order, g.order());
    RoundBounds r = round_bounds(g, order, pos);
    if (r.bad >= 0) return std::nullopt;
    RoundOrdering o{std::move(order), std::move(r.ell), std::move(r.gamma)};
    if (!verify_round(g, o)) return std::nullopt;
    return o;
}

std::vector<Vertex> lex_bfs(const Graph& g, const std::vector<Vertex>* previous) {
    const int n = g.order();
    std::vector<std::vector<Vertex>> classes(1);
    if (previous) {
        classes[0].assign(previous->rbegin(), previous->rend());
    } else {
        for (Vertex v = 0; v < n; ++v) classes[0].push_back(v);
    }
    if (n == 0) return {};
    std::vector<char> mark(n, 0);
    std::vector<Vertex> out;
    out.reserve(n);
    std::vector<std::vector<Vertex>> next;
    while (!classes.empty()) {
        auto& first = classes.front();
        const Vertex v = first.front();
        first.erase(first.begin());
        out.push_back(v);
        for (Vertex u : g.neighbours(v)) mark[u] = 1;
        next.clear();
        for (auto& cls : classes) {
            std::vector<Vertex> in, rest;
            for (Vertex u : cls) (mark[u] ? in : rest).push_back(u);
            if (!in.empty()) next.push_back(std::move(in));
            if (!rest.empty()) next.push_back(std::move(rest));
        }
        for (Vertex u : g.neighbours(v)) mark[u] = 0;
        classes.swap(next);
    }
    return out;
}

std::optional<StraightOrdering> find_straight(const Graph& g) {
    if (!is_connected(g)) throw GraphError("find_straight needs a connected graph");
    std::vector<Vertex> sigma = lex_bfs(g);
    for (int sweep = 1; sweep < 6; ++sweep) {
        sigma = lex_bfs(g, &sigma);
        if (sweep < 2) continue;
        if (auto o = as_straight(g, sigma)) return o;
    }
    return std::nullopt;
}

namespace {

class RoundSearch {
public:
    explicit RoundSearch(const Graph& g) : g_(g), n_(g.order()), adj_(n_ * n_, 0), placed_(n_, 0) {
        for (const Edge& e : g.edges()) adj_[e.u * n_ + e.v] = adj_[e.v * n_ + e.u] = 1;
    }

    std::optional<RoundOrdering> run() {
        order_.push_back(0);
        placed_[0] = 1;
        if (extend()) return result_;
        return std::nullopt;
    }

private:
    bool near(Vertex a, Vertex b) const { return a == b || adj_[a * n_ + b]; }

    bool extend() {
        const int p = static_cast<int>(order_.size());
        if (p == n_) {
            if (!near(order_.back(), order_.front()) || order_[1] > order_.back()) return false;
            result_ = as_round(g_, order_);
            return result_.has_value();
        }
        for (Vertex u : g_.neighbours(order_.back())) {
            if (placed_[u]) continue;
            if (p == n_ - 1 && !near(u, order_.front())) continue;
            order_.push_back(u);
            placed_[u] = 1;
            if (cliques_ok() && feasible() && extend()) return true;
            placed_[u] = 0;
            order_.pop_back();
        }
        return false;
    }

    // A non-universal vertex's arc runs clockwise from it to gamma, so a
    // placed run of its neighbours starting (or ending) at it is one side of
    // its arc and must be complete. Checked for runs reaching the new vertex.
    bool cliques_ok() const {
        const int p = static_cast<int>(order_.size()) - 1;
        const Vertex u = order_[p];
        for (int i = p - 1; i >= 0; --i) {
            const Vertex v = order_[i];
            if (g_.degree(v) == n_ - 1) continue;
            bool run = true;
            for (int j = i + 1; j <= p && run; ++j) run = near(v, order_[j]);
            if (!run) continue;
            for (int j = i + 1; j < p; ++j)
                if (!near(u, order_[j])) return false;
        }
        if (g_.degree(u) == n_ - 1) return true;
        int r = p;
        while (r > 0 && near(u, order_[r - 1])) --r;
        for (int a = r; a < p; ++a)
            for (int b = a + 1; b < p; ++b)
                if (!near(order_[a], order_[b])) return false;
        return true;
    }

    // Every closed neighbourhood must still be able to become an arc: its
    // trace on the placed prefix is one run, or two runs at both ends of the
    // prefix with the whole unplaced gap inside the neighbourhood.
    bool feasible() const {
        const int p = static_cast<int>(order_.size());
        const int gap = n_ - p;
        for (Vertex v = 0; v < n_; ++v) {
            int runs = 0;
            bool first_at_start = false, last_at_end = false, prev = false;
            for (int i = 0; i < p; ++i) {
                const bool in = near(v, order_[i]);
                if (in && !prev) {
                    if (++runs > 2) return false;
                    if (i == 0) first_at_start = true;
                }
                prev = in;
            }
            last_at_end = prev;
            int unplaced_in = 0;
            for (Vertex u = 0; u < n_; ++u)
                if (!placed_[u] && near(v, u)) ++unplaced_in;
            const bool ends = first_at_start || last_at_end;
            if (runs == 2 && !(first_at_start && last_at_end && unplaced_in == gap)) return false;
            if (runs == 1 && unplaced_in > 0 && !ends) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    std::vector<char> adj_;
    std::vector<char> placed_;
    std::vector<Vertex> order_;
    std::optional<RoundOrdering> result_;
};

}  // namespace

std::optional<RoundOrdering> find_round(const Graph& g) {
    if (!is_connected(g)) throw GraphError("find_round needs a connected graph");
    if (auto s = find_straight(g)) return as_round(g, s->order);
    // Without a straight ordering, cyclically consecutive vertices are
    // adjacent in every round ordering whose half-neighbourhoods are cliques.
    if (g.order() < 3) return std::nullopt;
    // True twins can sit side by side, so search the reduced graph and put
    // each class where its representative landed.
    const TwinReduction tr = twin_reduce(g);
    if (tr.reduced.order() == g.order()) return RoundSearch(g).run();
    const auto reduced = find_round(tr.reduced);
    if (!reduced) return std::nullopt;
    std::vector<std::vector<Vertex>> members(tr.reduced.order());
    for (Vertex v = 0; v < g.order(); ++v) members[tr.class_of[v]].push_back(v);
    std::vector<Vertex> order;
    for (Vertex r : reduced->order) order.insert(order.end(), members[r].begin(), members[r].end());
    auto out = as_round(g, order);
    if (!out) throw std::logic_error("twin expansion broke a round ordering");
    return out;
}

}  // namespace lcc
