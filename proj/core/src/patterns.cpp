#include "lcc/patterns.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lcc {

namespace {

// Edge lists with 1-based labels, as drawn.
Graph one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [u, v] : edges) e.emplace_back(u - 1, v - 1);
    return Graph(n, e);
}

// Drawings numbered by their node ids in the figure, shifted to start at 1.
Graph drawn(int first, int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [u, v] : edges) e.emplace_back(u - first, v - first);
    return Graph(n, e);
}

std::vector<Pattern> build_catalogue() {
    std::vector<Pattern> c;
    c.push_back({"F1", {}, one_based(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}, {3, 5}, {4, 6}})});
    c.push_back({"F2", {}, one_based(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                          {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}})});
    c.push_back({"F3", {}, one_based(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}, {2, 4},
                                          {3, 5}, {4, 6}, {5, 7}, {2, 5}, {3, 6}})});
    c.push_back({"claw", {}, Graph(4, {{0, 1}, {0, 2}, {0, 3}})});
    c.push_back({"K1+K3", {}, Graph(4, {{1, 2}, {1, 3}, {2, 3}})});
    c.push_back({"tent", {}, one_based(6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 5}, {5, 6}})});
    c.push_back({"tucker-i", {}, drawn(14, 7, {{15, 20}, {20, 18}, {18, 15}, {15, 16}, {16, 19}, {19, 18},
                                               {18, 17}, {17, 14}, {14, 15}})});
    c.push_back({"tucker-ii", {}, drawn(1, 6, {{2, 3}, {3, 5}, {5, 2}, {2, 1}, {1, 3}, {3, 6}, {6, 5}, {5, 4},
                                               {4, 2}})});
    c.push_back({"tucker-iii", {}, drawn(7, 7, {{7, 9}, {9, 12}, {12, 13}, {13, 10}, {10, 9}, {9, 8}, {8, 11},
                                                {11, 12}})});
    c.push_back({"tucker-iv", {}, drawn(21, 7, {{21, 22}, {22, 23}, {23, 24}, {24, 25}, {22, 26}, {26, 27},
                                                {26, 24}})});
    c.push_back({"tucker-v", {}, drawn(28, 7, {{28, 29}, {29, 30}, {30, 31}, {31, 32}, {34, 33}, {33, 30}})});
    return c;
}

}  // namespace

const std::vector<Pattern>& catalogue() {
    static const std::vector<Pattern> c = build_catalogue();
    return c;
}

const Pattern& pattern(const std::string& name) {
    for (const auto& p : catalogue())
        if (p.name == name) return p;
    throw std::out_of_range("unknown pattern " + name);
}

Pattern cycle_plus_k1(int k) {
    if (k < 3) throw std::invalid_argument("cycle length below 3");
    return {"C" + std::to_string(k) + "+K1", k, disjoint_union(cycle_graph(k), Graph(1))};
}

Pattern antihole(int k) {
    if (k < 2) throw std::invalid_argument("antihole parameter below 2");
    return {"co-C" + std::to_string(2 * k), k, complement(cycle_graph(2 * k))};
}

Pattern odd_cycle_plus_k1(int k) {
    if (k < 1) throw std::invalid_argument("odd cycle parameter below 1");
    return {"C" + std::to_string(2 * k + 1) + "+K1", k, disjoint_union(cycle_graph(2 * k + 1), Graph(1))};
}

Pattern tucker_complement(const std::string& roman) {
    const Pattern& p = pattern("tucker-" + roman);
    return {"co-tucker-" + roman, {}, complement(p.graph)};
}

bool is_induced_embedding(const Graph& host, const Graph& p, const std::vector<Vertex>& map) {
    if (static_cast<int>(map.size()) != p.order()) return false;
    std::vector<Vertex> seen(map);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (Vertex v : map)
        if (v < 0 || v >= host.order()) return false;
    for (int i = 0; i < p.order(); ++i)
        for (int j = i + 1; j < p.order(); ++j)
            if (p.adjacent(i, j) != host.adjacent(map[i], map[j])) return false;
    return true;
}

std::optional<Occurrence> find_induced(const Graph& host, const Pattern& p) {
    const Graph& pg = p.graph;
    const int k = pg.order();
    if (k > host.order()) return std::nullopt;
    if (k == 0) return Occurrence{p.name, p.k, {}};

    // Pattern vertices in an order that keeps each new vertex attached to the
    // already placed ones where possible.
    std::vector<int> seq;
    std::vector<char> chosen(k, 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1;
        for (int v = 0; v < k; ++v) {
            if (chosen[v]) continue;
            int links = 0;
            for (Vertex u : pg.neighbours(v)) links += chosen[u];
            if (links > best_links || (links == best_links && pg.degree(v) > pg.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        chosen[best] = 1;
        seq.push_back(best);
    }

    std::vector<Vertex> map(k, -1);
    std::vector<char> used(host.order(), 0);
    std::function<bool(int)> place = [&](int depth) -> bool {
        if (depth == k) return true;
        const int v = seq[depth];
        Vertex anchor = -1;
        for (Vertex u : pg.neighbours(v))
            if (map[u] != -1) {
                anchor = map[u];
                break;
            }
        auto try_candidate = [&](Vertex h) -> bool {
            if (used[h] || host.degree(h) < pg.degree(v)) return false;
            for (int d = 0; d < depth; ++d) {
                const int w = seq[d];
                if (pg.adjacent(v, w) != host.adjacent(h, map[w])) return false;
            }
            map[v] = h;
            used[h] = 1;
            if (place(depth + 1)) return true;
            used[h] = 0;
            map[v] = -1;
            return false;
        };
        if (anchor != -1) {
            for (Vertex h : host.neighbours(anchor))
                if (try_candidate(h)) return true;
        } else {
            for (Vertex h = 0; h < host.order(); ++h)
                if (try_candidate(h)) return true;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return Occurrence{p.name, p.k, std::move(map)};
}

std::optional<std::vector<Vertex>> find_hole(const Graph& g, int min_length, Parity parity,
                                             const std::vector<char>& allowed) {
    const int n = g.order();
    auto ok_vertex = [&](Vertex v) { return allowed.empty() || allowed[v]; };
    auto wanted = [&](int len) {
        if (len < std::max(min_length, 4)) return false;
        if (parity == Parity::Even) return len % 2 == 0;
        if (parity == Parity::Odd) return len % 2 == 1;
        return true;
    };
    std::vector<int> touch(n, 0);  // path vertices adjacent to v
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    std::optional<std::vector<Vertex>> found;

    auto push = [&](Vertex v) {
        path.push_back(v);
        on_path[v] = 1;
        for (Vertex u : g.neighbours(v)) ++touch[u];
    };
    auto pop = [&]() {
        const Vertex v = path.back();
        path.pop_back();
        on_path[v] = 0;
        for (Vertex u : g.neighbours(v)) --touch[u];
    };

    std::function<bool(Vertex)> grow = [&](Vertex s) -> bool {
        const Vertex last = path.back();
        for (Vertex w : g.neighbours(last)) {
            if (w <= s || on_path[w] || !ok_vertex(w)) continue;
            const bool closes = path.size() >= 2 && g.adjacent(w, s);
            if (closes) {
                if (touch[w] == 2 && wanted(static_cast<int>(path.size()) + 1)) {
                    push(w);
                    found = path;
                    return true;
                }
                continue;
            }
            if (touch[w] != 1) continue;
            push(w);
            if (grow(s)) return true;
            pop();
        }
        return false;
    };

    for (Vertex s = 0; s < n; ++s) {
        if (!ok_vertex(s)) continue;
        push(s);
        const bool hit = grow(s);
        if (hit) return found;
        pop();
    }
    return std::nullopt;
}

std::optional<Occurrence> non_pca_witness(const Graph& g) {
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v) {
        std::vector<char> allowed(n, 1);
        allowed[v] = 0;
        for (Vertex u : g.neighbours(v)) allowed[u] = 0;
        if (auto hole = find_hole(g, 4, Parity::Even, allowed)) {
            const int len = static_cast<int>(hole->size());
            Occurrence occ{cycle_plus_k1(len).name, len / 2, *hole};
            occ.map.push_back(v);
            return occ;
        }
    }
    const Graph co = complement(g);
    if (auto hole = find_hole(co, 6, Parity::Even)) {
        const int len = static_cast<int>(hole->size());
        return Occurrence{antihole(len / 2).name, len / 2, *hole};
    }
    for (const char* roman : {"ii", "iii", "iv", "v"})
        if (auto occ = find_induced(g, tucker_complement(roman))) return occ;
    return std::nullopt;
}

}  // namespace lcc
