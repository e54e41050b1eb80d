#include "lcc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <functional>
#include <istream>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lcc {

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.resize(n);
    inc_.resize(n);
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw GraphError("edge " + std::to_string(a) + " " + std::to_string(b) + " out of range");
        if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
        const EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
        adj_[a].push_back(b);
        inc_[a].push_back(id);
        adj_[b].push_back(a);
        inc_[b].push_back(id);
    }
    for (int v = 0; v < n; ++v) {
        std::vector<std::size_t> idx(adj_[v].size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return adj_[v][x] < adj_[v][y]; });
        std::vector<Vertex> a;
        std::vector<EdgeId> e;
        a.reserve(idx.size());
        e.reserve(idx.size());
        for (auto i : idx) {
            if (!a.empty() && a.back() == adj_[v][i])
                throw GraphError("duplicate edge " + std::to_string(v) + " " + std::to_string(a.back()));
            a.push_back(adj_[v][i]);
            e.push_back(inc_[v][i]);
        }
        adj_[v] = std::move(a);
        inc_[v] = std::move(e);
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const Vertex x = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), x);
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return std::nullopt;
    return inc_[u][static_cast<std::size_t>(it - a.begin())];
}

VertexSet Graph::closed_neighbourhood(Vertex v) const {
    VertexSet out(adj_[v].begin(), adj_[v].end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    for (const Edge& e : a.edges_)
        if (!b.adjacent(e.u, e.v)) return false;
    return true;
}

namespace {

std::optional<long long> parse_int(std::string_view tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
    ParsedGraph result;
    std::optional<std::pair<long long, long long>> header;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    long long edge_lines = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto toks = tokens(line);
        if (toks.empty() || toks.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (toks.size() != 2) throw ParseError(line_no, "expected two integers");
        auto a = parse_int(toks[0]);
        auto b = parse_int(toks[1]);
        if (!a || !b) throw ParseError(line_no, "expected two integers");
        if (!header) {
            if (*a < 0 || *b < 0) throw ParseError(line_no, "malformed header");
            header = std::pair{*a, *b};
        } else {
            ++edge_lines;
            const long long n = header->first;
            if (*a < 0 || *b < 0 || *a >= n || *b >= n)
                throw ParseError(line_no, "vertex index out of range");
            if (*a == *b) throw ParseError(line_no, "self-loop");
            auto key = std::pair{static_cast<Vertex>(std::min(*a, *b)), static_cast<Vertex>(std::max(*a, *b))};
            if (!seen.insert(key).second) {
                result.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                                          std::to_string(key.first) + " " + std::to_string(key.second) +
                                          " ignored");
                continue;
            }
            edges.push_back(key);
        }
        if (end == text.size()) break;
    }
    if (!header) throw ParseError(line_no, "missing header");
    if (edge_lines != header->second)
        throw ParseError(line_no, "header announces " + std::to_string(header->second) + " edges, found " +
                                      std::to_string(edge_lines));
    if (header->first > 100'000'000) throw ParseError(1, "vertex count too large");
    result.graph = Graph(static_cast<int>(header->first), edges);
    return result;
}

ParsedGraph parse_graph(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(text);
}

std::string serialize_graph(const Graph& g) {
    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    std::sort(es.begin(), es.end());
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto e : es) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string content_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_graph(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u) {
        auto nb = g.neighbours(u);
        auto it = std::upper_bound(nb.begin(), nb.end(), u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (it != nb.end() && *it == v) {
                ++it;
                continue;
            }
            es.emplace_back(u, v);
        }
    }
    return Graph(n, es);
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> s) {
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order()) throw GraphError("vertex " + std::to_string(s[i]) + " out of range");
        if (index[s[i]] != -1) throw GraphError("vertex " + std::to_string(s[i]) + " listed twice");
        index[s[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbours(s[i]))
            if (index[w] > static_cast<int>(i)) es.emplace_back(static_cast<Vertex>(i), index[w]);
    std::sort(es.begin(), es.end());
    return {Graph(static_cast<int>(s.size()), es), std::vector<Vertex>(s.begin(), s.end())};
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabel: size mismatch");
    return induced(g, perm).graph;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out[c].push_back(v);
            for (Vertex w : g.neighbours(v))
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet cutvertices(const Graph& g) {
    if (!is_connected(g)) throw GraphError("cutvertices: graph is disconnected");
    const int n = g.order();
    if (n <= 2) return {};
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<bool> cut(n, false);
    // Iterative DFS: (vertex, next neighbour index).
    std::vector<std::pair<Vertex, std::size_t>> stack;
    int timer = 0;
    int root_children = 0;
    disc[0] = low[0] = timer++;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        auto nb = g.neighbours(v);
        if (i < nb.size()) {
            Vertex w = nb[i++];
            if (disc[w] == -1) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                if (v == 0) ++root_children;
                stack.emplace_back(w, 0);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            Vertex done = v;
            stack.pop_back();
            if (!stack.empty()) {
                Vertex p = stack.back().first;
                low[p] = std::min(low[p], low[done]);
                if (p != 0 && low[done] >= disc[p]) cut[p] = true;
            }
        }
    }
    if (root_children > 1) cut[0] = true;
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

TwinReduction twin_reduce(const Graph& g) {
    const int n = g.order();
    // Deleting a true twin never creates or destroys another twin pair, so
    // repeated deletion keeps exactly the minimum of each closed-neighbourhood
    // class.
    std::map<VertexSet, Vertex> first_with;
    TwinReduction r;
    r.class_of.assign(n, -1);
    std::vector<Vertex> keeper(n);
    for (Vertex v = 0; v < n; ++v) {
        auto [it, inserted] = first_with.emplace(g.closed_neighbourhood(v), v);
        keeper[v] = it->second;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (keeper[v] == v) {
            r.class_of[v] = static_cast<Vertex>(r.representative.size());
            r.representative.push_back(v);
        }
    }
    for (Vertex v = 0; v < n; ++v) r.class_of[v] = r.class_of[keeper[v]];
    r.reduced = induced(g, r.representative).graph;
    return r;
}

bool is_reduced(const Graph& g) {
    std::set<VertexSet> seen;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!seen.insert(g.closed_neighbourhood(v)).second) return false;
    return true;
}

VertexSet universal_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    return out;
}

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto e : a.edges()) es.emplace_back(e.u, e.v);
    for (auto e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), es);
}

}  // namespace lcc
