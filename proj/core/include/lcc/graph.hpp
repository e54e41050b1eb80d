#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcc {

using Vertex = int;
using EdgeId = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;  // u < v

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
public:
    ParseError(std::size_t line, const std::string& what)
        : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edge ids are assigned in the order the edges
/// were supplied (after normalising each pair to u < v) and never change.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicate edges or out-of-range ends.
    Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
        : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}
    explicit Graph(int n) : Graph(n, std::span<const std::pair<Vertex, Vertex>>{}) {}

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    /// Id of the edge uv, if present.
    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

    /// Closed neighbourhood N[v], sorted.
    VertexSet closed_neighbourhood(Vertex v) const;

    /// Same order and edge set; edge ids may differ.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    // Parallel to adj_: the edge id of each incidence.
    std::vector<std::vector<EdgeId>> inc_;
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

/// Parses the edge-list format: header "n m", then m lines "u v".
/// Lines starting with '#' are ignored. Duplicate edges are dropped with a
/// warning; anything else malformed throws ParseError.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph parse_graph(std::istream& in);

/// Edge list with edges sorted by (u, v).
std::string serialize_graph(const Graph& g);

/// 64-bit FNV-1a over the canonical serialization, as 16 hex digits.
std::string content_hash(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // new vertex i was original[i]
};

/// Subgraph induced by `s`, relabelled 0..|s|-1 in the order given.
InducedSubgraph induced(const Graph& g, std::span<const Vertex> s);

/// Graph with vertex i of the result being perm[i] of g.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Articulation points. Throws GraphError if g is disconnected.
VertexSet cutvertices(const Graph& g);

struct TwinReduction {
    Graph reduced;
    std::vector<Vertex> class_of;        // original -> reduced vertex
    std::vector<Vertex> representative;  // reduced -> original vertex
};

/// Removes true twins (equal closed neighbourhoods) until none remain. Each
/// twin class keeps its smallest vertex id.
TwinReduction twin_reduce(const Graph& g);

bool is_reduced(const Graph& g);

/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

// Common small graphs, mainly for tests and the pattern catalogue.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace lcc
