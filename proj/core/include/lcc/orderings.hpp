#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcc/graph.hpp"

namespace lcc {

/// Linear vertex ordering in which every closed neighbourhood is an interval.
/// ell[i] and gamma[i] are the first and last positions of N[order[i]].
struct StraightOrdering {
    std::vector<Vertex> order;
    std::vector<int> ell;
    std::vector<int> gamma;

    int size() const noexcept { return static_cast<int>(order.size()); }
    friend bool operator==(const StraightOrdering&, const StraightOrdering&) = default;
};

/// Circular analogue: N[order[i]] is the clockwise arc ell[i]..gamma[i]
/// (positions mod n). When N[order[i]] is everything, ell[i] == gamma[i] + 1.
struct RoundOrdering {
    std::vector<Vertex> order;
    std::vector<int> ell;
    std::vector<int> gamma;

    int size() const noexcept { return static_cast<int>(order.size()); }
    friend bool operator==(const RoundOrdering&, const RoundOrdering&) = default;
};

enum class OrderingClause {
    None,
    NotContiguous,   // N[v_i] is not an interval (arc)
    BoundsMismatch,  // stored ell/gamma differ from the recomputed ones
    LeftNotClique,   // G[ell(i), i] is not complete
    RightNotClique,  // G[i, gamma(i)] is not complete
    EdgeNotClique,   // edge v_i v_j with neither G[i, j] nor G[j, i] complete
};

std::string to_string(OrderingClause c);

struct OrderingCheck {
    OrderingClause clause = OrderingClause::None;
    int position = -1;

    bool ok() const noexcept { return clause == OrderingClause::None; }
    explicit operator bool() const noexcept { return ok(); }
};

/// Throws std::invalid_argument if o.order is not a permutation of V(g).
OrderingCheck verify_straight(const Graph& g, const StraightOrdering& o);
OrderingCheck verify_round(const Graph& g, const RoundOrdering& o);

/// Fills in ell/gamma for `order` and verifies; nullopt if any clause fails.
std::optional<StraightOrdering> as_straight(const Graph& g, std::vector<Vertex> order);
std::optional<RoundOrdering> as_round(const Graph& g, std::vector<Vertex> order);

/// Throws GraphError on disconnected input.
std::optional<StraightOrdering> find_straight(const Graph& g);
std::optional<RoundOrdering> find_round(const Graph& g);

/// Lexicographic breadth-first search. With `previous`, ties are broken in
/// favour of the vertex latest in `previous` (the LexBFS+ rule).
std::vector<Vertex> lex_bfs(const Graph& g, const std::vector<Vertex>* previous = nullptr);

/// Inverse permutation: position of each vertex.
std::vector<int> positions_of(const std::vector<Vertex>& order, int n);

}  // namespace lcc
