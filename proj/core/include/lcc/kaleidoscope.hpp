#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcc/graph.hpp"

namespace lcc {

/// Anchors v_0..v_{k-1} with walks W_i from v_i to v_{i+2 mod k} that avoid
/// v_{i+1 mod k}, of odd total length. Anchors may repeat.
struct Kaleidoscope {
    std::vector<Vertex> anchors;
    std::vector<std::vector<Vertex>> walks;
    // Fingerprint of the host the certificate was built in; empty hash means
    // unbound.
    int host_edges = -1;
    std::string host_hash;

    int order() const noexcept { return static_cast<int>(anchors.size()); }
    int total_length() const;

    friend bool operator==(const Kaleidoscope&, const Kaleidoscope&) = default;
};

struct KaleidoscopeCheck {
    bool ok = true;
    std::string violation;
    explicit operator bool() const noexcept { return ok; }
};

/// Throws std::out_of_range if any anchor or walk vertex is not a vertex of h.
KaleidoscopeCheck verify_kaleidoscope(const Graph& h, const Kaleidoscope& kal);

/// Builds a kaleidoscope in complement(g) from an odd cycle of G+ (aux node
/// ids). Throws std::invalid_argument if the input is not an odd cycle of G+.
Kaleidoscope extract_kaleidoscope(const Graph& g, const std::vector<EdgeId>& odd_cycle);

struct Order2Subgraph {
    enum class Kind { K1PlusK3, OddHole };
    Kind kind;
    std::vector<Vertex> vertices;  // K1PlusK3: isolated vertex first; OddHole: cyclic order
};

/// Induced K1+K3 or odd hole inside h witnessed by an order-2 kaleidoscope.
/// Throws std::invalid_argument if kal does not verify or k != 2.
Order2Subgraph order2_to_subgraph(const Graph& h, const Kaleidoscope& kal);

/// Induced odd cycle contained in an odd closed walk of h (walk[0] is not
/// repeated at the end).
std::vector<Vertex> induced_odd_cycle_in_walk(const Graph& h, std::vector<Vertex> closed_walk);

}  // namespace lcc
