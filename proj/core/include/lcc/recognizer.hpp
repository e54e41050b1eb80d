#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcc/graph.hpp"

namespace lcc {

enum class Colour : std::uint8_t { unset = 0, one = 1, two = 2 };

inline Colour other(Colour c) { return c == Colour::one ? Colour::two : Colour::one; }

/// Total map from host edge ids to {1, 2}.
class EdgeColouring {
public:
    EdgeColouring() = default;
    explicit EdgeColouring(int edge_count, Colour fill = Colour::unset) : colours_(edge_count, fill) {}
    explicit EdgeColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

    int size() const noexcept { return static_cast<int>(colours_.size()); }
    Colour operator[](EdgeId e) const { return colours_[e]; }
    Colour& operator[](EdgeId e) { return colours_[e]; }
    const std::vector<Colour>& colours() const noexcept { return colours_; }
    bool total() const;

    /// Colours 1 and 2 exchanged.
    EdgeColouring switched() const;

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

private:
    std::vector<Colour> colours_;
};

/// Auxiliary graph G+: one node per host edge; two nodes are adjacent when the
/// host edges form an induced path of length 2.
class AuxGraph {
public:
    explicit AuxGraph(const Graph& host);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::span<const EdgeId> neighbours(EdgeId e) const { return adj_[e]; }
    bool adjacent(EdgeId e, EdgeId f) const;
    std::size_t edge_count() const;

private:
    std::vector<std::vector<EdgeId>> adj_;
};

AuxGraph build_aux(const Graph& g);

/// Definitional predicate: host edges e and f share exactly one endpoint and
/// their other endpoints are non-adjacent.
bool forms_induced_path(const Graph& g, EdgeId e, EdgeId f);

struct RecognitionResult {
    std::optional<EdgeColouring> colouring;  // set iff colourable
    std::vector<EdgeId> odd_cycle;           // aux nodes; set iff not colourable

    bool colourable() const noexcept { return colouring.has_value(); }
};

/// Decides colourability through a breadth-first 2-colouring of G+. The
/// smallest edge id of each aux component gets colour 1. A returned odd cycle
/// is chordless in G+.
RecognitionResult recognize(const Graph& g);

struct LocalViolation {
    Vertex centre;
    Vertex u;
    Vertex v;  // centre-u and centre-v share a colour but u, v are non-adjacent

    friend bool operator==(const LocalViolation&, const LocalViolation&) = default;
};

struct LocalCheck {
    bool ok = true;
    std::optional<LocalViolation> violation;
    explicit operator bool() const noexcept { return ok; }
};

/// Throws std::invalid_argument on a colouring that is not total on E(g).
LocalCheck verify_locally_complete(const Graph& g, const EdgeColouring& c);

/// Number of locally complete 2-edge-colourings: 0 when G+ has an odd cycle,
/// else 2^(components of G+).
struct ColouringCount {
    bool colourable = true;
    std::size_t free_components = 0;

    /// Exact value if it fits into 64 bits.
    std::optional<std::uint64_t> value() const;
    std::string decimal() const;

    friend bool operator==(const ColouringCount&, const ColouringCount&) = default;
};

ColouringCount count_colourings(const Graph& g);

}  // namespace lcc
