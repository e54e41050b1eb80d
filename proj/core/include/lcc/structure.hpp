#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcc/graph.hpp"
#include "lcc/orderings.hpp"
#include "lcc/patterns.hpp"
#include "lcc/recognizer.hpp"

namespace lcc {

/// Minimum number of cliques covering V(g). Exact: greedy on proper interval
/// components, branch and bound otherwise (throws std::length_error for a
/// non-interval component above 40 vertices).
int clique_cover_number(const Graph& g);

/// Cliques G[s_i, t_i] (ordering positions, 0-based) of the greedy
/// left-to-right cover.
struct CanonicalCliqueCover {
    std::vector<int> s;
    std::vector<int> t;

    int k() const noexcept { return static_cast<int>(s.size()); }
    friend bool operator==(const CanonicalCliqueCover&, const CanonicalCliqueCover&) = default;
};

/// Throws std::invalid_argument if o does not verify or g is disconnected;
/// std::logic_error if the cliques are not maximal, increasing and spanning.
/// Consecutive cliques of a reduced graph may still overlap in two or more
/// vertices (e.g. reach 2,3,4,5,6,6,6); classify_type reports that case.
CanonicalCliqueCover canonical_cover(const Graph& g, const StraightOrdering& o);

enum class PigClass { Clique, Type1, Type2, Type3, Type4, NotTyped };

std::string to_string(PigClass c);

struct TypeResult {
    PigClass cls = PigClass::NotTyped;
    std::string reason;                // set for NotTyped
    std::optional<Occurrence> witness;  // induced F1/F2/F3, if one exists

    bool typed() const noexcept { return cls != PigClass::NotTyped && cls != PigClass::Clique; }
};

/// Throws std::invalid_argument unless g is connected without cutvertex.
TypeResult classify_type(const Graph& g, const StraightOrdering& o, const CanonicalCliqueCover& cover);

/// Which end vertex gets monochromatic edges when a two-clique type 1 graph
/// is coloured (the other types fix this themselves).
enum class MonoEnd { First, Last };

/// Explicit colouring for a Clique (all colour 1) or typed graph. The
/// monochromatic end vertices always see colour 1. Throws
/// std::invalid_argument for NotTyped.
EdgeColouring type_colouring(const Graph& g, const StraightOrdering& o, const CanonicalCliqueCover& cover,
                             PigClass cls, MonoEnd end = MonoEnd::First);

struct TypedPath {
    std::string ends;             // e.g. "s2..sk"
    std::vector<Vertex> vertices;  // graph vertices along the path
    bool odd;                      // stated parity
};

/// The induced paths listed for each type, with their stated parities.
/// Throws std::invalid_argument when cover.k() < 3 or cls is untyped.
std::vector<TypedPath> typed_paths(const Graph& g, const StraightOrdering& o, const CanonicalCliqueCover& cover,
                                   PigClass cls);

/// Induced path check used for typed_paths.
bool is_induced_path(const Graph& g, const std::vector<Vertex>& path);

struct Segment {
    int first = 0;  // ordering positions, inclusive
    int last = 0;
    CanonicalCliqueCover cover;
    TypeResult type;
};

struct Decision {
    bool colourable = false;
    std::optional<EdgeColouring> colouring;
    std::string reason;
    std::vector<Segment> segments;  // blocks between (pseudo-)cutvertices
    std::vector<int> cuts;          // their ordering positions
};

/// Decision for a connected reduced proper interval graph. Throws
/// std::invalid_argument on unmet preconditions.
Decision pig_decide(const Graph& g, const StraightOrdering& o);

struct WeakBlockDecomposition {
    std::vector<int> pseudo_cut;  // ordering positions, increasing
    std::vector<Segment> blocks;  // block i runs from pseudo_cut[i] clockwise to pseudo_cut[i+1]
};

/// Throws std::invalid_argument if g is a proper interval graph or o does not
/// verify. A block keeps the edges whose clique arc lies inside it, so the
/// edge between two adjacent pseudo-cutvertices belongs to one block only.
WeakBlockDecomposition pseudo_cutvertices(const Graph& g, const RoundOrdering& o);

/// Odd hole or odd antihole search; throws std::length_error above 30 vertices.
bool is_perfect(const Graph& g);

/// Decision for a connected reduced proper circular-arc graph that is not a
/// proper interval graph and has cc >= 3. Without pseudo-cutvertices the
/// decision is perfection plus F1/F2/F3-freeness, with the colouring taken
/// from G+; above 30 vertices G+ decides alone.
Decision pca_decide(const Graph& g, const RoundOrdering& o);

/// Colour 1 inside the sides of a bipartition of the complement, 2 across.
/// Throws std::invalid_argument if the complement is not bipartite.
EdgeColouring cc2_colouring(const Graph& g);

struct ComponentReport {
    std::vector<Vertex> vertices;  // original labels
    std::string cls;               // "PIG", "PCA" or "other"
    int reduced_n = 0;
    std::optional<StraightOrdering> straight;  // on the reduced graph
    std::optional<RoundOrdering> round;
    std::optional<CanonicalCliqueCover> cover;
    std::string type;                     // PigClass name, "segments" or ""
    std::vector<Vertex> pseudo_cutvertices;  // original labels
    std::string method;                   // "cc2", "pig", "pca" or "aux"
    bool colourable = false;
    std::string reason;
};

struct StructuralReport {
    std::string cls;
    int reduced_n = 0;
    bool colourable = false;
    std::optional<EdgeColouring> colouring;  // on the input graph
    std::string reason;
    std::vector<ComponentReport> components;
};

/// Component-wise structural decision with twin reduction and lifting. A
/// colouring that fails verification raises std::logic_error.
StructuralReport structural_recognize(const Graph& g);

}  // namespace lcc
