#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcc/graph.hpp"

namespace lcc {

/// Named small graph. `k` is set for members of parametrised families.
struct Pattern {
    std::string name;
    std::optional<int> k;
    Graph graph;
};

/// Fixed catalogue: F1, F2, F3, claw, K1+K3, tent and the five Tucker
/// drawings tucker-i .. tucker-v.
const std::vector<Pattern>& catalogue();

/// Catalogue entry by name; throws std::out_of_range for unknown names.
const Pattern& pattern(const std::string& name);

// Families.
Pattern cycle_plus_k1(int k);      // C_k + K1
Pattern antihole(int k);           // complement of C_2k
Pattern odd_cycle_plus_k1(int k);  // C_{2k+1} + K1
Pattern tucker_complement(const std::string& roman);  // complement of tucker-<roman>

/// An induced embedding: map[i] is the host vertex of pattern vertex i.
struct Occurrence {
    std::string pattern;
    std::optional<int> k;
    std::vector<Vertex> map;
};

std::optional<Occurrence> find_induced(const Graph& host, const Pattern& p);

/// True iff `map` is injective and preserves adjacency and non-adjacency.
bool is_induced_embedding(const Graph& host, const Graph& p, const std::vector<Vertex>& map);

enum class Parity { Any, Even, Odd };

/// Chordless cycle of length >= min_length with the given parity, using only
/// vertices with allowed[v] (all when empty). Vertices in cyclic order.
std::optional<std::vector<Vertex>> find_hole(const Graph& g, int min_length, Parity parity,
                                             const std::vector<char>& allowed = {});

/// For a colourable g: an induced C_2k+K1 (k >= 2), complement of C_2k
/// (k >= 3), or complement of tucker-ii..v; nullopt when none exists.
std::optional<Occurrence> non_pca_witness(const Graph& g);

}  // namespace lcc
