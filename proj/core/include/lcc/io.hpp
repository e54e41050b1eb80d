#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lcc/graph.hpp"
#include "lcc/kaleidoscope.hpp"
#include "lcc/oracle.hpp"
#include "lcc/orderings.hpp"
#include "lcc/patterns.hpp"
#include "lcc/recognizer.hpp"
#include "lcc/structure.hpp"

// JSON and text formats shared by the command-line tool and the tests. All
// readers throw ParseError on malformed input.
namespace lcc {

/// Text colouring: one "u v c" line per edge of g, '#' comments allowed.
EdgeColouring parse_colouring(const Graph& g, std::string_view text);
std::string serialize_colouring(const Graph& g, const EdgeColouring& c);

/// {"edges": [[u, v, c], ...]}
std::string colouring_to_json(const Graph& g, const EdgeColouring& c);
EdgeColouring colouring_from_json(const Graph& g, std::string_view text);

/// {"k", "anchors", "walks", "host": "complement", "host_edges", "host_hash"}
std::string kaleidoscope_to_json(const Kaleidoscope& kal);
Kaleidoscope kaleidoscope_from_json(std::string_view text);

/// {"order", "ell", "gamma", "circular"}
std::string ordering_to_json(const StraightOrdering& o);
std::string ordering_to_json(const RoundOrdering& o);
StraightOrdering straight_from_json(std::string_view text);
RoundOrdering round_from_json(std::string_view text);

/// {"pattern", "k", "map"}
std::string occurrence_to_json(const Occurrence& occ);
Occurrence occurrence_from_json(std::string_view text);

/// {"status": "colourable" | "not_colourable", "colouring" | "odd_cycle",
///  "kaleidoscope", "count"}
std::string recognition_to_json(const Graph& g, const RecognitionResult& r,
                                const std::optional<Kaleidoscope>& certificate = std::nullopt,
                                const std::optional<ColouringCount>& count = std::nullopt);

std::string report_to_json(const Graph& g, const StructuralReport& r);

std::string spec_to_json(const GeneratorSpec& spec);
GeneratorSpec spec_from_json(std::string_view text);

std::string harness_to_json(const HarnessReport& r);

}  // namespace lcc
