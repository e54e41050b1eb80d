#include "lcc/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace lcc {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(1, e.what());
    }
}

// Runs a reader over a parsed document, turning type errors into ParseError.
template <class F>
auto read(std::string_view text, F f) {
    const json j = parse_json(text);
    try {
        return f(j);
    } catch (const json::exception& e) {
        throw ParseError(1, e.what());
    }
}

int colour_value(Colour c) { return c == Colour::one ? 1 : c == Colour::two ? 2 : 0; }

EdgeId edge_or_throw(const Graph& g, long long u, long long v, std::size_t line) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw ParseError(line, "vertex out of range");
    const auto e = g.edge_id(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!e) throw ParseError(line, std::to_string(u) + " " + std::to_string(v) + " is not an edge");
    return *e;
}

Colour colour_or_throw(long long c, std::size_t line) {
    if (c == 1) return Colour::one;
    if (c == 2) return Colour::two;
    throw ParseError(line, "colour must be 1 or 2");
}

void require_total(const Graph& g, const EdgeColouring& c) {
    for (EdgeId e = 0; e < g.size(); ++e)
        if (c[e] == Colour::unset)
            throw ParseError(1, "edge " + std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) +
                                    " has no colour");
}

json colouring_json(const Graph& g, const EdgeColouring& c) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.size(); ++e) edges.push_back({g.edge(e).u, g.edge(e).v, colour_value(c[e])});
    return {{"edges", edges}};
}

template <class O>
json ordering_json(const O& o, bool circular) {
    return {{"order", o.order}, {"ell", o.ell}, {"gamma", o.gamma}, {"circular", circular}};
}

template <class O>
O ordering_from(const json& j, bool circular) {
    if (j.value("circular", false) != circular)
        throw ParseError(1, circular ? "expected a round ordering" : "expected a straight ordering");
    O o;
    o.order = j.at("order").get<std::vector<Vertex>>();
    o.ell = j.value("ell", std::vector<int>{});
    o.gamma = j.value("gamma", std::vector<int>{});
    return o;
}

json kaleidoscope_json(const Kaleidoscope& kal) {
    json j{{"k", kal.order()}, {"anchors", kal.anchors}, {"walks", kal.walks}, {"host", "complement"}};
    if (!kal.host_hash.empty()) {
        j["host_edges"] = kal.host_edges;
        j["host_hash"] = kal.host_hash;
    }
    return j;
}

json occurrence_json(const Occurrence& occ) {
    json j{{"pattern", occ.pattern}, {"map", occ.map}};
    j["k"] = occ.k ? json(*occ.k) : json(nullptr);
    return j;
}

json spec_json(const GeneratorSpec& s) {
    json j{{"family", s.family}, {"seed", s.seed}};
    const GeneratorSpec d;
    if (s.n != d.n) j["n"] = s.n;
    if (s.p != d.p) j["p"] = s.p;
    if (s.shuffle != d.shuffle) j["shuffle"] = s.shuffle;
    if (s.width != d.width) j["width"] = s.width;
    if (s.even != d.even) j["even"] = s.even;
    if (!s.name.empty()) j["name"] = s.name;
    if (s.drop != d.drop) j["drop"] = s.drop;
    if (!s.type.empty()) j["type"] = s.type;
    if (s.k != d.k) j["k"] = s.k;
    if (s.blocks != d.blocks) j["blocks"] = s.blocks;
    if (s.index != d.index) j["index"] = s.index;
    if (s.expect) j["expect"] = *s.expect ? "colourable" : "not_colourable";
    return j;
}

GeneratorSpec spec_from(const json& j) {
    static const std::vector<std::string> known{"family", "n", "p", "seed", "shuffle", "width", "even", "name",
                                                "drop", "type", "k", "blocks", "index", "expect", "count"};
    if (!j.is_object()) throw ParseError(1, "generator spec must be an object");
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError(1, "unknown field " + key);
    GeneratorSpec s;
    s.family = j.value("family", s.family);
    s.n = j.value("n", s.n);
    s.p = j.value("p", s.p);
    s.seed = j.value("seed", s.seed);
    s.shuffle = j.value("shuffle", s.shuffle);
    s.width = j.value("width", s.width);
    s.even = j.value("even", s.even);
    s.name = j.value("name", s.name);
    s.drop = j.value("drop", s.drop);
    s.type = j.value("type", s.type);
    s.k = j.value("k", s.k);
    s.blocks = j.value("blocks", s.blocks);
    s.index = j.value("index", s.index);
    if (j.contains("expect") && j.at("expect").is_boolean()) {
        s.expect = j.at("expect").get<bool>();
    } else if (j.contains("expect")) {
        const std::string e = j.at("expect").get<std::string>();
        if (e != "colourable" && e != "not_colourable") throw ParseError(1, "expect must be colourable or not_colourable");
        s.expect = e == "colourable";
    }
    return s;
}

}  // namespace

EdgeColouring parse_colouring(const Graph& g, std::string_view text) {
    EdgeColouring c(g.size());
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        long long u = 0, v = 0, col = 0;
        std::string extra;
        if (!(fields >> u >> v >> col) || (fields >> extra)) throw ParseError(line_no, "expected \"u v c\"");
        const EdgeId e = edge_or_throw(g, u, v, line_no);
        if (c[e] != Colour::unset) throw ParseError(line_no, "edge coloured twice");
        c[e] = colour_or_throw(col, line_no);
    }
    require_total(g, c);
    return c;
}

std::string serialize_colouring(const Graph& g, const EdgeColouring& c) {
    std::ostringstream out;
    for (EdgeId e = 0; e < g.size(); ++e)
        out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << colour_value(c[e]) << '\n';
    return out.str();
}

std::string colouring_to_json(const Graph& g, const EdgeColouring& c) { return colouring_json(g, c).dump(); }

EdgeColouring colouring_from_json(const Graph& g, std::string_view text) {
    return read(text, [&](const json& j) {
        EdgeColouring c(g.size());
        for (const json& t : j.at("edges")) {
            if (!t.is_array() || t.size() != 3) throw ParseError(1, "edge entries are [u, v, c]");
            const EdgeId e = edge_or_throw(g, t[0].get<long long>(), t[1].get<long long>(), 1);
            if (c[e] != Colour::unset) throw ParseError(1, "edge coloured twice");
            c[e] = colour_or_throw(t[2].get<long long>(), 1);
        }
        require_total(g, c);
        return c;
    });
}

std::string kaleidoscope_to_json(const Kaleidoscope& kal) { return kaleidoscope_json(kal).dump(); }

Kaleidoscope kaleidoscope_from_json(std::string_view text) {
    return read(text, [](const json& j) {
        Kaleidoscope kal;
        kal.anchors = j.at("anchors").get<std::vector<Vertex>>();
        kal.walks = j.at("walks").get<std::vector<std::vector<Vertex>>>();
        if (j.contains("k") && j.at("k").get<int>() != kal.order()) throw ParseError(1, "k differs from the anchor count");
        if (j.value("host", std::string("complement")) != "complement")
            throw ParseError(1, "only complement hosts are supported");
        kal.host_edges = j.value("host_edges", -1);
        kal.host_hash = j.value("host_hash", std::string{});
        return kal;
    });
}

std::string ordering_to_json(const StraightOrdering& o) { return ordering_json(o, false).dump(); }
std::string ordering_to_json(const RoundOrdering& o) { return ordering_json(o, true).dump(); }

StraightOrdering straight_from_json(std::string_view text) {
    return read(text, [](const json& j) { return ordering_from<StraightOrdering>(j, false); });
}

RoundOrdering round_from_json(std::string_view text) {
    return read(text, [](const json& j) { return ordering_from<RoundOrdering>(j, true); });
}

std::string occurrence_to_json(const Occurrence& occ) { return occurrence_json(occ).dump(); }

Occurrence occurrence_from_json(std::string_view text) {
    return read(text, [](const json& j) {
        Occurrence occ;
        occ.pattern = j.at("pattern").get<std::string>();
        if (j.contains("k") && !j.at("k").is_null()) occ.k = j.at("k").get<int>();
        occ.map = j.at("map").get<std::vector<Vertex>>();
        return occ;
    });
}

std::string recognition_to_json(const Graph& g, const RecognitionResult& r,
                                const std::optional<Kaleidoscope>& certificate,
                                const std::optional<ColouringCount>& count) {
    json j;
    j["status"] = r.colourable() ? "colourable" : "not_colourable";
    if (r.colouring) j["colouring"] = colouring_json(g, *r.colouring);
    if (!r.colourable()) {
        json cycle = json::array();
        for (EdgeId e : r.odd_cycle) cycle.push_back({g.edge(e).u, g.edge(e).v});
        j["odd_cycle"] = cycle;
    }
    if (certificate) j["kaleidoscope"] = kaleidoscope_json(*certificate);
    if (count) {
        if (auto v = count->value())
            j["count"] = *v;
        else
            j["count"] = count->decimal();
    }
    return j.dump();
}

std::string report_to_json(const Graph& g, const StructuralReport& r) {
    json comps = json::array();
    for (const ComponentReport& c : r.components) {
        json jc{{"vertices", c.vertices}, {"class", c.cls},       {"reduced_n", c.reduced_n},
                {"method", c.method},     {"colourable", c.colourable}};
        if (c.straight) jc["straight"] = ordering_json(*c.straight, false);
        if (c.round) jc["round"] = ordering_json(*c.round, true);
        if (c.cover) jc["cover"] = {{"s", c.cover->s}, {"t", c.cover->t}, {"k", c.cover->k()}};
        if (!c.type.empty()) jc["type"] = c.type;
        if (c.round) jc["pseudo_cutvertices"] = c.pseudo_cutvertices;
        if (!c.reason.empty()) jc["reason"] = c.reason;
        comps.push_back(std::move(jc));
    }
    json j{{"class", r.cls}, {"reduced_n", r.reduced_n}, {"colourable", r.colourable}};
    if (r.components.size() == 1) {
        const ComponentReport& c = r.components.front();
        if (!c.type.empty()) j["type"] = c.type;
        if (c.round) j["pseudo_cutvertices"] = c.pseudo_cutvertices;
    }
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.colouring) j["colouring"] = colouring_json(g, *r.colouring);
    j["components"] = std::move(comps);
    return j.dump();
}

std::string spec_to_json(const GeneratorSpec& spec) { return spec_json(spec).dump(); }

GeneratorSpec spec_from_json(std::string_view text) {
    return read(text, [](const json& j) { return spec_from(j); });
}

std::string harness_to_json(const HarnessReport& r) {
    json failures = json::array();
    for (const HarnessFailure& f : r.failures)
        failures.push_back({{"spec", parse_json(f.spec)}, {"graph", f.graph}, {"what", f.what}});
    return json{{"instances", r.instances},
                {"brute_forced", r.brute_forced},
                {"disagreements", r.failures.size()},
                {"failures", failures}}
        .dump();
}

std::vector<GeneratorSpec> parse_manifest(std::string_view text) {
    std::vector<GeneratorSpec> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t cut = text.find('\n');
        const std::string_view line = text.substr(0, cut);
        text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;
        GeneratorSpec spec;
        std::uint64_t count = 1;
        bool all = false;
        try {
            read(line, [&](const json& j) {
                spec = spec_from(j);
                count = j.value("count", std::uint64_t{1});
                all = spec.family == "labelled" && !j.contains("index");
                return 0;
            });
        } catch (const ParseError& e) {
            std::string_view what = e.what();
            what.remove_prefix(std::min(what.size(), what.find(": ") + 2));
            throw ParseError(line_no, std::string(what));
        }
        if (all) {
            if (spec.n < 0 || spec.n > 7) throw ParseError(line_no, "labelled sweeps limited to 7 vertices");
            const std::uint64_t graphs = std::uint64_t{1} << (spec.n * (spec.n - 1) / 2);
            for (std::uint64_t m = 0; m < graphs; ++m) {
                spec.index = m;
                out.push_back(spec);
            }
            continue;
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            out.push_back(spec);
            out.back().seed = spec.seed + i;
        }
    }
    return out;
}

}  // namespace lcc
