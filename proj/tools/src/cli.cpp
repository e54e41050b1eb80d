#include "lcc/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "lcc/io.hpp"
#include "lcc/kaleidoscope.hpp"
#include "lcc/oracle.hpp"
#include "lcc/recognizer.hpp"
#include "lcc/structure.hpp"

namespace lcc {

namespace {

using nlohmann::json;

// Unreadable files are input errors like malformed ones.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw InputError("cannot read " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

Graph load_graph(const std::string& path, std::istream& in, std::ostream& err) {
    ParsedGraph p = parse_graph(slurp(path, in));
    for (const std::string& w : p.warnings) err << path << ": warning: " << w << '\n';
    return std::move(p.graph);
}

std::string describe(const LocalViolation& v) {
    return "vertex " + std::to_string(v.centre) + " sees " + std::to_string(v.u) + " and " + std::to_string(v.v) +
           " in one colour but they are not adjacent";
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

int recognize_cmd(Context& cx, const std::string& path, const std::string& method, bool as_json) {
    const Graph g = load_graph(path, cx.in, cx.err);
    std::optional<RecognitionResult> aux;
    std::optional<StructuralReport> structural;
    if (method != "structural") {
        aux = recognize(g);
        if (aux->colourable() && !verify_locally_complete(g, *aux->colouring)) {
            cx.err << "internal error: aux colouring does not verify\n";
            return kExitDisagreement;
        }
    }
    if (method != "aux") structural = structural_recognize(g);
    if (aux && structural && aux->colourable() != structural->colourable) {
        cx.err << "disagreement: aux says " << (aux->colourable() ? "colourable" : "not colourable")
               << ", structural says " << (structural->colourable ? "colourable" : "not colourable") << '\n';
        return kExitDisagreement;
    }
    const bool colourable = aux ? aux->colourable() : structural->colourable;

    std::optional<Kaleidoscope> kal;
    if (aux && !colourable) {
        kal = extract_kaleidoscope(g, aux->odd_cycle);
        if (!verify_kaleidoscope(complement(g), *kal)) {
            cx.err << "internal error: extracted kaleidoscope does not verify\n";
            return kExitDisagreement;
        }
    }
    const ColouringCount count = count_colourings(g);

    if (as_json) {
        json doc;
        if (aux) doc = json::parse(recognition_to_json(g, *aux, kal, count));
        if (structural) {
            json rep = json::parse(report_to_json(g, *structural));
            if (!aux) {
                doc["status"] = colourable ? "colourable" : "not_colourable";
                if (structural->colouring) doc["colouring"] = rep["colouring"];
                doc["count"] = count.value() ? json(*count.value()) : json(count.decimal());
            }
            rep.erase("colouring");
            doc["structural"] = std::move(rep);
        }
        cx.out << doc.dump() << '\n';
        return colourable ? kExitOk : kExitNegative;
    }

    cx.out << (colourable ? "COLOURABLE" : "NOT COLOURABLE") << '\n';
    if (structural) {
        cx.out << "# structural: " << structural->cls;
        if (!structural->reason.empty()) cx.out << ": " << structural->reason;
        cx.out << '\n';
    }
    if (colourable) {
        cx.out << "# colourings: " << count.decimal() << '\n';
        cx.out << serialize_colouring(g, aux ? *aux->colouring : *structural->colouring);
    } else if (kal) {
        cx.out << "# odd cycle of length " << aux->odd_cycle.size() << " in the auxiliary graph\n";
        cx.out << kaleidoscope_to_json(*kal) << '\n';
    }
    return colourable ? kExitOk : kExitNegative;
}

int classify_cmd(Context& cx, const std::string& path) {
    const Graph g = load_graph(path, cx.in, cx.err);
    cx.out << report_to_json(g, structural_recognize(g)) << '\n';
    return kExitOk;
}

int certify_cmd(Context& cx, const std::string& graph_path, const std::string& cert_path) {
    const Graph g = load_graph(graph_path, cx.in, cx.err);
    const std::string text = slurp(cert_path, cx.in);
    const auto first = text.find_first_not_of(" \t\r\n");
    json probe;
    if (first != std::string::npos && text[first] == '{') probe = json::parse(text, nullptr, false);

    if (probe.is_object() && probe.contains("anchors")) {
        const Kaleidoscope kal = kaleidoscope_from_json(text);
        const std::string host_name = probe.value("host", std::string("graph"));
        if (host_name != "graph" && host_name != "complement") throw ParseError(1, "unknown host " + host_name);
        const Graph host = host_name == "complement" ? complement(g) : g;
        if (!kal.host_hash.empty() && kal.host_hash != content_hash(host)) {
            cx.out << "INVALID: certificate was built for a different graph\n";
            return kExitNegative;
        }
        for (Vertex v : kal.anchors)
            if (v < 0 || v >= host.order()) {
                cx.out << "INVALID: vertex " << v << " out of range\n";
                return kExitNegative;
            }
        for (const auto& w : kal.walks)
            for (Vertex v : w)
                if (v < 0 || v >= host.order()) {
                    cx.out << "INVALID: vertex " << v << " out of range\n";
                    return kExitNegative;
                }
        const KaleidoscopeCheck check = verify_kaleidoscope(host, kal);
        if (!check) {
            cx.out << "INVALID: " << check.violation << '\n';
            return kExitNegative;
        }
        cx.out << "VALID kaleidoscope of order " << kal.order() << " and length " << kal.total_length()
               << "; the graph has no locally complete 2-edge-colouring\n";
        return kExitOk;
    }

    const EdgeColouring c = probe.is_object() ? colouring_from_json(g, text) : parse_colouring(g, text);
    const LocalCheck check = verify_locally_complete(g, c);
    if (!check) {
        const LocalViolation& v = *check.violation;
        cx.out << "INVALID: " << describe(v) << '\n' << "violation " << v.centre << ' ' << v.u << ' ' << v.v << '\n';
        return kExitNegative;
    }
    cx.out << "VALID locally complete 2-edge-colouring\n";
    return kExitOk;
}

int generate_cmd(Context& cx, const GeneratorSpec& spec, bool as_json) {
    const Generated gen = generate(spec);
    if (as_json) {
        json doc{{"spec", json::parse(spec_to_json(spec))}, {"graph", serialize_graph(gen.graph)}};
        if (gen.straight) doc["straight"] = json::parse(ordering_to_json(*gen.straight));
        if (gen.round) doc["round"] = json::parse(ordering_to_json(*gen.round));
        cx.out << doc.dump() << '\n';
    } else {
        cx.out << "# " << spec_to_json(spec) << '\n' << serialize_graph(gen.graph);
    }
    return kExitOk;
}

int oracle_cmd(Context& cx, const std::string& path, bool as_json) {
    const Graph g = load_graph(path, cx.in, cx.err);
    const BruteForce brute = brute_force_colourings(g, 1);
    const ColouringCount count = count_colourings(g);
    const bool counts_agree = count.value() && *count.value() == brute.count;
    json doc{{"edges", g.size()}, {"brute_force_count", brute.count}, {"recognizer_count", count.decimal()},
             {"agree", counts_agree}};
    bool agree = counts_agree;
    if (g.order() <= 8) {
        const bool straight = brute_force_straight(g).has_value(), round = brute_force_round(g).has_value();
        const bool straight_ok = straight == find_straight(g).has_value();
        const bool round_ok = round == find_round(g).has_value();
        doc["straight"] = straight;
        doc["round"] = round;
        doc["orderings_agree"] = straight_ok && round_ok;
        agree = agree && straight_ok && round_ok;
    }
    if (g.order() <= 14) {
        const int cc = brute_force_clique_cover(g);
        doc["clique_cover"] = cc;
        if (g.order() <= 40 && cc != clique_cover_number(g)) {
            doc["clique_cover_agree"] = false;
            agree = false;
        }
    }
    if (as_json) {
        cx.out << doc.dump() << '\n';
    } else {
        cx.out << "brute force: " << brute.count << " colourings\n"
               << "recognizer:  " << count.decimal() << " colourings\n";
        if (doc.contains("straight"))
            cx.out << "straight ordering: " << (doc["straight"].get<bool>() ? "yes" : "no")
                   << ", round ordering: " << (doc["round"].get<bool>() ? "yes" : "no") << '\n';
        if (doc.contains("clique_cover")) cx.out << "clique cover number: " << doc["clique_cover"].get<int>() << '\n';
        cx.out << (agree ? "AGREE" : "DISAGREE") << '\n';
    }
    return agree ? kExitOk : kExitDisagreement;
}

int sweep_cmd(Context& cx, const std::string& path, unsigned jobs, bool as_json) {
    const std::vector<GeneratorSpec> corpus = parse_manifest(slurp(path, cx.in));
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size() / 64 + 1)));
    const std::size_t chunk = (corpus.size() + jobs - 1) / std::max<std::size_t>(jobs, 1);
    std::vector<std::future<HarnessReport>> parts;
    for (std::size_t lo = 0; lo < corpus.size(); lo += chunk) {
        const std::size_t hi = std::min(corpus.size(), lo + chunk);
        parts.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, [&, lo, hi] {
            return equivalence_harness({corpus.begin() + static_cast<std::ptrdiff_t>(lo),
                                        corpus.begin() + static_cast<std::ptrdiff_t>(hi)});
        }));
    }
    HarnessReport total;
    for (auto& f : parts) {  // manifest order
        HarnessReport r = f.get();
        total.instances += r.instances;
        total.brute_forced += r.brute_forced;
        std::move(r.failures.begin(), r.failures.end(), std::back_inserter(total.failures));
    }
    if (as_json) {
        cx.out << harness_to_json(total) << '\n';
    } else {
        for (const HarnessFailure& f : total.failures) cx.out << "FAIL " << f.spec << ": " << f.what << '\n';
        cx.out << total.failures.size() << " disagreements / " << total.instances << " graphs ("
               << total.brute_forced << " brute-forced)\n";
    }
    return total.failures.empty() ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally complete 2-edge-colourings: recognition, certificates and structure"};
    app.name("lcc");
    app.require_subcommand(1);
    app.set_version_flag("--version", "lcc 0.1.0");

    std::string input = "-", certificate, method = "aux", manifest;
    bool as_json = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    GeneratorSpec spec;
    spec.seed = default_seed();
    std::string spec_json;

    auto* rec = app.add_subcommand("recognize", "Decide colourability and print a colouring or a certificate");
    rec->add_option("graph", input, "Edge-list file, '-' for stdin")->required();
    rec->add_option("--method", method, "Decision procedure")
        ->check(CLI::IsMember({"aux", "structural", "both"}))
        ->capture_default_str();
    rec->add_flag("--json", as_json, "Single JSON document on stdout");

    auto* cls = app.add_subcommand("classify", "Structural report: orderings, clique cover, type, pseudo-cutvertices");
    cls->add_option("graph", input, "Edge-list file, '-' for stdin")->required();

    auto* cert = app.add_subcommand("certify", "Check a colouring or kaleidoscope against a graph");
    cert->add_option("graph", input, "Edge-list file, '-' for stdin")->required();
    cert->add_option("certificate", certificate, "Colouring (text or JSON) or kaleidoscope JSON")->required();

    auto* gen = app.add_subcommand("generate", "Print a generated graph");
    gen->add_option("--family", spec.family, "gnp, staircase-pig, circular-arc-pca, circular-staircase, clique-cycle, "
                                             "bipartite-complement, paper, type-template, block-cycle, weak-blocks, "
                                             "labelled")
        ->capture_default_str();
    gen->add_option("-n,--n", spec.n, "Vertex count");
    gen->add_option("-p,--p", spec.p, "Edge probability or arc length")->capture_default_str();
    gen->add_option("--seed", spec.seed, "Seed (default LCC_SEED or 1)");
    gen->add_flag("!--no-shuffle", spec.shuffle, "Keep the construction labels");
    gen->add_option("--width", spec.width, "Staircase reach bound")->capture_default_str();
    gen->add_flag("--even", spec.even, "Evenly spaced arcs");
    gen->add_option("--name", spec.name, "Named instance");
    gen->add_option("--drop", spec.drop, "Delete this vertex of the named instance");
    gen->add_option("--type", spec.type, "Type1..Type4");
    gen->add_option("-k,--k", spec.k, "Cliques per template")->capture_default_str();
    gen->add_option("--blocks", spec.blocks, "Blocks around the circle")->capture_default_str();
    gen->add_option("--index", spec.index, "Edge bitmask of a labelled graph");
    gen->add_option("--spec", spec_json, "Generator spec as JSON (overrides the other options)");
    gen->add_flag("--json", as_json, "Spec, graph and witness orderings as JSON");

    auto* orc = app.add_subcommand("oracle", "Compare the library against brute force on a small graph");
    orc->add_option("graph", input, "Edge-list file, '-' for stdin")->required();
    orc->add_flag("--json", as_json, "Single JSON document on stdout");

    auto* swp = app.add_subcommand("sweep", "Run a corpus manifest through the equivalence harness");
    swp->add_option("manifest", manifest, "JSON-lines manifest, '-' for stdin")->required();
    swp->add_option("-j,--jobs", jobs, "Worker threads")->capture_default_str();
    swp->add_flag("--json", as_json, "Single JSON document on stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    Context cx{in, out, err};
    try {
        if (*rec) return recognize_cmd(cx, input, method, as_json);
        if (*cls) return classify_cmd(cx, input);
        if (*cert) return certify_cmd(cx, input, certificate);
        if (*gen) return generate_cmd(cx, spec_json.empty() ? spec : spec_from_json(spec_json), as_json);
        if (*orc) return oracle_cmd(cx, input, as_json);
        if (*swp) return sweep_cmd(cx, manifest, jobs, as_json);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::length_error& e) {
        err << "too large: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitDisagreement;
    }
    return kExitInput;
}

}  // namespace lcc
