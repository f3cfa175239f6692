#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tk/analysis.hpp"
#include "tk/constructions.hpp"
#include "tk/operators.hpp"
#include "tk/report.hpp"

namespace {

using namespace tk;
using nlohmann::json;

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitOracle = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 42;
    double tol = 1e-9;
    int jobs = 0;
    std::string format = "json";
};

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

std::vector<Graph> parse_text(const std::string& text) {
    if (looks_like_graph6(text)) {
        std::vector<Graph> out;
        for (const auto& line : nonblank_lines(text)) out.push_back(parse_graph6(line));
        return out;
    }
    return {parse_edge_list(text)};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Graph sigma_graph(const std::string& kind, int n) {
    if (kind == "empty") return empty_graph(n);
    if (kind == "complete") return complete_graph(n);
    if (kind == "path") return path_graph(n);
    if (kind == "cycle") return cycle_graph(n);
    throw InputError("unknown Sigma kind '" + kind + "' (empty, complete, path, cycle)");
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError("bad " + what + " '" + s + "'");
}

std::vector<Graph> load_graphs(const std::string& src);

Graph load_one(const std::string& src) {
    auto gs = load_graphs(src);
    if (gs.size() != 1) throw InputError("source '" + src + "' holds " + std::to_string(gs.size()) + " graphs, expected 1");
    return gs.front();
}

ApexResult build_apex(const std::string& gamma_src, const std::string& x, const std::string& kind, int n) {
    Graph gamma = load_one(gamma_src);
    return apex_extension(gamma, gamma.vertex(x), sigma_graph(kind, n));
}

// Sources: "-" (stdin), a file path, a builtin name, or apex:<gamma>:<x>:<kind>:<n>.
std::vector<Graph> load_graphs(const std::string& src) {
    if (src == "-") return parse_text(read_all(std::cin));
    if (std::filesystem::is_regular_file(src)) {
        std::ifstream in(src, std::ios::binary);
        if (!in) throw InputError("cannot open " + src);
        return parse_text(read_all(in));
    }
    if (auto g = builtin_graph(src)) return {*g};
    if (src.starts_with("apex:")) {
        auto parts = split(src.substr(5), ':');
        if (parts.size() != 4) throw InputError("apex source must be apex:<gamma>:<x>:<kind>:<n>");
        return {build_apex(parts[0], parts[1], parts[2], parse_int(parts[3], "Sigma order")).graph};
    }
    throw InputError("no file or builtin graph named '" + src + "'");
}

int default_jobs() {
    if (const char* env = std::getenv("TK_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return std::max(1, omp_get_num_procs());
}

AnalysisOptions analysis_options(const Globals& g, bool decompose, bool block_dims) {
    AnalysisOptions o;
    o.decompose = decompose;
    o.block_dims = block_dims;
    o.decomposition.seed = g.seed;
    o.decomposition.tol = g.tol;
    return o;
}

int run_check(const Globals& glob, const std::string& source, const std::vector<std::string>& vertices, bool decompose,
              bool block_dims) {
    auto graphs = load_graphs(source);
    auto opts = analysis_options(glob, decompose, block_dims);
    bool mismatch = false;
    for (const auto& g : graphs) {
        std::vector<Vertex> bases;
        if (vertices.empty()) {
            for (Vertex v = 0; v < g.order(); ++v) bases.push_back(v);
        } else {
            for (const auto& tok : vertices) {
                try {
                    bases.push_back(g.vertex(tok));
                } catch (const GraphError& e) {
                    throw InputError(e.what());
                }
            }
        }
        if (!is_connected(g)) throw InputError("graph " + to_graph6(g) + " is not connected");
        for (Vertex x : bases) {
            auto rep = analyze(g, x, opts);
            if (rep.agreement == Agreement::Mismatch) mismatch = true;
            if (glob.format == "table")
                std::cout << report_table(rep) << '\n';
            else
                std::cout << report_json(rep).dump() << '\n';
        }
    }
    return mismatch ? kExitMismatch : 0;
}

int run_construct(const std::string& gamma, const std::string& x, const std::string& kind, int n,
                  const std::string& out_format) {
    ApexResult res = build_apex(gamma, x, kind, n);
    if (out_format == "graph6")
        std::cout << to_graph6(res.graph) << '\n';
    else
        std::cout << to_edge_list(res.graph);
    return 0;
}

int run_scan(const Globals& glob, const std::string& corpus, int generate, bool block_dims, bool serial) {
    ScanOptions opts;
    opts.analysis = analysis_options(glob, true, block_dims);
    opts.jobs = glob.jobs;

    std::vector<Graph> graphs;
    std::size_t count = 0;
    GraphSource source;
    if (generate > 0) {
        if (generate > 7) throw InputError("--generate supports n <= 7");
        count = labeled_graph_count(generate);
        source = [generate](std::size_t k) { return labeled_graph(generate, k); };
    } else {
        graphs = load_graphs(corpus);
        count = graphs.size();
        source = [&graphs](std::size_t k) -> std::optional<Graph> {
            if (!is_connected(graphs[k])) return std::nullopt;
            return graphs[k];
        };
    }

    ScanSummary s = serial ? scan_serial(count, source, opts) : scan(count, source, opts);
    for (const auto& r : s.mismatch_reports) std::cout << r << '\n';
    for (const auto& e : s.error_messages) std::cerr << "error: " << e << '\n';
    json summary = summary_json(s);
    summary["seed"] = glob.seed;
    summary["tol"] = glob.tol;
    if (glob.format == "table") {
        for (const auto& [k, v] : summary.items()) std::cout << std::left << std::setw(22) << k << v.dump() << '\n';
    } else {
        std::cout << json{{"summary", summary}}.dump() << '\n';
    }
    if (s.mismatches || s.bound_violations || s.structure_violations) return kExitMismatch;
    return s.errors ? kExitInternal : 0;
}

int run_oracle(const Globals& glob, const std::string& source, const std::string& x, const std::string& shape,
               const std::string& y, const std::string& z) {
    Graph g = load_one(source);
    if (!is_connected(g)) throw InputError("graph is not connected");
    Vertex vx = g.vertex(x), vy = g.vertex(y), vz = g.vertex(z);
    std::vector<Step> steps;
    try {
        steps = parse_shape(shape);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    auto ops = build_operators(g, vx);
    IntMatrix counts;
    std::string route;
    if (auto fam = classify_shape(steps)) {
        counts = walk_table(ops, fam->family, fam->m).counts;
        route = "walk_table " + shape_name(fam->family, fam->m);
    } else {
        counts = walk_matrix(ops, steps);
        route = "operator product";
    }
    Integer algebraic = counts(vz, vy);
    Integer enumerated = enumerate_walks(g, vx, steps, vy, vz);
    const bool agree = algebraic == enumerated;
    if (glob.format == "table") {
        std::cout << algebraic.get_str() << ", " << enumerated.get_str() << '\n';
    } else {
        std::cout << json{{"shape", shape},
                          {"route", route},
                          {"x", g.label(vx)},
                          {"y", g.label(vy)},
                          {"z", g.label(vz)},
                          {"matrix", algebraic.get_str()},
                          {"enumeration", enumerated.get_str()},
                          {"agree", agree}}
                         .dump()
                  << '\n';
    }
    return agree ? 0 : kExitOracle;
}

int run_partition(const Globals& glob, const std::string& source, const std::string& x, const std::string& y) {
    Graph g = load_one(source);
    if (!is_connected(g)) throw InputError("graph is not connected");
    auto p = distance_partition(g, g.vertex(x), g.vertex(y));
    json j = partition_json(p, g);
    if (glob.format == "table") {
        std::cout << "x=" << j["x"].get<std::string>() << " y=" << j["y"].get<std::string>() << '\n';
        for (const auto& c : j["cells"]) {
            std::cout << "D^" << c["i"].get<int>() << "_" << c["j"].get<int>() << ":";
            for (const auto& v : c["vertices"]) std::cout << ' ' << v.get<std::string>();
            std::cout << '\n';
        }
    } else {
        std::cout << j.dump() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local Terwilliger algebra analysis of a graph at a base vertex"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals glob;
    glob.jobs = default_jobs();
    app.add_option("--seed", glob.seed, "random seed for the module decomposition");
    app.add_option("--tol", glob.tol, "numerical rank tolerance")->check(CLI::PositiveNumber);
    app.add_option("--jobs", glob.jobs, "worker threads (default: TK_JOBS or all cores)")->check(CLI::PositiveNumber);
    app.add_option("--format", glob.format, "output format")->check(CLI::IsMember({"json", "table"}));

    std::string source, builtin;
    std::vector<std::string> vertices;
    bool all_vertices = false, decompose = false, block_dims = false;
    auto* check = app.add_subcommand("check", "analyse base vertices of a graph");
    check->add_option("source", source, "file, '-', builtin name, or apex:<gamma>:<x>:<kind>:<n>");
    check->add_option("--builtin", builtin, "builtin graph name");
    auto* vopt = check->add_option("--vertex", vertices, "base vertex label or index");
    check->add_flag("--all-vertices", all_vertices, "analyse every vertex")->excludes(vopt);
    check->add_flag("--decompose", decompose, "decompose the standard module numerically");
    check->add_flag("--block-dims", block_dims, "compute dim E*_i T E*_1");

    std::string gamma, cx, kind, out_format = "edges";
    int sigma_n = 0;
    auto* construct = app.add_subcommand("construct", "apex extension H(Gamma, Sigma)");
    construct->add_option("gamma", gamma)->required();
    construct->add_option("x", cx)->required();
    construct->add_option("kind", kind, "empty, complete, path, cycle")->required();
    construct->add_option("n", sigma_n)->required();
    construct->add_option("--output", out_format, "edges or graph6")->check(CLI::IsMember({"edges", "graph6"}));

    std::string corpus;
    int generate = 0;
    bool no_block_dims = false, serial = false;
    auto* scan_cmd = app.add_subcommand("scan", "cross-validate both verdicts over a corpus");
    scan_cmd->add_option("corpus", corpus, "graph6 file or '-'");
    scan_cmd->add_option("--generate", generate, "all connected labeled graphs on n vertices");
    scan_cmd->add_flag("--no-block-dims", no_block_dims, "skip dimension bounds on PASS instances");
    scan_cmd->add_flag("--serial", serial, "use the single-threaded reference runner");

    std::string ox, shape, oy, oz;
    auto* oracle = app.add_subcommand("oracle", "count walks of a shape two ways");
    oracle->add_option("source", source)->required();
    oracle->add_option("x", ox)->required();
    oracle->add_option("shape", shape, "string over r, f, l")->required();
    oracle->add_option("y", oy)->required();
    oracle->add_option("z", oz)->required();

    std::string px, py;
    auto* partition = app.add_subcommand("partition", "dump the distance partition of an edge");
    partition->add_option("source", source)->required();
    partition->add_option("x", px)->required();
    partition->add_option("y", py)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInput;
    }

    try {
        if (*check) {
            if (!builtin.empty()) {
                if (!source.empty()) throw InputError("give either a source or --builtin");
                source = builtin;
            }
            if (source.empty()) throw InputError("check needs a graph source");
            return run_check(glob, source, vertices, decompose, block_dims);
        }
        if (*construct) return run_construct(gamma, cx, kind, sigma_n, out_format);
        if (*scan_cmd) {
            if ((generate > 0) == !corpus.empty()) throw InputError("scan needs exactly one of a corpus or --generate");
            return run_scan(glob, corpus, generate, !no_block_dims, serial);
        }
        if (*oracle) return run_oracle(glob, source, ox, shape, oy, oz);
        if (*partition) return run_partition(glob, source, px, py);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
