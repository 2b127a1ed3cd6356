// Copyright (c) the chroma authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chroma/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "chroma/ad_split.hpp"
#include "chroma/color.hpp"
#include "chroma/degree_split.hpp"
#include "chroma/generate.hpp"
#include "chroma/io.hpp"
#include "chroma/orient.hpp"
#include "chroma/verify.hpp"

namespace chroma {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in);
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CHROMA_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 1;
}

// Matches a parsed orientation file against a host graph; arcs must cover
// exactly the host's edge set.
Orientation bind_orientation(const Graph& g, const ParsedOrientation& po) {
    if (po.graph.num_edges() != g.num_edges())
        throw std::runtime_error("orientation edge count differs from graph");
    std::unordered_map<std::uint64_t, EdgeId> lookup;
    lookup.reserve(static_cast<size_t>(g.num_edges()) * 2);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        Edge ed = g.edge(e);
        lookup[(static_cast<std::uint64_t>(ed.u) << 32) | static_cast<std::uint32_t>(ed.v)] = e;
    }
    std::vector<std::uint8_t> forward(static_cast<size_t>(g.num_edges()), 0);
    std::vector<char> seen(static_cast<size_t>(g.num_edges()), 0);
    for (EdgeId fe = 0; fe < po.graph.num_edges(); ++fe) {
        Edge ed = po.graph.edge(fe);
        auto it = lookup.find((static_cast<std::uint64_t>(ed.u) << 32) |
                              static_cast<std::uint32_t>(ed.v));
        if (it == lookup.end())
            throw std::runtime_error("orientation contains an edge absent from the graph");
        if (seen[static_cast<size_t>(it->second)])
            throw std::runtime_error("orientation repeats an edge");
        seen[static_cast<size_t>(it->second)] = 1;
        forward[static_cast<size_t>(it->second)] = po.forward[static_cast<size_t>(fe)];
    }
    return Orientation(g, std::move(forward));
}

void write_trace_file(const RecursionTrace& trace, std::ostream& out) {
    for (const TraceNode& node : trace.nodes) {
        out << "node " << node.level << " " << node.num_edges() << " " << node.max_degree;
        if (trace.mode == Mode::arboricity)
            out << " " << node.max_indeg << " " << node.max_outdeg;
        out << "\n";
    }
}

struct BenchRow {
    std::string text;
    bool ok = true;
};

struct BenchOptions {
    std::string suite = "delta";
    std::vector<long long> sizes;
    std::vector<std::string> epsilons;
    std::uint64_t seed = 1;
    int repeats = 3;
    int jobs = 1;
};

BenchRow bench_row(const BenchOptions& opt, long long size, const std::string& eps_text,
                   std::uint64_t seed) {
    Rational eps = Rational::parse(eps_text);
    GenSpec spec;
    int cert_k = 0;
    if (opt.suite == "delta") {
        spec.family = Family::gnm;
        spec.n = static_cast<int>(std::max<long long>(16, size / 10));
        spec.param = size;
        spec.seed = seed;
    } else {
        spec.family = Family::forest_union;
        spec.n = static_cast<int>(size);
        spec.param = 8;
        spec.seed = seed;
        cert_k = 8;
    }
    Generated gen = generate(spec);
    const Graph& g = gen.graph;

    int delta = max_degree(g);
    int alpha_hat = g.num_edges() > 0 ? arboricity_estimate(g) : 0;

    std::vector<double> times;
    EpsilonRun run;
    Mode mode = opt.suite == "delta" ? Mode::delta : Mode::arboricity;
    for (int r = 0; r < opt.repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        run = color_with_epsilon(g, eps, mode);
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    double median = times.size() % 2 == 1
                        ? times[times.size() / 2]
                        : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);

    long long bound = mode == Mode::delta
                          ? delta + eps.ceil_mul(delta)
                          : delta + eps.ceil_mul(cert_k);

    BenchRow row;
    bool proper = !check_proper(g, run.coloring).has_value();
    bool within = !check_palette(run.coloring, static_cast<int>(bound)).has_value();
    row.ok = proper && within;

    std::ostringstream os;
    os << g.num_vertices() << "\t" << g.num_edges() << "\t" << delta << "\t" << alpha_hat
       << "\t" << eps_text << "\t" << run.params.h << "\t" << run.coloring.palette << "\t"
       << bound << "\t";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", median);
    os << buf;
    if (!row.ok) os << "\tFAIL";
    row.text = os.str();
    return row;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chroma: edge-coloring toolkit built on degree splittings"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph family instance");
    std::string gen_family = "gnm";
    int gen_n = 0;
    long long gen_param = 0;
    std::uint64_t gen_seed = default_seed();
    std::string gen_output;
    gen_cmd->add_option("--family", gen_family, "gnm | forest-union | cycle | complete | star");
    gen_cmd->add_option("--n", gen_n, "vertex count")->required();
    gen_cmd->add_option("--param", gen_param, "m for gnm, k for forest-union");
    gen_cmd->add_option("--seed", gen_seed, "RNG seed (default: CHROMA_SEED or 1)");
    gen_cmd->add_option("--output", gen_output, "edge list path (default: stdout)");

    // --- split ---
    auto* split_cmd = app.add_subcommand("split", "undirected degree splitting");
    std::string split_input, split_out1, split_out2;
    split_cmd->add_option("--input", split_input)->required();
    split_cmd->add_option("--out1", split_out1, "side-1 edge list (default: <input>.side1)");
    split_cmd->add_option("--out2", split_out2, "side-2 edge list (default: <input>.side2)");

    // --- orient ---
    auto* orient_cmd = app.add_subcommand("orient", "forests-decomposition orientation");
    std::string orient_input, orient_output;
    orient_cmd->add_option("--input", orient_input)->required();
    orient_cmd->add_option("--output", orient_output, "orientation path (default: <input>.or)");

    // --- adsplit ---
    auto* adsplit_cmd = app.add_subcommand("adsplit", "oriented degree splitting");
    std::string ad_input, ad_orientation, ad_out1, ad_out2;
    adsplit_cmd->add_option("--input", ad_input)->required();
    adsplit_cmd->add_option("--orientation", ad_orientation,
                            "orientation file (default: computed by orient)");
    adsplit_cmd->add_option("--out1", ad_out1, "side-1 orientation (default: <input>.side1.or)");
    adsplit_cmd->add_option("--out2", ad_out2, "side-2 orientation (default: <input>.side2.or)");

    // --- color ---
    auto* color_cmd = app.add_subcommand("color", "recursive edge coloring");
    color_cmd->set_help_flag("--help", "print help");  // frees -h / --h
    std::string color_input, color_mode = "delta", color_output, color_trace;
    std::string color_eps;
    int color_h = -1;
    bool color_verify = false;
    color_cmd->add_option("--input", color_input)->required();
    color_cmd->add_option("--epsilon", color_eps, "epsilon as decimal or p/q");
    color_cmd->add_option("--h", color_h, "explicit recursion depth");
    color_cmd->add_option("--mode", color_mode, "delta | arboricity");
    color_cmd->add_option("--output", color_output, "coloring path (default: stdout)");
    color_cmd->add_option("--trace", color_trace, "write recursion trace");
    color_cmd->add_flag("--verify", color_verify, "self-check before exiting");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "check artifact files");
    std::string v_graph, v_coloring, v_orientation;
    int v_palette_bound = -1, v_outdeg_bound = -1;
    verify_cmd->add_option("--graph", v_graph)->required();
    verify_cmd->add_option("--coloring", v_coloring);
    verify_cmd->add_option("--orientation", v_orientation);
    verify_cmd->add_option("--palette-bound", v_palette_bound);
    verify_cmd->add_option("--outdeg-bound", v_outdeg_bound);

    // --- bench ---
    auto* bench_cmd = app.add_subcommand("bench", "timed palette-guarantee runs (TSV)");
    BenchOptions bench;
    bench.seed = default_seed();
    bench_cmd->add_option("--suite", bench.suite, "delta | arboricity");
    bench_cmd->add_option("--sizes", bench.sizes, "m values (delta) or n values (arboricity)")
        ->delimiter(',')
        ->required();
    bench_cmd->add_option("--epsilons", bench.epsilons, "epsilon list")->delimiter(',')->required();
    bench_cmd->add_option("--seed", bench.seed, "base seed (default: CHROMA_SEED or 1)");
    bench_cmd->add_option("--repeats", bench.repeats, "timed repeats per row (median)");
    bench_cmd->add_option("--jobs", bench.jobs, "rows evaluated concurrently");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help() << std::flush;
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen_cmd) {
            GenSpec spec{parse_family(gen_family), gen_n, gen_param, gen_seed};
            Generated g = generate(spec);
            std::ostringstream os;
            write_edge_list(g.graph, os);
            if (gen_output.empty())
                out << os.str();
            else
                save_text(gen_output, os.str());
            return kExitOk;
        }

        if (*split_cmd) {
            Graph g = load_graph(split_input);
            EdgePartition part = degree_split(g);
            std::ostringstream s1, s2;
            write_edge_list(g, part.side1, s1);
            write_edge_list(g, part.side2, s2);
            save_text(split_out1.empty() ? split_input + ".side1" : split_out1, s1.str());
            save_text(split_out2.empty() ? split_input + ".side2" : split_out2, s2.str());
            for (VertexId v = 0; v < g.num_vertices(); ++v) {
                if (g.degree(v) == 0) continue;
                out << "v " << v << " " << part.count_side1[static_cast<size_t>(v)] << " "
                    << part.count_side2[static_cast<size_t>(v)] << "\n";
            }
            return kExitOk;
        }

        if (*orient_cmd) {
            Graph g = load_graph(orient_input);
            PeelResult peel = forests_decomposition_orientation(g);
            std::ostringstream os;
            write_orientation(peel.orientation, os);
            save_text(orient_output.empty() ? orient_input + ".or" : orient_output, os.str());
            int max_out = 0;
            for (VertexId v = 0; v < g.num_vertices(); ++v)
                max_out = std::max(max_out, peel.orientation.outdeg(v));
            int alpha_hat = g.num_edges() > 0 ? peel.arboricity_estimate() : 0;
            out << "degeneracy " << peel.degeneracy << " alpha-hat " << alpha_hat
                << " max-outdeg " << max_out << "\n";
            return kExitOk;
        }

        if (*adsplit_cmd) {
            Graph g = load_graph(ad_input);
            Orientation mu;
            PeelResult peel;
            if (ad_orientation.empty()) {
                peel = forests_decomposition_orientation(g);
                mu = std::move(peel.orientation);
            } else {
                std::ifstream in(ad_orientation);
                if (!in) throw std::runtime_error("cannot open " + ad_orientation);
                mu = bind_orientation(g, parse_orientation(in));
            }
            OrientedPartition part = oriented_degree_split(g, mu);
            std::ostringstream s1, s2;
            write_orientation(mu, part.side1, s1);
            write_orientation(mu, part.side2, s2);
            save_text(ad_out1.empty() ? ad_input + ".side1.or" : ad_out1, s1.str());
            save_text(ad_out2.empty() ? ad_input + ".side2.or" : ad_out2, s2.str());
            for (VertexId v = 0; v < g.num_vertices(); ++v) {
                if (g.degree(v) == 0) continue;
                out << "v " << v << " " << part.in_side1[static_cast<size_t>(v)] << " "
                    << part.in_side2[static_cast<size_t>(v)] << " "
                    << part.out_side1[static_cast<size_t>(v)] << " "
                    << part.out_side2[static_cast<size_t>(v)] << "\n";
            }
            return kExitOk;
        }

        if (*color_cmd) {
            if (color_mode != "delta" && color_mode != "arboricity")
                throw std::invalid_argument("mode must be delta or arboricity");
            if (color_eps.empty() == (color_h < 0))
                throw std::invalid_argument("give exactly one of --epsilon and --h");
            Graph g = load_graph(color_input);
            Mode mode = color_mode == "delta" ? Mode::delta : Mode::arboricity;

            Coloring coloring;
            RecursionTrace trace;
            long long bound = 0;
            int delta = max_degree(g);
            if (!color_eps.empty()) {
                Rational eps = Rational::parse(color_eps);
                EpsilonRun run = color_with_epsilon(g, eps, mode);
                bound = mode == Mode::delta ? delta + eps.ceil_mul(delta)
                                            : delta + eps.ceil_mul(run.params.alpha_hat);
                coloring = std::move(run.coloring);
                trace = std::move(run.trace);
            } else {
                ColorRun run = mode == Mode::delta ? edge_coloring(g, color_h)
                                                   : arboricity_edge_coloring(g, color_h);
                if (run.h != color_h)
                    err << "note: h clamped from " << color_h << " to " << run.h << "\n";
                bound = run.h == 0 ? delta + 1 : delta + 3LL * (1LL << run.h);
                coloring = std::move(run.coloring);
                trace = std::move(run.trace);
            }

            std::ostringstream os;
            write_coloring(g, coloring, os);
            if (color_output.empty())
                out << os.str();
            else
                save_text(color_output, os.str());
            if (!color_trace.empty()) {
                std::ostringstream ts;
                write_trace_file(trace, ts);
                save_text(color_trace, ts.str());
            }
            if (color_verify) {
                bool failed = false;
                if (auto bad = check_proper(g, coloring)) {
                    out << "FAIL proper edges " << bad->first << " and " << bad->second
                        << " share a color\n";
                    failed = true;
                }
                if (auto bad = check_palette(coloring, static_cast<int>(bound))) {
                    out << "FAIL palette max color " << bad->max_used << " exceeds " << bad->bound
                        << "\n";
                    failed = true;
                }
                if (failed) return kExitVerification;
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            Graph g = load_graph(v_graph);
            bool failed = false;
            if (!v_coloring.empty()) {
                std::ifstream in(v_coloring);
                if (!in) throw std::runtime_error("cannot open " + v_coloring);
                Coloring c = parse_coloring(in, g);
                if (auto bad = check_proper(g, c)) {
                    out << "FAIL proper edges " << bad->first << " and " << bad->second
                        << " share a color\n";
                    failed = true;
                }
                int bound = v_palette_bound >= 0 ? v_palette_bound : c.palette;
                if (auto bad = check_palette(c, bound)) {
                    out << "FAIL palette max color " << bad->max_used << " exceeds " << bad->bound
                        << "\n";
                    failed = true;
                }
            }
            if (!v_orientation.empty()) {
                std::ifstream in(v_orientation);
                if (!in) throw std::runtime_error("cannot open " + v_orientation);
                Orientation mu = bind_orientation(g, parse_orientation(in));
                int bound = v_outdeg_bound >= 0 ? v_outdeg_bound : g.num_vertices();
                if (auto bad = check_orientation(g, mu, bound)) {
                    out << "FAIL orientation " << bad->what << "\n";
                    failed = true;
                }
            }
            if (failed) return kExitVerification;
            out << "OK\n";
            return kExitOk;
        }

        if (*bench_cmd) {
            if (bench.suite != "delta" && bench.suite != "arboricity")
                throw std::invalid_argument("suite must be delta or arboricity");
            if (bench.sizes.empty()) throw std::invalid_argument("empty size list");
            if (bench.epsilons.empty()) throw std::invalid_argument("empty epsilon list");
            if (bench.repeats < 1) throw std::invalid_argument("repeats must be >= 1");

            out << "# columns: n\tm\tdelta\talpha_hat\tepsilon\th\tpalette\tbound\twall_ms\n";
            struct Job {
                long long size;
                std::string eps;
                std::uint64_t seed;
            };
            std::vector<Job> jobs;
            std::uint64_t instance = 0;
            for (long long size : bench.sizes)
                for (const std::string& eps : bench.epsilons)
                    jobs.push_back({size, eps, bench.seed + 7919 * instance++});

            std::vector<BenchRow> rows(jobs.size());
            if (bench.jobs <= 1) {
                for (size_t i = 0; i < jobs.size(); ++i)
                    rows[i] = bench_row(bench, jobs[i].size, jobs[i].eps, jobs[i].seed);
            } else {
                std::vector<std::future<BenchRow>> futures(jobs.size());
                size_t next = 0;
                while (next < jobs.size()) {
                    size_t batch = std::min<size_t>(static_cast<size_t>(bench.jobs),
                                                    jobs.size() - next);
                    for (size_t i = 0; i < batch; ++i) {
                        const Job& j = jobs[next + i];
                        futures[next + i] = std::async(std::launch::async, bench_row, bench,
                                                       j.size, j.eps, j.seed);
                    }
                    for (size_t i = 0; i < batch; ++i)
                        rows[next + i] = futures[next + i].get();
                    next += batch;
                }
            }
            bool failed = false;
            for (const BenchRow& row : rows) {
                out << row.text << "\n";
                failed = failed || !row.ok;
            }
            return failed ? kExitVerification : kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace chroma
