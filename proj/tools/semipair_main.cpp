#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "semipair/bench.hpp"
#include "semipair/exact.hpp"
#include "semipair/greedy.hpp"
#include "semipair/interval.hpp"
#include "semipair/io.hpp"
#include "semipair/reductions.hpp"
#include "semipair/solution.hpp"
#include "semipair/tree.hpp"

namespace {

using nlohmann::json;
using namespace semipair;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitCheckFailed = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

bool looks_like_interval_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string tok;
        std::vector<std::string> toks;
        while (fields >> tok) toks.push_back(tok);
        if (toks.empty() || toks[0][0] == '#') continue;
        return toks.size() == 1;
    }
    throw std::invalid_argument("empty instance file");
}

std::string pairs_line(const SemipairedSolution& sol) {
    std::string out = "pairs:";
    for (const auto& [u, v] : sol.pairs)
        out += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
    return out;
}

json pairs_json(const SemipairedSolution& sol) {
    json arr = json::array();
    for (const auto& [u, v] : sol.pairs) arr.push_back({u, v});
    return arr;
}

struct SolveOptions {
    std::string algo = "auto";
    std::string file;
    std::optional<int> bound;
    bool verify_small = false;
    bool assert_tree = false;
    bool as_json = false;
};

int run_solve(const SolveOptions& opt) {
    std::string text = read_file(opt.file);
    bool interval_input = looks_like_interval_file(text);

    std::string algo = opt.algo;
    if (algo == "auto" && interval_input) algo = "interval";

    std::optional<IntervalModel> model;
    Graph g = [&]() {
        if (interval_input) {
            model = parse_intervals(text);
            return interval_graph_from_model(*model);
        }
        return parse_edgelist(text);
    }();
    if (opt.assert_tree && !is_tree(g))
        throw std::invalid_argument("not-a-tree: --assert-tree given but the input has " +
                                    std::to_string(g.edge_count()) + " edges on " +
                                    std::to_string(g.vertex_count()) + " vertices");
    if (algo == "auto") algo = is_tree(g) ? "tree" : "greedy";
    if (algo == "interval" && !model)
        throw std::invalid_argument(
            "algo interval needs an interval model file, not an edge list");

    json out;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    out["algo"] = algo;
    std::ostringstream report;
    report << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    report << "algo=" << algo << "\n";

    SemipairedSolution sol;
    if (algo == "exact") {
        OracleResult res = exact_semi_pd(g, opt.bound);
        sol = *res.pairing;
        report << "cardinality=" << res.cardinality << "\n" << pairs_line(sol) << "\n";
        out["cardinality"] = res.cardinality;
        out["pairs"] = pairs_json(sol);
        out["explored"] = res.explored;
    } else if (algo == "interval") {
        sol = solve_interval_model(*model);
        report << "cardinality=" << sol.cardinality() << "\n" << pairs_line(sol) << "\n";
        out["cardinality"] = sol.cardinality();
        out["pairs"] = pairs_json(sol);
    } else if (algo == "tree") {
        sol = semi_paired_dom_tree(g);
        report << "cardinality=" << sol.cardinality() << "\n" << pairs_line(sol) << "\n";
        out["cardinality"] = sol.cardinality();
        out["pairs"] = pairs_json(sol);
    } else if (algo == "greedy") {
        GreedyTrace trace = approx_semi_paired(g);
        sol = trace.solution;
        json rounds = json::array();
        int round_no = 0;
        for (const auto& round : trace.rounds) {
            ++round_no;
            report << round_no << " " << round.chosen.first << " " << round.chosen.second
                   << " " << round.gain << "\n";
            rounds.push_back({{"round", round_no},
                              {"u", round.chosen.first},
                              {"v", round.chosen.second},
                              {"gain", round.gain}});
        }
        report << "cardinality=" << sol.cardinality() << "\n" << pairs_line(sol) << "\n";
        RatioCertificate cert = ratio_certificate(g, trace);
        report << "delta=" << cert.delta << "\n";
        report << "harmonic_bound=" << fmt_double(cert.harmonic_bound) << "\n";
        report << "ratio_bound=" << fmt_double(cert.log_bound) << "\n";
        out["rounds"] = rounds;
        out["cardinality"] = sol.cardinality();
        out["pairs"] = pairs_json(sol);
        out["delta"] = cert.delta;
        out["harmonic_bound"] = cert.harmonic_bound;
        out["ratio_bound"] = cert.log_bound;

        if (opt.verify_small && g.vertex_count() <= 18) {
            OracleResult res = exact_semi_pd(g);
            report << "exact_cardinality=" << res.cardinality << "\n";
            out["exact_cardinality"] = res.cardinality;
            if (sol.cardinality() < res.cardinality) {
                std::cout << report.str();
                std::cerr << "error: greedy reported fewer vertices than the exact optimum\n";
                return kExitCheckFailed;
            }
        }
    } else {
        throw std::invalid_argument("unknown algo '" + algo + "'");
    }

    std::cout << (opt.as_json ? out.dump() + "\n" : report.str());
    return kExitOk;
}

int run_verify(const std::string& graph_file, const std::string& sol_file, bool as_json) {
    Graph g = parse_edgelist(read_file(graph_file));
    SemipairedSolution sol = parse_solution(read_file(sol_file));
    Verdict verdict = verify_solution(g, sol);
    if (as_json) {
        json out;
        out["valid"] = verdict.valid;
        out["verdict"] = verdict.describe();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "verdict: " << verdict.describe() << "\n";
    }
    return verdict.valid ? kExitOk : kExitCheckFailed;
}

int run_check_chain(const std::string& graph_file, bool as_json) {
    Graph g = parse_edgelist(read_file(graph_file));
    int dom = exact_domination(g).cardinality;
    int semi = exact_semi_pd(g).cardinality;
    int paired = exact_paired_domination(g).cardinality;
    bool ok = dom <= semi && semi <= paired;
    if (as_json) {
        json out;
        out["gamma"] = dom;
        out["gamma_pr2"] = semi;
        out["gamma_pr"] = paired;
        out["chain_holds"] = ok;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "gamma=" << dom << "\n";
        std::cout << "gamma_pr2=" << semi << "\n";
        std::cout << "gamma_pr=" << paired << "\n";
        std::cout << "chain: " << dom << " <= " << semi << " <= " << paired
                  << (ok ? " ok" : " VIOLATED") << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int run_reduce(const std::string& kind, const std::string& file, std::string out_path,
               bool as_json) {
    Graph g = parse_edgelist(read_file(file));
    ReductionOutput red;
    if (kind == "gp4") red = gp4_from(g);
    else if (kind == "vc-bipartite") red = vc_to_semipd_bipartite(g);
    else if (kind == "dom-split") red = dom_to_semipd_split(g);
    else if (kind == "dom-hardness") red = dom_to_semipd_hardness(g);
    else throw std::invalid_argument("unknown reduction kind '" + kind + "'");

    if (out_path.empty()) out_path = file + ".gadget";
    write_file(out_path, emit_edgelist(red.gadget));
    write_file(out_path + ".labels", emit_labels(red.labels));

    if (as_json) {
        json out;
        out["kind"] = red.kind;
        out["source_n"] = red.source_n;
        out["source_m"] = red.source_m;
        out["gadget_n"] = red.gadget.vertex_count();
        out["gadget_m"] = red.gadget.edge_count();
        out["identity"] = red.identity;
        out["gadget_file"] = out_path;
        out["labels_file"] = out_path + ".labels";
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "kind=" << red.kind << "\n";
        std::cout << "source: n=" << red.source_n << " m=" << red.source_m << "\n";
        std::cout << "gadget: n=" << red.gadget.vertex_count()
                  << " m=" << red.gadget.edge_count() << "\n";
        std::cout << "identity: " << red.identity << "\n";
        std::cout << "gadget-file: " << out_path << "\n";
        std::cout << "labels-file: " << out_path << ".labels\n";
    }
    return kExitOk;
}

int run_extract(const std::string& gadget_file, const std::string& labels_file,
                const std::string& sol_file, bool as_json) {
    Graph gadget = parse_edgelist(read_file(gadget_file));
    std::vector<std::string> labels = parse_labels(read_file(labels_file));
    SemipairedSolution sol = parse_solution(read_file(sol_file));

    ReductionOutput red = hardness_from_gadget(gadget, labels);
    Verdict verdict = verify_solution(red.gadget, sol);
    if (!verdict.valid) {
        std::cout << "verdict: " << verdict.describe() << "\n";
        return kExitCheckFailed;
    }
    VertexSet extracted = extract_dominating_set(red, sol);

    if (as_json) {
        json out;
        out["extracted"] = extracted.members();
        out["size"] = extracted.size();
        out["solution_size"] = sol.cardinality();
        out["dominates_source"] = true;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "extracted:";
        for (int v : extracted.members()) std::cout << " " << v;
        std::cout << "\n";
        std::cout << "size=" << extracted.size() << " solution_size=" << sol.cardinality()
                  << "\n";
        std::cout << "dominates-source: yes\n";
    }
    return kExitOk;
}

int run_gen(const std::string& family, int n, std::uint64_t seed, const std::string& out_path,
            bool as_json) {
    GenSpec spec = GenSpec::parse(family, n, seed);
    auto instance = generate(spec);
    std::string text = std::holds_alternative<Graph>(instance)
                           ? emit_edgelist(std::get<Graph>(instance))
                           : emit_intervals(std::get<IntervalModel>(instance));
    if (!out_path.empty()) write_file(out_path, text);
    if (as_json) {
        json out;
        out["family"] = family;
        out["n"] = n;
        out["seed"] = seed;
        out["kind"] = std::holds_alternative<Graph>(instance) ? "edge-list" : "interval";
        out["instance"] = text;
        std::cout << out.dump() << "\n";
    } else if (out_path.empty()) {
        std::cout << text;
    }
    return kExitOk;
}

int run_bench_cmd(int threads, bool as_json) {
    std::string report = run_bench(threads);
    bool ok = report.find("FAIL") == std::string::npos;
    if (as_json) {
        json out;
        out["report"] = report;
        out["ok"] = ok;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << report;
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semipaired domination solvers, verifiers, reductions and generators"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "compute a semipaired dominating set");
    solve->add_option("--algo", solve_opt.algo, "exact|interval|tree|greedy|auto")
        ->check(CLI::IsMember({"exact", "interval", "tree", "greedy", "auto"}));
    int bound_value = -1;
    solve->add_option("--bound", bound_value, "cardinality bound for the exact search");
    solve->add_flag("--verify-small", solve_opt.verify_small,
                    "cross-check greedy against the exact oracle on small inputs");
    solve->add_flag("--assert-tree", solve_opt.assert_tree,
                    "fail unless the input graph is a tree");
    bool solve_json = false;
    solve->add_flag("--json", solve_json, "emit a JSON report");
    solve->add_option("file", solve_opt.file, "instance file")->required();

    std::string verify_graph, verify_sol;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "check a solution file against a graph");
    verify->add_option("file", verify_graph, "edge-list file")->required();
    verify->add_option("solution", verify_sol, "solution file")->required();
    verify->add_flag("--json", verify_json, "emit a JSON report");

    std::string chain_graph;
    bool chain_json = false;
    auto* chain = app.add_subcommand("check-chain",
                                     "print the three domination numbers and check their order");
    chain->add_option("file", chain_graph, "edge-list file")->required();
    chain->add_flag("--json", chain_json, "emit a JSON report");

    std::string reduce_kind, reduce_file, reduce_out;
    bool reduce_json = false;
    auto* reduce = app.add_subcommand("reduce", "build a reduction gadget from an instance");
    reduce->add_option("kind", reduce_kind, "gp4|vc-bipartite|dom-split|dom-hardness")
        ->required()
        ->check(CLI::IsMember({"gp4", "vc-bipartite", "dom-split", "dom-hardness"}));
    reduce->add_option("file", reduce_file, "edge-list file")->required();
    reduce->add_option("-o,--out", reduce_out, "gadget output path (labels go to <out>.labels)");
    reduce->add_flag("--json", reduce_json, "emit a JSON report");

    std::string ex_gadget, ex_labels, ex_sol;
    bool ex_json = false;
    auto* extract = app.add_subcommand(
        "extract-ds", "recover a dominating set from a hardness-gadget solution");
    extract->add_option("gadget", ex_gadget, "gadget edge-list file")->required();
    extract->add_option("labels", ex_labels, "label sidecar file")->required();
    extract->add_option("solution", ex_sol, "solution file")->required();
    extract->add_flag("--json", ex_json, "emit a JSON report");

    std::string gen_family, gen_out;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    bool gen_json = false;
    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("family", gen_family,
                    "path|cycle|star|gnp:<p>|random-tree|random-interval|gp4:<inner>")
        ->required();
    gen->add_option("n", gen_n, "vertex / interval count")->required();
    gen->add_option("seed", gen_seed, "random seed")->required();
    gen->add_option("-o,--out", gen_out, "output path (default stdout)");
    gen->add_flag("--json", gen_json, "emit a JSON report");

    int bench_threads = 0;
    bool bench_json = false;
    auto* bench = app.add_subcommand("bench", "run the seeded corpus and print a summary");
    bench->add_option("--threads", bench_threads,
                      "worker count (default: SEMIPAIR_THREADS or 1)");
    bench->add_flag("--json", bench_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*solve) {
            if (bound_value >= 0) solve_opt.bound = bound_value;
            solve_opt.as_json = solve_json;
            return run_solve(solve_opt);
        }
        if (*verify) return run_verify(verify_graph, verify_sol, verify_json);
        if (*chain) return run_check_chain(chain_graph, chain_json);
        if (*reduce) return run_reduce(reduce_kind, reduce_file, reduce_out, reduce_json);
        if (*extract) return run_extract(ex_gadget, ex_labels, ex_sol, ex_json);
        if (*gen) return run_gen(gen_family, gen_n, gen_seed, gen_out, gen_json);
        if (*bench) return run_bench_cmd(bench_threads, bench_json);
    } catch (const BoundExceeded& e) {
        std::cout << "bound-exceeded bound=" << e.bound << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
