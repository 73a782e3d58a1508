#include "semipair/bench.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <variant>
#include <vector>

#include "semipair/exact.hpp"
#include "semipair/greedy.hpp"
#include "semipair/interval.hpp"
#include "semipair/io.hpp"
#include "semipair/tree.hpp"

namespace semipair {
namespace {

struct BenchEntry {
    const char* family;
    int n;
    std::uint64_t seed;
    const char* algo;  // "interval" | "tree" | "greedy" | "chain"
};

constexpr BenchEntry kManifest[] = {
    {"random-interval", 6, 101, "interval"},
    {"random-interval", 9, 102, "interval"},
    {"random-interval", 11, 103, "interval"},
    {"random-interval", 13, 104, "interval"},
    {"random-interval", 13, 105, "interval"},
    {"random-tree", 8, 201, "tree"},
    {"random-tree", 10, 202, "tree"},
    {"random-tree", 12, 203, "tree"},
    {"random-tree", 14, 204, "tree"},
    {"random-tree", 14, 205, "tree"},
    {"gnp:0.3", 8, 301, "greedy"},
    {"gnp:0.3", 10, 302, "greedy"},
    {"gnp:0.4", 10, 303, "greedy"},
    {"gnp:0.4", 12, 304, "greedy"},
    {"gnp:0.5", 12, 305, "greedy"},
    {"path", 9, 0, "chain"},
    {"cycle", 9, 0, "chain"},
    {"star", 9, 0, "chain"},
    {"gnp:0.4", 9, 306, "chain"},
    {"random-tree", 9, 206, "chain"},
};

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string run_entry(const BenchEntry& entry) {
    std::ostringstream row;
    row << pad(entry.family, 18) << pad(std::to_string(entry.n), 4)
        << pad(std::to_string(entry.seed), 6) << pad(entry.algo, 9);

    GenSpec spec = GenSpec::parse(entry.family, entry.n, entry.seed);
    auto instance = generate(spec);

    if (std::string(entry.algo) == "interval") {
        const auto& model = std::get<IntervalModel>(instance);
        Graph g = interval_graph_from_model(model);  // vertices renumbered by left end
        SemipairedSolution sol =
            semi_paired_dom_interval(g, LeftEndOrdering::identity(model.size()));
        OracleResult opt = exact_semi_pd(g);
        bool ok = sol.cardinality() == opt.cardinality &&
                  verify_solution(g, sol).valid;
        row << pad("card=" + std::to_string(sol.cardinality()), 10)
            << pad("opt=" + std::to_string(opt.cardinality), 9)
            << (ok ? "ok" : "FAIL");
    } else if (std::string(entry.algo) == "tree") {
        const Graph& g = std::get<Graph>(instance);
        SemipairedSolution sol = semi_paired_dom_tree(g);
        OracleResult opt = exact_semi_pd(g);
        bool ok = sol.cardinality() == opt.cardinality && verify_solution(g, sol).valid;
        row << pad("card=" + std::to_string(sol.cardinality()), 10)
            << pad("opt=" + std::to_string(opt.cardinality), 9)
            << (ok ? "ok" : "FAIL");
    } else if (std::string(entry.algo) == "greedy") {
        const Graph& g = std::get<Graph>(instance);
        GreedyTrace trace = approx_semi_paired(g);
        OracleResult opt = exact_semi_pd(g);
        RatioCertificate cert = ratio_certificate(g, trace, &opt);
        bool ok = verify_solution(g, trace.solution).valid &&
                  trace.solution.cardinality() <= cert.log_bound * opt.cardinality;
        row << pad("card=" + std::to_string(trace.solution.cardinality()), 10)
            << pad("opt=" + std::to_string(opt.cardinality), 9)
            << (ok ? "ok" : "FAIL");
    } else {  // chain
        const Graph& g = std::get<Graph>(instance);
        int dom = exact_domination(g).cardinality;
        int semi = exact_semi_pd(g).cardinality;
        int paired = exact_paired_domination(g).cardinality;
        bool ok = dom <= semi && semi <= paired;
        row << pad("chain=" + std::to_string(dom) + "<=" + std::to_string(semi) + "<=" +
                       std::to_string(paired),
                   19)
            << (ok ? "ok" : "FAIL");
    }
    row << '\n';
    return row.str();
}

int thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SEMIPAIR_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 1;
}

}  // namespace

std::string run_bench(int threads) {
    constexpr std::size_t count = sizeof kManifest / sizeof kManifest[0];
    std::vector<std::string> rows(count);

    int workers = thread_count(threads);
    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        while (true) {
            std::size_t idx = cursor.fetch_add(1);
            if (idx >= count) return;
            rows[idx] = run_entry(kManifest[idx]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::string report;
    report += "semipair bench (" + std::to_string(count) + " instances)\n";
    report += pad("family", 18) + pad("n", 4) + pad("seed", 6) + pad("algo", 9) + "result\n";
    std::size_t failures = 0;
    for (const auto& row : rows) {
        report += row;
        if (row.find("FAIL") != std::string::npos) ++failures;
    }
    report += "summary: " + std::to_string(count - failures) + "/" + std::to_string(count) +
              " ok\n";
    return report;
}

}  // namespace semipair
