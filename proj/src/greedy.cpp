#include "semipair/greedy.hpp"

#include <cmath>
#include <stdexcept>

namespace semipair {

double harmonic(int b) {
    long double h = 0;  // extended accumulation keeps the rounded double exact
    for (int i = b; i >= 1; --i) h += 1.0L / i;
    return static_cast<double>(h);
}

GreedyTrace approx_semi_paired(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("greedy: graph must have at least 2 vertices");
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("greedy: isolated vertex " + std::to_string(v));

    std::vector<std::vector<int>> near(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) near[static_cast<std::size_t>(v)] =
        vertices_within_2(g, v).members();

    GreedyTrace trace;
    VertexSet covered(n);
    std::vector<char> selected(static_cast<std::size_t>(n) + 1, 0);
    int covered_count = 0;

    while (covered_count < n) {
        int best_gain = -1;
        std::pair<int, int> best{0, 0};
        for (int u = 1; u <= n; ++u) {
            if (selected[static_cast<std::size_t>(u)]) continue;
            for (int v : near[static_cast<std::size_t>(u)]) {
                if (v <= u || selected[static_cast<std::size_t>(v)]) continue;
                int gain = 0;
                if (!covered.contains(u)) ++gain;
                for (int w : g.neighbors(u))
                    if (!covered.contains(w)) ++gain;
                if (!covered.contains(v) && !g.adjacent(u, v)) ++gain;
                for (int w : g.neighbors(v))
                    if (!covered.contains(w) && w != u && !g.adjacent(u, w)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = {u, v};
                }
            }
        }
        if (best_gain < 0)
            throw std::logic_error("greedy: no eligible pair although vertices remain uncovered");

        GreedyRound round;
        round.chosen = best;
        round.newly_covered = VertexSet(n);
        for (int x : {best.first, best.second}) {
            if (!covered.contains(x)) round.newly_covered.insert(x);
            for (int w : g.neighbors(x))
                if (!covered.contains(w)) round.newly_covered.insert(w);
        }
        round.gain = round.newly_covered.size();
        covered |= round.newly_covered;
        covered_count += round.gain;
        selected[static_cast<std::size_t>(best.first)] = 1;
        selected[static_cast<std::size_t>(best.second)] = 1;
        trace.solution.add_pair(best.first, best.second);
        trace.rounds.push_back(std::move(round));
    }
    return trace;
}

RatioCertificate ratio_certificate(const Graph& g, const GreedyTrace& trace,
                                   const OracleResult* optimum) {
    RatioCertificate cert;
    cert.delta = g.max_degree();
    if (cert.delta < 1)
        throw std::invalid_argument("ratio certificate: graph has no edges");
    int b = 2 * cert.delta + 2;
    cert.harmonic_bound = harmonic(b);
    cert.log_bound = 1.0 + std::log(static_cast<double>(b));
    if (optimum != nullptr && optimum->cardinality > 0)
        cert.achieved = static_cast<double>(trace.solution.cardinality()) /
                        static_cast<double>(optimum->cardinality);
    return cert;
}

}  // namespace semipair
