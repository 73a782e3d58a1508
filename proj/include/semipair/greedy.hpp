#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semipair/exact.hpp"
#include "semipair/graph.hpp"
#include "semipair/solution.hpp"

namespace semipair {

struct GreedyRound {
    std::pair<int, int> chosen;  // u < v
    VertexSet newly_covered;
    int gain = 0;
};

/// Round-by-round record of the greedy run. The newly_covered sets of the
/// rounds partition the vertex set.
struct GreedyTrace {
    std::vector<GreedyRound> rounds;
    SemipairedSolution solution;
};

/// Greedy semipaired dominating set: while vertices remain uncovered, pick
/// the pair {u,v} with u != v, d(u,v) <= 2, neither already selected, that
/// covers the most uncovered vertices; ties break to the lexicographically
/// smallest (min,max) pair. Requires a graph with no isolated vertex.
GreedyTrace approx_semi_paired(const Graph& g);

/// The guaranteed approximation ratio for the greedy run on a graph of
/// maximum degree delta, plus the ratio actually achieved when an exact
/// optimum is supplied.
struct RatioCertificate {
    int delta = 0;
    double harmonic_bound = 0;  // H(2*delta+2)
    double log_bound = 0;       // 1 + ln(2*delta+2)
    std::optional<double> achieved;
};

RatioCertificate ratio_certificate(const Graph& g, const GreedyTrace& trace,
                                   const OracleResult* optimum = nullptr);

/// H(b) = sum_{i=1..b} 1/i, with H(0) = 0.
double harmonic(int b);

}  // namespace semipair
