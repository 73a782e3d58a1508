#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "semipair/graph.hpp"
#include "semipair/solution.hpp"

namespace semipair {

/// Result of a brute-force search: minimum cardinality, the canonical
/// witness (lexicographically smallest subset of that cardinality, with the
/// canonical lowest-first pairing where one applies), and the number of
/// candidate sets whose predicate was evaluated.
struct OracleResult {
    int cardinality = 0;
    VertexSet witness;
    std::optional<SemipairedSolution> pairing;
    std::uint64_t explored = 0;
};

/// Thrown when an upper_bound-limited search exhausts every cardinality up
/// to the bound without finding a witness.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(int bound)
        : std::runtime_error("bound-exceeded: no solution of cardinality <= " +
                             std::to_string(bound)),
          bound(bound) {}
    int bound;
};

/// Minimum semipaired dominating set by exhaustion: subsets are enumerated
/// in increasing even cardinality 2,4,6,..., lexicographically within each
/// cardinality; the first dominating and pairable subset wins. Requires a
/// connected graph with n >= 2. With upper_bound, throws BoundExceeded once
/// every cardinality <= upper_bound is exhausted (minimality below the bound
/// is still proven).
OracleResult exact_semi_pd(const Graph& g, std::optional<int> upper_bound = {});

/// Minimum dominating set by increasing-cardinality enumeration.
OracleResult exact_domination(const Graph& g);

/// Minimum paired dominating set: the set must dominate and its induced
/// subgraph must admit a perfect matching (adjacent pairs only). Requires a
/// graph without isolated vertices.
OracleResult exact_paired_domination(const Graph& g);

/// Minimum vertex cover by increasing-cardinality enumeration.
OracleResult exact_vertex_cover(const Graph& g);

}  // namespace semipair
