#pragma once

#include "semipair/graph.hpp"

namespace semipair::testing {

/// Independent pairability oracle: subset-mask dynamic programming over all
/// perfect matchings of the distance-<=2 auxiliary graph on s. A different
/// route than the solver's backtracking search.
bool pairable_by_dp(const Graph& g, const VertexSet& s);

/// Independent minimum semipaired domination cardinality: scans every even
/// subset mask of the vertex set (n <= 20) and keeps the smallest dominating
/// pairable one, using pairable_by_dp for the pairing side.
int min_semi_pd_by_mask_scan(const Graph& g);

}  // namespace semipair::testing
