#pragma once

#include <string>
#include <vector>

#include "semipair/graph.hpp"
#include "semipair/solution.hpp"

namespace semipair {

/// A constructed gadget graph, the symbolic name of each gadget vertex, the
/// source instance it was built from, and the cardinality identity the
/// construction carries.
struct ReductionOutput {
    std::string kind;  // "gp4" | "vc-bipartite" | "dom-split" | "dom-hardness"
    Graph gadget;
    std::vector<std::string> labels;  // 1-based, labels[0] empty
    Graph source;
    int source_n = 0;
    int source_m = 0;
    std::string identity;
};

/// Hangs a fresh 3-edge path off every vertex of h. The gadget has 5*n_H
/// vertices and m_H + 4*n_H edges; its minimum semipaired dominating set has
/// exactly 2/5 of the vertices.
ReductionOutput gp4_from(const Graph& h);

/// Vertex cover to semipaired domination, bipartite target: 6n + 2m vertices,
/// 5n + 4m edges, carrying gamma_pr2(H) = 2n + 2*tau(G).
ReductionOutput vc_to_semipd_bipartite(const Graph& g);

/// Forward witness mapping for the bipartite gadget: a vertex cover of the
/// source yields a verified solution of cardinality 2n + 2|cover| on the
/// gadget. Throws std::invalid_argument when cover misses an edge.
SemipairedSolution semipd_from_vc(const ReductionOutput& red, const VertexSet& cover);

/// Domination to semipaired domination, split target: 4n vertices, a clique
/// of size 2n plus an independent set, carrying gamma_pr2(G') = 2*gamma(G).
ReductionOutput dom_to_semipd_split(const Graph& g);

/// Domination to semipaired domination, approximation-hardness target: 5n
/// vertices with two large cliques, carrying gamma_pr2(H) = 2*gamma(G).
ReductionOutput dom_to_semipd_hardness(const Graph& g);

/// Recovers a dominating set of the source graph from any verified solution
/// on the hardness gadget: picks the lighter copy side, swaps each attachment
/// vertex whose neighborhood the solution misses for its core twin, then
/// projects. The result dominates the source and has at most half the
/// solution's size (both checked).
VertexSet extract_dominating_set(const ReductionOutput& red, const SemipairedSolution& dsp);

/// Rebuilds a hardness ReductionOutput from a gadget graph and its label
/// sidecar (the source adjacency is recoverable from the attachment edges).
ReductionOutput hardness_from_gadget(const Graph& gadget,
                                     const std::vector<std::string>& labels);

}  // namespace semipair
