#pragma once

#include <vector>

#include "semipair/graph.hpp"
#include "semipair/solution.hpp"

namespace semipair {

/// Processing order for the tree sweep: alpha is the reverse of a BFS
/// ordering started at a pendant vertex, so every vertex precedes its parent
/// and the start pendant sits last. Deterministic: the lowest-id degree-1
/// vertex starts the BFS, which explores neighbors in increasing id.
struct RootedTreeOrder {
    std::vector<int> alpha;     // alpha[i-1] = vertex at position i
    std::vector<int> position;  // 1-based, position[0] unused
    std::vector<int> parent;    // parent[v] by vertex id; parent[root] = root
};

/// Throws std::invalid_argument when t is not a tree with n >= 2.
RootedTreeOrder bfs_order_from_pendant(const Graph& t);

/// How often each sweep rule fired; the unreachable-rule counter must stay 0.
struct TreeSweepStats {
    int select_parent_fresh = 0;      // undominated, no pending partner nearby
    int select_parent_discharge = 0;  // undominated, discharges a pending partner
    int base_pair = 0;                // the two last positions, both selected
    int nothing = 0;                  // dominated, nothing pending
    int discharge_via_parent = 0;     // pending partner resolved by the parent
    int discharge_via_self = 0;       // pending partner resolved by the vertex itself
    int discharge_via_child = 0;      // holder already paired; an unselected child steps in
    int discharge_rescue = 0;         // neighborhood exhausted; distance-2 fallback used
    int unreachable = 0;              // stated-impossible configuration
};

/// Minimum semipaired dominating set of a tree via a single reverse-BFS
/// sweep. Throws std::logic_error if a configuration the rules declare
/// impossible is ever reached (also counted in stats).
SemipairedSolution semi_paired_dom_tree(const Graph& t, TreeSweepStats* stats = nullptr);

}  // namespace semipair
