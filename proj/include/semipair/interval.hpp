#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semipair/graph.hpp"
#include "semipair/solution.hpp"

namespace semipair {

struct Interval {
    double left = 0;
    double right = 0;
};

/// An interval model: n closed intervals with pairwise distinct endpoint
/// values and left < right in each interval.
struct IntervalModel {
    std::vector<Interval> intervals;

    /// Validates the endpoint invariants; throws std::invalid_argument on a
    /// degenerate interval or a duplicated endpoint value.
    static IntervalModel from(std::vector<Interval> intervals);

    int size() const noexcept { return static_cast<int>(intervals.size()); }
};

/// Permutation sorting vertices by left endpoint. order[i-1] is the interval
/// (1-based input index) at position i; position[v] inverts it.
struct LeftEndOrdering {
    std::vector<int> order;
    std::vector<int> position;  // 1-based, position[0] unused

    static LeftEndOrdering identity(int n);
};

LeftEndOrdering left_end_order(const IntervalModel& model);

/// Intersection graph of the model with vertices relabeled along the left-end
/// ordering: vertex p of the result is the p-th interval by left endpoint.
Graph interval_graph_from_model(const IntervalModel& model);

/// Per-position index functions over a graph in left-end order.
/// least_neighbor[i] is the smallest position adjacent to position i (the
/// position itself for i = 1); last_nonneighbor[i] is the largest position
/// below i not adjacent to i, or 0 when every earlier position is adjacent.
struct IntervalIndices {
    std::vector<int> least_neighbor;    // 1-based
    std::vector<int> last_nonneighbor;  // 1-based, 0 = sentinel
};

IntervalIndices compute_indices(const Graph& g, const LeftEndOrdering& ord);

/// Which rule fired in one sweep iteration (positions, not vertex ids).
enum class IntervalBranch {
    lowest_adjacent,        // least neighbor of i is position 1
    lowest_at_two,          // least neighbor of j is position 1
    gap_covered_done,       // pair {j,r}, no earlier non-neighbor of r
    gap_covered_base,       // pair {j,r} plus {1,2}
    gap_covered_recurse,    // pair {j,r}, continue on prefix
    gap_uncovered_done,     // pair {j,b} via t, no earlier non-neighbor of b
    gap_uncovered_base,     // pair {j,b} plus {1,2}
    gap_uncovered_recurse,  // pair {j,b}, continue on prefix
};

std::string to_string(IntervalBranch b);

/// One iteration of the right-to-left sweep, in position space.
/// Unused fields are 0.
struct IntervalStep {
    int i = 0;
    IntervalBranch branch{};
    int j = 0, k = 0, r = 0, t = 0, b = 0, s = 0;
    std::vector<std::pair<int, int>> added;  // pairs of positions
    int remaining_after = 0;                 // prefix length still unsolved
};

struct IntervalRunResult {
    SemipairedSolution solution;  // in the graph's vertex ids
    std::vector<IntervalStep> steps;
    std::uint64_t work = 0;  // sweep bookkeeping operations, for scaling checks
};

/// Minimum semipaired dominating set of a connected interval graph, given a
/// trusted left-end ordering of its vertices. Each iteration's two added
/// vertices are semipaired with each other; the four-vertex branches pair
/// positions {1,2} together and {j,r} (resp. {j,b}) together.
SemipairedSolution semi_paired_dom_interval(const Graph& g, const LeftEndOrdering& ord);

/// Same, with the per-iteration branch trace.
IntervalRunResult semi_paired_dom_interval_traced(const Graph& g, const LeftEndOrdering& ord);

/// Convenience entry point: orders the model, builds its graph and solves.
/// The solution is reported in the model's original interval numbering.
SemipairedSolution solve_interval_model(const IntervalModel& model);

}  // namespace semipair
