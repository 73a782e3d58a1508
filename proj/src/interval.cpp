#include "semipair/interval.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace semipair {

IntervalModel IntervalModel::from(std::vector<Interval> intervals) {
    std::map<double, int> endpoint_owner;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const auto& iv = intervals[i];
        if (!(iv.left < iv.right))
            throw std::invalid_argument("interval " + std::to_string(i + 1) +
                                        ": left endpoint must be smaller than right");
        for (double e : {iv.left, iv.right}) {
            auto [it, inserted] = endpoint_owner.emplace(e, static_cast<int>(i + 1));
            if (!inserted)
                throw std::invalid_argument("duplicate endpoint value between intervals " +
                                            std::to_string(it->second) + " and " +
                                            std::to_string(i + 1));
        }
    }
    IntervalModel m;
    m.intervals = std::move(intervals);
    return m;
}

LeftEndOrdering LeftEndOrdering::identity(int n) {
    LeftEndOrdering ord;
    ord.order.resize(static_cast<std::size_t>(n));
    std::iota(ord.order.begin(), ord.order.end(), 1);
    ord.position.resize(static_cast<std::size_t>(n) + 1);
    std::iota(ord.position.begin(), ord.position.end(), 0);
    return ord;
}

LeftEndOrdering left_end_order(const IntervalModel& model) {
    int n = model.size();
    LeftEndOrdering ord;
    ord.order.resize(static_cast<std::size_t>(n));
    std::iota(ord.order.begin(), ord.order.end(), 1);
    std::sort(ord.order.begin(), ord.order.end(), [&](int a, int b) {
        return model.intervals[static_cast<std::size_t>(a - 1)].left <
               model.intervals[static_cast<std::size_t>(b - 1)].left;
    });
    ord.position.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int p = 1; p <= n; ++p)
        ord.position[static_cast<std::size_t>(ord.order[static_cast<std::size_t>(p - 1)])] = p;
    return ord;
}

Graph interval_graph_from_model(const IntervalModel& model) {
    int n = model.size();
    LeftEndOrdering ord = left_end_order(model);
    std::vector<std::pair<int, int>> edges;

    // plane sweep over left endpoints; the active set holds open intervals
    // keyed by right endpoint, and every active interval visited emits an edge
    std::set<std::pair<double, int>> active;  // (right endpoint, position)
    for (int p = 1; p <= n; ++p) {
        const auto& iv =
            model.intervals[static_cast<std::size_t>(ord.order[static_cast<std::size_t>(p - 1)] - 1)];
        while (!active.empty() && active.begin()->first < iv.left)
            active.erase(active.begin());
        for (const auto& [right, q] : active) edges.emplace_back(q, p);
        active.emplace(iv.right, p);
    }
    return Graph::build(n, edges);
}

IntervalIndices compute_indices(const Graph& g, const LeftEndOrdering& ord) {
    int n = g.vertex_count();
    IntervalIndices idx;
    idx.least_neighbor.assign(static_cast<std::size_t>(n) + 1, 0);
    idx.last_nonneighbor.assign(static_cast<std::size_t>(n) + 1, 0);

    std::vector<int> stamp(static_cast<std::size_t>(n) + 1, 0);
    int generation = 0;
    for (int i = 1; i <= n; ++i) {
        int v = ord.order[static_cast<std::size_t>(i - 1)];
        int least = (i == 1) ? 1 : n + 1;
        ++generation;
        for (int w : g.neighbors(v)) {
            int p = ord.position[static_cast<std::size_t>(w)];
            least = std::min(least, p);
            if (p < i) stamp[static_cast<std::size_t>(p)] = generation;
        }
        if (i > 1 && least == n + 1)
            throw std::invalid_argument("compute_indices: isolated vertex at position " +
                                        std::to_string(i));
        idx.least_neighbor[static_cast<std::size_t>(i)] = least;

        // at most deg(v)+1 positions are scanned before an unmarked one appears
        int last = 0;
        for (int p = i - 1; p >= 1; --p)
            if (stamp[static_cast<std::size_t>(p)] != generation) {
                last = p;
                break;
            }
        idx.last_nonneighbor[static_cast<std::size_t>(i)] = last;
    }
    return idx;
}

std::string to_string(IntervalBranch b) {
    switch (b) {
        case IntervalBranch::lowest_adjacent: return "lowest-adjacent";
        case IntervalBranch::lowest_at_two: return "lowest-at-two";
        case IntervalBranch::gap_covered_done: return "gap-covered-done";
        case IntervalBranch::gap_covered_base: return "gap-covered-base";
        case IntervalBranch::gap_covered_recurse: return "gap-covered-recurse";
        case IntervalBranch::gap_uncovered_done: return "gap-uncovered-done";
        case IntervalBranch::gap_uncovered_base: return "gap-uncovered-base";
        case IntervalBranch::gap_uncovered_recurse: return "gap-uncovered-recurse";
    }
    return "?";
}

IntervalRunResult semi_paired_dom_interval_traced(const Graph& g, const LeftEndOrdering& ord) {
    int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument("interval solver: graph must have at least 2 vertices");
    if (!is_connected(g))
        throw std::invalid_argument("interval solver: graph must be connected");
    if (static_cast<int>(ord.order.size()) != n)
        throw std::invalid_argument("interval solver: ordering size mismatch");

    // adjacency translated to position space once
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        int p = ord.position[static_cast<std::size_t>(v)];
        for (int w : g.neighbors(v))
            nbr[static_cast<std::size_t>(p)].push_back(ord.position[static_cast<std::size_t>(w)]);
    }

    IntervalIndices idx = compute_indices(g, ord);
    const auto& F = idx.least_neighbor;
    const auto& L = idx.last_nonneighbor;

    std::uint64_t work = 0;
    std::vector<int> stamp(static_cast<std::size_t>(n) + 1, 0);
    int generation = 0;
    auto mark = [&](int p) {
        for (int q : nbr[static_cast<std::size_t>(p)]) {
            stamp[static_cast<std::size_t>(q)] = generation;
            ++work;
        }
    };

    IntervalRunResult run;
    std::vector<std::pair<int, int>> position_pairs;

    int remaining = n;  // the unsolved prefix is always {1..remaining}
    while (remaining > 0) {
        IntervalStep step;
        int i = remaining;
        step.i = i;
        ++work;

        auto emit = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            position_pairs.emplace_back(a, b);
            step.added.emplace_back(a, b);
        };

        if (F[static_cast<std::size_t>(i)] == 1) {
            step.branch = IntervalBranch::lowest_adjacent;
            emit(1, i);
            remaining = 0;
        } else {
            int j = F[static_cast<std::size_t>(i)];
            step.j = j;
            if (F[static_cast<std::size_t>(j)] == 1) {
                step.branch = IntervalBranch::lowest_at_two;
                emit(1, j);
                remaining = 0;
            } else {
                int k = F[static_cast<std::size_t>(j)];
                int r = F[static_cast<std::size_t>(k)];
                step.k = k;
                step.r = r;

                ++generation;
                mark(j);
                mark(r);
                bool gap_covered = true;
                for (int l = k + 1; l < j; ++l) {
                    ++work;
                    if (stamp[static_cast<std::size_t>(l)] != generation) {
                        gap_covered = false;
                        break;
                    }
                }

                int low;  // the lower vertex of the pair added with j
                if (gap_covered) {
                    low = r;
                } else {
                    ++generation;
                    mark(j);
                    int t = 0;
                    for (int l = j - 1; l > k; --l) {
                        ++work;
                        if (stamp[static_cast<std::size_t>(l)] != generation) {
                            t = l;
                            break;
                        }
                    }
                    step.t = t;
                    low = F[static_cast<std::size_t>(t)];
                    step.b = low;
                }

                int s = L[static_cast<std::size_t>(low)];
                step.s = s;
                if (s == 0) {
                    step.branch = gap_covered ? IntervalBranch::gap_covered_done
                                              : IntervalBranch::gap_uncovered_done;
                    emit(j, low);
                    remaining = 0;
                } else if (s == 1) {
                    step.branch = gap_covered ? IntervalBranch::gap_covered_base
                                              : IntervalBranch::gap_uncovered_base;
                    emit(1, 2);
                    emit(j, low);
                    remaining = 0;
                } else {
                    step.branch = gap_covered ? IntervalBranch::gap_covered_recurse
                                              : IntervalBranch::gap_uncovered_recurse;
                    emit(j, low);
                    remaining = s;
                }
            }
        }

        step.remaining_after = remaining;
        run.steps.push_back(std::move(step));
    }

    for (const auto& [p, q] : position_pairs)
        run.solution.add_pair(ord.order[static_cast<std::size_t>(p - 1)],
                              ord.order[static_cast<std::size_t>(q - 1)]);
    run.work = work;
    return run;
}

SemipairedSolution semi_paired_dom_interval(const Graph& g, const LeftEndOrdering& ord) {
    return semi_paired_dom_interval_traced(g, ord).solution;
}

SemipairedSolution solve_interval_model(const IntervalModel& model) {
    LeftEndOrdering ord = left_end_order(model);
    Graph g = interval_graph_from_model(model);
    // g is labeled by position; map the result back to input interval numbers
    SemipairedSolution by_position =
        semi_paired_dom_interval(g, LeftEndOrdering::identity(model.size()));
    SemipairedSolution out;
    for (const auto& [p, q] : by_position.pairs)
        out.add_pair(ord.order[static_cast<std::size_t>(p - 1)],
                     ord.order[static_cast<std::size_t>(q - 1)]);
    return out;
}

}  // namespace semipair
