#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semipair/graph.hpp"
#include "semipair/interval.hpp"
#include "semipair/solution.hpp"

namespace semipair {

/// Edge-list format: header "n m", then m lines "u v" (1-indexed).
/// Lines starting with '#' are ignored. Malformed input throws
/// std::invalid_argument naming the line.
Graph parse_edgelist(std::string_view text);

/// Normalized form: no comments, each edge with the smaller endpoint first,
/// edges sorted lexicographically.
std::string emit_edgelist(const Graph& g);

/// Interval format: header "n", then n lines "a b" (integers or decimals).
IntervalModel parse_intervals(std::string_view text);

/// Normalized form: intervals sorted by left endpoint, shortest decimal
/// representation of each value.
std::string emit_intervals(const IntervalModel& model);

/// Solution format: one line with the pair count k, then k lines "u v".
SemipairedSolution parse_solution(std::string_view text);
std::string emit_solution(const SemipairedSolution& sol);

/// Label sidecar: one line "<id> <name>" per gadget vertex.
std::vector<std::string> parse_labels(std::string_view text);
std::string emit_labels(const std::vector<std::string>& labels);

/// A reproducible instance: the same (family, n, seed) always yields the
/// identical instance. Families: path, cycle, star, gnp:<p>, random-tree,
/// random-interval, gp4:<inner-family>.
struct GenSpec {
    enum class Family { path, cycle, star, gnp, random_tree, random_interval, gp4 };
    Family family{};
    int n = 0;
    std::uint64_t seed = 0;
    double edge_probability = 0;  // gnp only
    std::string inner;            // gp4 only: the inner family token

    /// Parses a family token such as "path", "gnp:0.3" or "gp4:star".
    static GenSpec parse(std::string_view family_token, int n, std::uint64_t seed);
};

std::variant<Graph, IntervalModel> generate(const GenSpec& spec);

/// generate() for a family known to produce a graph; throws otherwise.
Graph generate_graph(const GenSpec& spec);

}  // namespace semipair
