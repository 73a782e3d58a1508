#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semipair/graph.hpp"

namespace semipair {

/// A dominating set together with its explicit partition into pairs.
/// Each pair is stored with the smaller id first; the order of the pairs
/// is whatever the producing algorithm emitted.
struct SemipairedSolution {
    std::vector<std::pair<int, int>> pairs;

    int cardinality() const noexcept { return 2 * static_cast<int>(pairs.size()); }

    /// Union of all pairs as a set over [1, universe]. Repeated vertices
    /// collapse; verify_solution reports them separately.
    VertexSet vertex_set(int universe) const;

    void add_pair(int u, int v);
    bool contains(int v) const;
};

enum class Violation {
    none,
    odd_structure,    // a "pair" with both slots equal
    vertex_repeated,  // some vertex appears in two pairs
    pair_too_far,     // a pair at distance > 2 (or in different components)
    not_dominating,   // some vertex has no closed neighbor in the set
};

struct Verdict {
    bool valid = false;
    Violation violation = Violation::none;
    int witness_vertex = 0;             // vertex_repeated / not_dominating
    std::pair<int, int> witness_pair{0, 0};  // odd_structure / pair_too_far

    std::string describe() const;
};

/// Checks the four solution invariants in a fixed order (parity, repetition,
/// distance, domination) and reports the first violation with a witness.
/// Ids outside [1, n] throw std::out_of_range.
Verdict verify_solution(const Graph& g, const SemipairedSolution& sol);

/// Decides whether the bare set s admits a partition into pairs at distance
/// <= 2, returning one such pairing or nullopt ("unpairable"). Deterministic:
/// always pairs the lowest unpaired vertex first, trying partners in
/// increasing id, with backtracking. Domination is not checked here.
std::optional<SemipairedSolution> find_pairing(const Graph& g, const VertexSet& s);

}  // namespace semipair
