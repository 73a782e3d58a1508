#include "semipair/solution.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace semipair {

VertexSet SemipairedSolution::vertex_set(int universe) const {
    VertexSet s(universe);
    for (const auto& [u, v] : pairs) {
        s.insert(u);
        s.insert(v);
    }
    return s;
}

void SemipairedSolution::add_pair(int u, int v) {
    pairs.emplace_back(std::min(u, v), std::max(u, v));
}

bool SemipairedSolution::contains(int v) const {
    for (const auto& p : pairs)
        if (p.first == v || p.second == v) return true;
    return false;
}

std::string Verdict::describe() const {
    switch (violation) {
        case Violation::none:
            return "valid";
        case Violation::odd_structure:
            return "odd-structure (" + std::to_string(witness_pair.first) + "," +
                   std::to_string(witness_pair.second) + ")";
        case Violation::vertex_repeated:
            return "vertex-repeated " + std::to_string(witness_vertex);
        case Violation::pair_too_far:
            return "pair-too-far (" + std::to_string(witness_pair.first) + "," +
                   std::to_string(witness_pair.second) + ")";
        case Violation::not_dominating:
            return "not-dominating " + std::to_string(witness_vertex);
    }
    return "unknown";
}

Verdict verify_solution(const Graph& g, const SemipairedSolution& sol) {
    int n = g.vertex_count();
    for (const auto& [u, v] : sol.pairs) {
        g.neighbors(u);  // throws on out-of-range ids
        g.neighbors(v);
    }

    for (const auto& p : sol.pairs) {
        if (p.first == p.second)
            return {false, Violation::odd_structure, 0, p};
    }

    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : sol.pairs) {
        for (int x : {u, v}) {
            if (seen[static_cast<std::size_t>(x)])
                return {false, Violation::vertex_repeated, x, {0, 0}};
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }

    for (const auto& p : sol.pairs) {
        auto d = distance(g, p.first, p.second);
        if (!d || *d > 2) return {false, Violation::pair_too_far, 0, p};
    }

    VertexSet covered(n);
    for (const auto& [u, v] : sol.pairs) {
        covered |= closed_neighborhood(g, u);
        covered |= closed_neighborhood(g, v);
    }
    for (int v = 1; v <= n; ++v)
        if (!covered.contains(v)) return {false, Violation::not_dominating, v, {0, 0}};

    return {true, Violation::none, 0, {0, 0}};
}

std::optional<SemipairedSolution> find_pairing(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.members();
    int k = static_cast<int>(verts.size());
    if (k % 2 != 0) return std::nullopt;
    if (k == 0) return SemipairedSolution{};

    // close[i][j]: verts[i] and verts[j] are at distance <= 2
    std::vector<std::vector<char>> close(static_cast<std::size_t>(k),
                                         std::vector<char>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i) {
        VertexSet near = vertices_within_2(g, verts[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < k; ++j)
            if (near.contains(verts[static_cast<std::size_t>(j)]))
                close[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    close[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
    }

    std::vector<int> partner(static_cast<std::size_t>(k), -1);
    std::vector<std::pair<int, int>> chosen;

    std::function<bool()> match = [&]() -> bool {
        int lowest = -1;
        for (int i = 0; i < k; ++i)
            if (partner[static_cast<std::size_t>(i)] < 0) {
                lowest = i;
                break;
            }
        if (lowest < 0) return true;
        for (int j = lowest + 1; j < k; ++j) {
            if (partner[static_cast<std::size_t>(j)] >= 0) continue;
            if (!close[static_cast<std::size_t>(lowest)][static_cast<std::size_t>(j)]) continue;
            partner[static_cast<std::size_t>(lowest)] = j;
            partner[static_cast<std::size_t>(j)] = lowest;
            chosen.emplace_back(verts[static_cast<std::size_t>(lowest)],
                                verts[static_cast<std::size_t>(j)]);
            if (match()) return true;
            chosen.pop_back();
            partner[static_cast<std::size_t>(lowest)] = -1;
            partner[static_cast<std::size_t>(j)] = -1;
        }
        return false;
    };

    if (!match()) return std::nullopt;
    SemipairedSolution sol;
    for (const auto& [u, v] : chosen) sol.add_pair(u, v);
    return sol;
}

}  // namespace semipair
