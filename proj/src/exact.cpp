#include "semipair/exact.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace semipair {
namespace {

constexpr int kMaskLimit = 63;

void check_oracle_size(const Graph& g) {
    if (g.vertex_count() > kMaskLimit)
        throw std::invalid_argument("oracle: graph too large (n > " +
                                    std::to_string(kMaskLimit) + ")");
}

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

std::vector<std::uint64_t> closed_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        mask[static_cast<std::size_t>(v)] = bit(v);
        for (int w : g.neighbors(v)) mask[static_cast<std::size_t>(v)] |= bit(w);
    }
    return mask;
}

VertexSet to_vertex_set(int n, const std::vector<int>& chosen) {
    VertexSet s(n);
    for (int v : chosen) s.insert(v);
    return s;
}

// Lexicographic enumeration of k-subsets that dominate the graph. Branches
// whose remaining candidates cannot complete the coverage are pruned, which
// never skips a dominating subset. `accept` may reject a dominating subset
// (e.g. unpairable); enumeration then continues in order.
struct DominationSearch {
    int n;
    std::uint64_t full;
    std::vector<std::uint64_t> cover;   // N[v] masks
    std::vector<std::uint64_t> suffix;  // cover[v] | cover[v+1] | ... | cover[n]
    std::uint64_t explored = 0;

    explicit DominationSearch(const Graph& g)
        : n(g.vertex_count()),
          full(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1),
          cover(closed_masks(g)),
          suffix(static_cast<std::size_t>(n) + 2, 0) {
        for (int v = n; v >= 1; --v)
            suffix[static_cast<std::size_t>(v)] =
                suffix[static_cast<std::size_t>(v) + 1] | cover[static_cast<std::size_t>(v)];
    }

    template <typename Accept>
    bool find(int k, Accept&& accept, std::vector<int>& chosen) {
        chosen.clear();
        return descend(1, k, 0, accept, chosen);
    }

private:
    template <typename Accept>
    bool descend(int next, int remaining, std::uint64_t covered, Accept& accept,
                 std::vector<int>& chosen) {
        if (remaining == 0) {
            ++explored;
            return covered == full && accept(chosen);
        }
        if ((covered | suffix[static_cast<std::size_t>(next)]) != full) return false;
        for (int v = next; v <= n - remaining + 1; ++v) {
            chosen.push_back(v);
            if (descend(v + 1, remaining - 1, covered | cover[static_cast<std::size_t>(v)],
                        accept, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

// Perfect matching with adjacency-only pairs inside the chosen set,
// lowest-unpaired-first with backtracking; canonical like find_pairing.
std::optional<SemipairedSolution> adjacent_pairing(const Graph& g,
                                                   const std::vector<int>& verts) {
    int k = static_cast<int>(verts.size());
    if (k % 2 != 0) return std::nullopt;
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    std::vector<std::pair<int, int>> chosen;
    std::function<bool()> match = [&]() -> bool {
        int lowest = -1;
        for (int i = 0; i < k; ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                lowest = i;
                break;
            }
        if (lowest < 0) return true;
        for (int j = lowest + 1; j < k; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            if (!g.adjacent(verts[static_cast<std::size_t>(lowest)],
                            verts[static_cast<std::size_t>(j)]))
                continue;
            used[static_cast<std::size_t>(lowest)] = used[static_cast<std::size_t>(j)] = 1;
            chosen.emplace_back(verts[static_cast<std::size_t>(lowest)],
                                verts[static_cast<std::size_t>(j)]);
            if (match()) return true;
            chosen.pop_back();
            used[static_cast<std::size_t>(lowest)] = used[static_cast<std::size_t>(j)] = 0;
        }
        return false;
    };
    if (!match()) return std::nullopt;
    SemipairedSolution sol;
    for (const auto& [u, v] : chosen) sol.add_pair(u, v);
    return sol;
}

}  // namespace

OracleResult exact_semi_pd(const Graph& g, std::optional<int> upper_bound) {
    check_oracle_size(g);
    if (g.vertex_count() < 2)
        throw std::invalid_argument("exact_semi_pd: graph must have at least 2 vertices");
    if (!is_connected(g))
        throw std::invalid_argument("exact_semi_pd: graph must be connected");

    int n = g.vertex_count();
    DominationSearch search(g);
    std::vector<int> chosen;
    std::optional<SemipairedSolution> pairing;
    auto accept = [&](const std::vector<int>& verts) {
        pairing = find_pairing(g, to_vertex_set(n, verts));
        return pairing.has_value();
    };

    int limit = upper_bound ? std::min(*upper_bound, n) : n;
    for (int k = 2; k <= limit; k += 2) {
        if (search.find(k, accept, chosen))
            return {k, to_vertex_set(n, chosen), std::move(pairing), search.explored};
    }
    if (upper_bound) throw BoundExceeded(*upper_bound);
    throw std::logic_error("exact_semi_pd: no solution found (unreachable for connected input)");
}

OracleResult exact_domination(const Graph& g) {
    check_oracle_size(g);
    int n = g.vertex_count();
    DominationSearch search(g);
    std::vector<int> chosen;
    auto accept = [](const std::vector<int>&) { return true; };
    for (int k = 1; k <= n; ++k) {
        if (search.find(k, accept, chosen))
            return {k, to_vertex_set(n, chosen), std::nullopt, search.explored};
    }
    throw std::logic_error("exact_domination: no dominating set (unreachable)");
}

OracleResult exact_paired_domination(const Graph& g) {
    check_oracle_size(g);
    int n = g.vertex_count();
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("exact_paired_domination: isolated vertex " +
                                        std::to_string(v));

    DominationSearch search(g);
    std::vector<int> chosen;
    std::optional<SemipairedSolution> pairing;
    auto accept = [&](const std::vector<int>& verts) {
        pairing = adjacent_pairing(g, verts);
        return pairing.has_value();
    };
    for (int k = 2; k <= n; k += 2) {
        if (search.find(k, accept, chosen))
            return {k, to_vertex_set(n, chosen), std::move(pairing), search.explored};
    }
    throw std::logic_error("exact_paired_domination: no solution (unreachable without isolates)");
}

OracleResult exact_vertex_cover(const Graph& g) {
    check_oracle_size(g);
    int n = g.vertex_count();

    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v)
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(v, w);

    std::uint64_t explored = 0;
    auto covers = [&](const VertexSet& s) {
        ++explored;
        for (const auto& [u, v] : edges)
            if (!s.contains(u) && !s.contains(v)) return false;
        return true;
    };

    std::vector<int> chosen;
    std::function<bool(int, int)> descend = [&](int next, int remaining) -> bool {
        if (remaining == 0) return covers(to_vertex_set(n, chosen));
        for (int v = next; v <= n - remaining + 1; ++v) {
            chosen.push_back(v);
            if (descend(v + 1, remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 0; k <= n; ++k) {
        chosen.clear();
        if (descend(1, k)) return {k, to_vertex_set(n, chosen), std::nullopt, explored};
    }
    throw std::logic_error("exact_vertex_cover: unreachable");
}

}  // namespace semipair
