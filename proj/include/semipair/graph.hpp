#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace semipair {

/// Set of vertices over the universe [1, n] with bitset semantics:
/// constant-time membership, iteration in increasing id order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet of(int universe, std::initializer_list<int> members);

    int universe() const noexcept { return universe_; }
    int size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    /// Members in increasing id order.
    std::vector<int> members() const;

    VertexSet& operator|=(const VertexSet& other);
    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    bool operator==(const VertexSet&) const = default;

private:
    void check_universe(int v) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph with 1-indexed vertex ids.
/// Adjacency lists are sorted and deduplicated; self-loops are rejected.
class Graph {
public:
    Graph() = default;  // empty placeholder; build() is the real constructor

    /// Builds a graph from unordered id pairs. Duplicate edges collapse
    /// silently; a self-loop or an out-of-range id throws
    /// std::invalid_argument naming the offending pair.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const noexcept;
    bool adjacent(int u, int v) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;  // 1-based, adj_[0] unused
};

/// Shortest-path hop count, or nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

/// N[u] = {u} together with u's neighbors.
VertexSet closed_neighborhood(const Graph& g, int u);

/// True iff the union of closed neighborhoods of s covers every vertex.
bool is_dominating(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// Connected and m = n-1.
bool is_tree(const Graph& g);

/// {v != u : d(u,v) <= 2}; the candidate partners of u in a semipairing.
VertexSet vertices_within_2(const Graph& g, int u);

}  // namespace semipair
