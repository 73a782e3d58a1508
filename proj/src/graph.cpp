#include "semipair/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace semipair {

VertexSet::VertexSet(int universe) : universe_(universe) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    words_.assign(static_cast<std::size_t>(universe / 64 + 1), 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
}

void VertexSet::check_universe(int v) const {
    if (v < 1 || v > universe_)
        throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                " outside universe [1, " + std::to_string(universe_) + "]");
}

int VertexSet::size() const noexcept {
    int count = 0;
    for (std::uint64_t w : words_) count += std::popcount(w);
    return count;
}

bool VertexSet::contains(int v) const {
    check_universe(v);
    int b = v - 1;
    return (words_[b / 64] >> (b % 64)) & 1u;
}

void VertexSet::insert(int v) {
    check_universe(v);
    int b = v - 1;
    words_[b / 64] |= std::uint64_t{1} << (b % 64);
}

void VertexSet::erase(int v) {
    check_universe(v);
    int b = v - 1;
    words_[b / 64] &= ~(std::uint64_t{1} << (b % 64));
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            int bit = std::countr_zero(w);
            out.push_back(static_cast<int>(i * 64 + bit) + 1);
            w &= w - 1;
        }
    }
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (universe_ != other.universe_)
        throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

bool VertexSet::intersects(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("VertexSet: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("Graph: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") has an id outside [1, " +
                                        std::to_string(n) + "]");
        if (u == v)
            throw std::invalid_argument("Graph: self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    int m = 0;
    for (int v = 1; v <= n; ++v) {
        auto& nbrs = g.adj_[static_cast<std::size_t>(v)];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m += static_cast<int>(nbrs.size());
    }
    g.m_ = m / 2;
    return g;
}

std::span<const int> Graph::neighbors(int v) const {
    if (v < 1 || v > n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const noexcept {
    int d = 0;
    for (int v = 1; v <= n_; ++v)
        d = std::max(d, static_cast<int>(adj_[static_cast<std::size_t>(v)].size()));
    return d;
}

bool Graph::adjacent(int u, int v) const {
    auto nbrs = neighbors(u);
    if (v < 1 || v > n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<int> distance(const Graph& g, int u, int v) {
    g.neighbors(u);  // id validation
    g.neighbors(v);
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(u)] = 0;
    frontier.push(u);
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop();
        for (int y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            if (y == v) return dist[static_cast<std::size_t>(y)];
            frontier.push(y);
        }
    }
    return std::nullopt;
}

VertexSet closed_neighborhood(const Graph& g, int u) {
    VertexSet s(g.vertex_count());
    s.insert(u);
    for (int w : g.neighbors(u)) s.insert(w);
    return s;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    VertexSet covered(g.vertex_count());
    for (int v : s.members()) covered |= closed_neighborhood(g, v);
    return covered.size() == g.vertex_count();
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::queue<int> frontier;
    seen[1] = 1;
    frontier.push(1);
    int reached = 1;
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop();
        for (int y : g.neighbors(x)) {
            if (seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            ++reached;
            frontier.push(y);
        }
    }
    return reached == n;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

VertexSet vertices_within_2(const Graph& g, int u) {
    VertexSet s(g.vertex_count());
    for (int w : g.neighbors(u)) {
        s.insert(w);
        for (int x : g.neighbors(w))
            if (x != u) s.insert(x);
    }
    return s;
}

}  // namespace semipair
