#include "support/tree_catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace semipair::testing {
namespace {

std::string rooted_signature(const Graph& t, int v, int parent) {
    std::vector<std::string> child_sigs;
    for (int w : t.neighbors(v))
        if (w != parent) child_sigs.push_back(rooted_signature(t, w, v));
    std::sort(child_sigs.begin(), child_sigs.end());
    std::string sig = "(";
    for (const auto& s : child_sigs) sig += s;
    sig += ")";
    return sig;
}

// peel leaves layer by layer until one or two center vertices remain
std::vector<int> centers(const Graph& t) {
    int n = t.vertex_count();
    if (n == 1) return {1};
    std::vector<int> deg(static_cast<std::size_t>(n) + 1);
    std::vector<int> layer;
    for (int v = 1; v <= n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    }
    int removed = 0;
    std::vector<int> current = layer;
    while (removed + static_cast<int>(current.size()) < n) {
        removed += static_cast<int>(current.size());
        std::vector<int> next;
        for (int v : current)
            for (int w : t.neighbors(v))
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        current = std::move(next);
    }
    return current;
}

std::string canonical_signature(const Graph& t) {
    std::vector<int> cs = centers(t);
    if (cs.size() == 1) return rooted_signature(t, cs[0], 0);
    std::string a = rooted_signature(t, cs[0], cs[1]);
    std::string b = rooted_signature(t, cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(v, w);
    return edges;
}

}  // namespace

std::vector<Graph> nonisomorphic_trees(int n) {
    std::vector<Graph> current = {Graph::build(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& t : current) {
            auto edges = edge_list(t);
            for (int attach = 1; attach < size; ++attach) {
                auto extended = edges;
                extended.emplace_back(attach, size);
                Graph candidate = Graph::build(size, extended);
                if (seen.insert(canonical_signature(candidate)).second)
                    next.push_back(std::move(candidate));
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace semipair::testing
