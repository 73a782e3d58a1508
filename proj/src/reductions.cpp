#include "semipair/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace semipair {
namespace {

std::vector<std::pair<int, int>> source_edges(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= g.vertex_count(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(v, w);
    return edges;
}

std::string tagged(const std::string& family, int i, int side) {
    return family + "_" + std::to_string(i) + "^" + std::to_string(side);
}

std::string tagged(const std::string& family, int i) {
    return family + "_" + std::to_string(i);
}

void check_gadget_size(const ReductionOutput& red, int vertices, int edges) {
    if (red.gadget.vertex_count() != vertices || red.gadget.edge_count() != edges)
        throw std::logic_error(red.kind + ": gadget size mismatch (built " +
                               std::to_string(red.gadget.vertex_count()) + "/" +
                               std::to_string(red.gadget.edge_count()) + ", closed form " +
                               std::to_string(vertices) + "/" + std::to_string(edges) + ")");
}

}  // namespace

ReductionOutput gp4_from(const Graph& h) {
    int n = h.vertex_count();
    // ids: 1..n inner vertices, then the path families w, x, y, z
    auto w = [n](int i) { return n + i; };
    auto x = [n](int i) { return 2 * n + i; };
    auto y = [n](int i) { return 3 * n + i; };
    auto z = [n](int i) { return 4 * n + i; };

    std::vector<std::pair<int, int>> edges = source_edges(h);
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(i, w(i));
        edges.emplace_back(w(i), x(i));
        edges.emplace_back(x(i), y(i));
        edges.emplace_back(y(i), z(i));
    }

    ReductionOutput red;
    red.kind = "gp4";
    red.gadget = Graph::build(5 * n, edges);
    red.labels.assign(static_cast<std::size_t>(5 * n) + 1, "");
    for (int i = 1; i <= n; ++i) {
        red.labels[static_cast<std::size_t>(i)] = tagged("v", i);
        red.labels[static_cast<std::size_t>(w(i))] = tagged("w", i);
        red.labels[static_cast<std::size_t>(x(i))] = tagged("x", i);
        red.labels[static_cast<std::size_t>(y(i))] = tagged("y", i);
        red.labels[static_cast<std::size_t>(z(i))] = tagged("z", i);
    }
    red.source = h;
    red.source_n = n;
    red.source_m = h.edge_count();
    red.identity = "gamma_pr2(G) = (2/5)|V(G)|";
    check_gadget_size(red, 5 * n, h.edge_count() + 4 * n);
    return red;
}

ReductionOutput vc_to_semipd_bipartite(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (m < 1) throw std::invalid_argument("vc_to_semipd_bipartite: source has no edges");
    auto edges_g = source_edges(g);

    // id layout, in family order: V_1 V_2 E_1 E_2 A B C F
    auto vcopy = [n](int i, int side) { return (side - 1) * n + i; };
    auto ecopy = [n, m](int j, int side) { return 2 * n + (side - 1) * m + j; };
    auto a = [n, m](int i) { return 2 * n + 2 * m + i; };
    auto b = [n, m](int i) { return 3 * n + 2 * m + i; };
    auto c = [n, m](int i) { return 4 * n + 2 * m + i; };
    auto f = [n, m](int i) { return 5 * n + 2 * m + i; };

    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(vcopy(i, 1), f(i));
        edges.emplace_back(vcopy(i, 2), f(i));
        edges.emplace_back(a(i), b(i));
        edges.emplace_back(b(i), c(i));
        edges.emplace_back(a(i), f(i));
    }
    for (int side = 1; side <= 2; ++side)
        for (int j = 1; j <= m; ++j) {
            auto [p, q] = edges_g[static_cast<std::size_t>(j - 1)];
            edges.emplace_back(vcopy(p, side), ecopy(j, side));
            edges.emplace_back(vcopy(q, side), ecopy(j, side));
        }

    ReductionOutput red;
    red.kind = "vc-bipartite";
    red.gadget = Graph::build(6 * n + 2 * m, edges);
    red.labels.assign(static_cast<std::size_t>(6 * n + 2 * m) + 1, "");
    for (int side = 1; side <= 2; ++side) {
        for (int i = 1; i <= n; ++i)
            red.labels[static_cast<std::size_t>(vcopy(i, side))] = tagged("v", i, side);
        for (int j = 1; j <= m; ++j)
            red.labels[static_cast<std::size_t>(ecopy(j, side))] = tagged("e", j, side);
    }
    for (int i = 1; i <= n; ++i) {
        red.labels[static_cast<std::size_t>(a(i))] = tagged("a", i);
        red.labels[static_cast<std::size_t>(b(i))] = tagged("b", i);
        red.labels[static_cast<std::size_t>(c(i))] = tagged("c", i);
        red.labels[static_cast<std::size_t>(f(i))] = tagged("f", i);
    }
    red.source = g;
    red.source_n = n;
    red.source_m = m;
    red.identity = "gamma_pr2(H) = 2n + 2tau(G)";
    check_gadget_size(red, 6 * n + 2 * m, 5 * n + 4 * m);
    return red;
}

SemipairedSolution semipd_from_vc(const ReductionOutput& red, const VertexSet& cover) {
    if (red.kind != "vc-bipartite")
        throw std::invalid_argument("semipd_from_vc: wrong reduction kind " + red.kind);
    const Graph& g = red.source;
    int n = red.source_n;
    int m = red.source_m;
    for (int v = 1; v <= n; ++v)
        for (int w : g.neighbors(v))
            if (v < w && !cover.contains(v) && !cover.contains(w))
                throw std::invalid_argument("semipd_from_vc: edge (" + std::to_string(v) +
                                            "," + std::to_string(w) + ") is uncovered");

    auto vcopy = [n](int i, int side) { return (side - 1) * n + i; };
    auto b = [n, m](int i) { return 3 * n + 2 * m + i; };
    auto f = [n, m](int i) { return 5 * n + 2 * m + i; };

    SemipairedSolution sol;
    for (int i = 1; i <= n; ++i) sol.add_pair(b(i), f(i));
    for (int i : cover.members()) sol.add_pair(vcopy(i, 1), vcopy(i, 2));
    return sol;
}

ReductionOutput dom_to_semipd_split(const Graph& g) {
    int n = g.vertex_count();
    // id layout: V_1 V_2 U_1 U_2
    auto vcopy = [n](int i, int side) { return (side - 1) * n + i; };
    auto ucopy = [n](int i, int side) { return (side + 1) * n + i; };

    std::vector<std::pair<int, int>> edges;
    std::vector<int> clique;
    for (int i = 1; i <= n; ++i) clique.push_back(vcopy(i, 1));
    for (int i = 1; i <= n; ++i) clique.push_back(ucopy(i, 1));
    for (std::size_t p = 0; p < clique.size(); ++p)
        for (std::size_t q = p + 1; q < clique.size(); ++q)
            edges.emplace_back(clique[p], clique[q]);
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(vcopy(i, 2), vcopy(i, 1));
        edges.emplace_back(ucopy(i, 2), ucopy(i, 1));
        for (int j : g.neighbors(i)) {
            edges.emplace_back(vcopy(i, 2), vcopy(j, 1));
            edges.emplace_back(ucopy(i, 2), ucopy(j, 1));
        }
    }

    ReductionOutput red;
    red.kind = "dom-split";
    red.gadget = Graph::build(4 * n, edges);
    red.labels.assign(static_cast<std::size_t>(4 * n) + 1, "");
    for (int side = 1; side <= 2; ++side)
        for (int i = 1; i <= n; ++i) {
            red.labels[static_cast<std::size_t>(vcopy(i, side))] = tagged("v", i, side);
            red.labels[static_cast<std::size_t>(ucopy(i, side))] = tagged("u", i, side);
        }
    red.source = g;
    red.source_n = n;
    red.source_m = g.edge_count();
    red.identity = "gamma_pr2(G') = 2*gamma(G)";
    check_gadget_size(red, 4 * n, n * (2 * n - 1) + 2 * (n + 2 * g.edge_count()));
    return red;
}

ReductionOutput dom_to_semipd_hardness(const Graph& g) {
    int n = g.vertex_count();
    // id layout: V^1 V^2 W^1 W^2 Z
    auto vcopy = [n](int i, int side) { return (side - 1) * n + i; };
    auto wcopy = [n](int i, int side) { return (side + 1) * n + i; };
    auto z = [n](int i) { return 4 * n + i; };

    std::vector<std::pair<int, int>> edges;
    for (int side = 1; side <= 2; ++side)
        for (int i = 1; i <= n; ++i) {
            edges.emplace_back(wcopy(i, side), vcopy(i, side));
            for (int j : g.neighbors(i)) edges.emplace_back(wcopy(i, side), vcopy(j, side));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            edges.emplace_back(vcopy(i, 1), vcopy(j, 1));
            edges.emplace_back(vcopy(i, 2), vcopy(j, 2));
            edges.emplace_back(z(i), z(j));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            edges.emplace_back(vcopy(i, 1), z(j));
            edges.emplace_back(vcopy(i, 2), z(j));
        }

    ReductionOutput red;
    red.kind = "dom-hardness";
    red.gadget = Graph::build(5 * n, edges);
    red.labels.assign(static_cast<std::size_t>(5 * n) + 1, "");
    for (int side = 1; side <= 2; ++side)
        for (int i = 1; i <= n; ++i) {
            red.labels[static_cast<std::size_t>(vcopy(i, side))] = tagged("v", i, side);
            red.labels[static_cast<std::size_t>(wcopy(i, side))] = tagged("w", i, side);
        }
    for (int i = 1; i <= n; ++i) red.labels[static_cast<std::size_t>(z(i))] = tagged("z", i);
    red.source = g;
    red.source_n = n;
    red.source_m = g.edge_count();
    red.identity = "gamma_pr2(H) = 2*gamma(G)";
    int m = g.edge_count();
    check_gadget_size(red, 5 * n, 2 * (n + 2 * m) + 3 * (n * (n - 1) / 2) + 2 * n * n);
    return red;
}

VertexSet extract_dominating_set(const ReductionOutput& red, const SemipairedSolution& dsp) {
    if (red.kind != "dom-hardness")
        throw std::invalid_argument("extract_dominating_set: wrong reduction kind " + red.kind);
    Verdict verdict = verify_solution(red.gadget, dsp);
    if (!verdict.valid)
        throw std::invalid_argument("extract_dominating_set: solution invalid on gadget: " +
                                    verdict.describe());

    int n = red.source_n;
    auto vcopy = [n](int i, int side) { return (side - 1) * n + i; };
    auto wcopy = [n](int i, int side) { return (side + 1) * n + i; };

    VertexSet picked = dsp.vertex_set(red.gadget.vertex_count());
    int total = picked.size();
    int side1 = 0;  // |picked ∩ (V^1 ∪ W^1)|
    for (int i = 1; i <= n; ++i) {
        if (picked.contains(vcopy(i, 1))) ++side1;
        if (picked.contains(wcopy(i, 1))) ++side1;
    }
    int side = (2 * side1 <= total) ? 1 : 2;

    for (int i = 1; i <= n; ++i) {
        int w = wcopy(i, side);
        bool neighbor_in = false;
        for (int y : red.gadget.neighbors(w))
            if (picked.contains(y)) {
                neighbor_in = true;
                break;
            }
        if (!neighbor_in) {
            picked.erase(w);
            picked.insert(vcopy(i, side));
        }
    }

    VertexSet result(n);
    for (int i = 1; i <= n; ++i)
        if (picked.contains(vcopy(i, side))) result.insert(i);

    if (2 * result.size() > total)
        throw std::logic_error("extract_dominating_set: extracted set larger than half");
    if (!is_dominating(red.source, result))
        throw std::logic_error("extract_dominating_set: extracted set does not dominate source");
    return result;
}

ReductionOutput hardness_from_gadget(const Graph& gadget,
                                     const std::vector<std::string>& labels) {
    int total = gadget.vertex_count();
    if (total % 5 != 0)
        throw std::invalid_argument("hardness_from_gadget: vertex count not divisible by 5");
    int n = total / 5;
    if (static_cast<int>(labels.size()) != total + 1)
        throw std::invalid_argument("hardness_from_gadget: label count mismatch");
    for (int i = 1; i <= n; ++i) {
        if (labels[static_cast<std::size_t>(i)] != tagged("v", i, 1) ||
            labels[static_cast<std::size_t>(n + i)] != tagged("v", i, 2) ||
            labels[static_cast<std::size_t>(2 * n + i)] != tagged("w", i, 1) ||
            labels[static_cast<std::size_t>(3 * n + i)] != tagged("w", i, 2) ||
            labels[static_cast<std::size_t>(4 * n + i)] != tagged("z", i))
            throw std::invalid_argument("hardness_from_gadget: labels do not match the "
                                        "hardness layout at index " + std::to_string(i));
    }

    // source adjacency: w_i^1 is attached to v_j^1 exactly for j in N[i]
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int y : gadget.neighbors(2 * n + i)) {
            int j = y;  // a V^1 vertex
            if (j < 1 || j > n)
                throw std::invalid_argument("hardness_from_gadget: attachment vertex " +
                                            std::to_string(2 * n + i) +
                                            " has a neighbor outside the first core copy");
            if (j != i) edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    Graph source = Graph::build(n, edges);

    ReductionOutput rebuilt = dom_to_semipd_hardness(source);
    // sanity: the rebuilt gadget must match what we were given
    if (rebuilt.gadget.vertex_count() != gadget.vertex_count() ||
        rebuilt.gadget.edge_count() != gadget.edge_count())
        throw std::invalid_argument("hardness_from_gadget: gadget does not match the "
                                    "hardness construction for its recovered source");
    return rebuilt;
}

}  // namespace semipair
