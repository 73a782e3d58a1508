#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "semipair/exact.hpp"
#include "semipair/interval.hpp"
#include "semipair/io.hpp"
#include "support/builders.hpp"

using namespace semipair;
using namespace semipair::testing;

namespace {

IntervalModel model_of(std::initializer_list<Interval> ivs) {
    return IntervalModel::from(std::vector<Interval>(ivs));
}

IntervalModel chain4() {
    return model_of({{1, 3}, {2, 5}, {4, 7}, {6, 8}});
}

std::string data_path(const std::string& name) {
    return std::string(SEMIPAIR_TEST_DATA_DIR) + "/" + name;
}

IntervalModel load_model(const std::string& name) {
    std::ifstream in(data_path(name));
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_intervals(buf.str());
}

}  // namespace

TEST_CASE("left_end_order") {
    auto sorted = left_end_order(model_of({{1, 3}, {2, 5}, {4, 7}}));
    CHECK(sorted.order == std::vector<int>{1, 2, 3});

    auto shuffled = left_end_order(model_of({{2, 5}, {1, 3}, {4, 7}}));
    CHECK(shuffled.order == std::vector<int>{2, 1, 3});
    CHECK(shuffled.position[2] == 1);

    CHECK_THROWS_AS(model_of({{1, 3}, {1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(model_of({{3, 1}}), std::invalid_argument);
}

TEST_CASE("interval_graph_from_model") {
    Graph p4 = interval_graph_from_model(chain4());
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.adjacent(1, 2));
    CHECK(p4.adjacent(2, 3));
    CHECK(p4.adjacent(3, 4));
    CHECK_FALSE(p4.adjacent(1, 3));

    Graph nested = interval_graph_from_model(model_of({{1, 10}, {2, 3}, {4, 5}}));
    CHECK(nested.edge_count() == 2);
    CHECK(nested.adjacent(1, 2));
    CHECK(nested.adjacent(1, 3));

    Graph disjoint = interval_graph_from_model(model_of({{1, 2}, {3, 4}}));
    CHECK(disjoint.edge_count() == 0);
    CHECK_THROWS_AS(semi_paired_dom_interval(disjoint, LeftEndOrdering::identity(2)),
                    std::invalid_argument);
}

TEST_CASE("compute_indices") {
    Graph p4 = interval_graph_from_model(chain4());
    auto idx = compute_indices(p4, LeftEndOrdering::identity(4));
    CHECK(idx.least_neighbor == std::vector<int>{0, 1, 1, 2, 3});
    CHECK(idx.last_nonneighbor == std::vector<int>{0, 0, 0, 1, 2});

    Graph star_first =
        interval_graph_from_model(model_of({{1, 10}, {2, 3}, {4, 5}, {6, 7}}));
    auto sidx = compute_indices(star_first, LeftEndOrdering::identity(4));
    CHECK(sidx.least_neighbor == std::vector<int>{0, 1, 1, 1, 1});
    CHECK(sidx.last_nonneighbor == std::vector<int>{0, 0, 0, 2, 3});

    Graph k3 = interval_graph_from_model(model_of({{1, 4}, {2, 5}, {3, 6}}));
    auto kidx = compute_indices(k3, LeftEndOrdering::identity(3));
    CHECK(kidx.least_neighbor == std::vector<int>{0, 1, 1, 1});
    CHECK(kidx.last_nonneighbor == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("interval solver on tiny models") {
    Graph p4 = interval_graph_from_model(chain4());
    SemipairedSolution sol = semi_paired_dom_interval(p4, LeftEndOrdering::identity(4));
    CHECK(sol.pairs == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(verify_solution(p4, sol).valid);

    Graph p2 = interval_graph_from_model(model_of({{1, 3}, {2, 4}}));
    CHECK(semi_paired_dom_interval(p2, LeftEndOrdering::identity(2)).pairs ==
          std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("solution maps back to original interval numbering") {
    // intervals given out of order: input 3 is the leftmost
    IntervalModel model = model_of({{4, 7}, {6, 8}, {1, 3}, {2, 5}});
    SemipairedSolution sol = solve_interval_model(model);
    // left-end order is (3,4,1,2); positions {1,3} map to inputs {3,1}
    CHECK(sol.pairs == std::vector<std::pair<int, int>>{{1, 3}});
}

TEST_CASE("pinned 16-interval worked example") {
    IntervalModel model = load_model("fig3.interval");
    Graph g = interval_graph_from_model(model);
    REQUIRE(g.vertex_count() == 16);

    IntervalRunResult run =
        semi_paired_dom_interval_traced(g, LeftEndOrdering::identity(16));

    REQUIRE(run.steps.size() == 3);

    const IntervalStep& s1 = run.steps[0];
    CHECK(s1.i == 16);
    CHECK(s1.branch == IntervalBranch::gap_covered_recurse);
    CHECK(s1.j == 15);
    CHECK(s1.k == 14);
    CHECK(s1.r == 13);
    CHECK(s1.s == 10);
    CHECK(s1.added == std::vector<std::pair<int, int>>{{13, 15}});
    CHECK(s1.remaining_after == 10);

    const IntervalStep& s2 = run.steps[1];
    CHECK(s2.i == 10);
    CHECK(s2.branch == IntervalBranch::gap_uncovered_recurse);
    CHECK(s2.j == 9);
    CHECK(s2.k == 7);
    CHECK(s2.r == 5);
    CHECK(s2.t == 8);
    CHECK(s2.b == 6);
    CHECK(s2.s == 4);
    CHECK(s2.added == std::vector<std::pair<int, int>>{{6, 9}});
    CHECK(s2.remaining_after == 4);

    const IntervalStep& s3 = run.steps[2];
    CHECK(s3.i == 4);
    CHECK(s3.branch == IntervalBranch::lowest_at_two);
    CHECK(s3.j == 2);
    CHECK(s3.added == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(s3.remaining_after == 0);

    CHECK(run.solution.pairs ==
          std::vector<std::pair<int, int>>{{13, 15}, {6, 9}, {1, 2}});
    CHECK(run.solution.cardinality() == 6);
    CHECK(verify_solution(g, run.solution).valid);
    CHECK(exact_semi_pd(g).cardinality == 6);
}

TEST_CASE("interval solver matches the exact oracle on random models") {
    std::mt19937_64 seeds(53);
    for (int round = 0; round < 120; ++round) {
        int n = 2 + static_cast<int>(seeds() % 12);
        auto out = generate(GenSpec::parse("random-interval", n, seeds()));
        const auto& model = std::get<IntervalModel>(out);
        Graph g = interval_graph_from_model(model);
        SemipairedSolution sol =
            semi_paired_dom_interval(g, LeftEndOrdering::identity(n));
        CHECK(verify_solution(g, sol).valid);
        CHECK(sol.cardinality() == exact_semi_pd(g).cardinality);
    }
}

TEST_CASE("left-end adjacency is consecutive-closed on random models") {
    std::mt19937_64 seeds(59);
    for (int round = 0; round < 60; ++round) {
        int n = 3 + static_cast<int>(seeds() % 10);
        auto out = generate(GenSpec::parse("random-interval", n, seeds()));
        Graph g = interval_graph_from_model(std::get<IntervalModel>(out));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j)
                if (g.adjacent(i, j))
                    for (int k = i + 1; k < j; ++k) CHECK(g.adjacent(i, k));
    }
}

TEST_CASE("prefixes of a connected interval graph induce connected subgraphs") {
    std::mt19937_64 seeds(61);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(seeds() % 11);
        auto out = generate(GenSpec::parse("random-interval", n, seeds()));
        Graph g = interval_graph_from_model(std::get<IntervalModel>(out));
        if (!is_connected(g)) continue;  // generator retries make this rare
        for (int prefix = 1; prefix <= n; ++prefix) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 1; u <= prefix; ++u)
                for (int w : g.neighbors(u))
                    if (u < w && w <= prefix) edges.emplace_back(u, w);
            CHECK(is_connected(Graph::build(prefix, edges)));
        }
    }
}

TEST_CASE("sweep bookkeeping stays proportional to n + m") {
    // long chains of locally overlapping intervals, solved end to end
    auto chain_model = [](int n) {
        std::vector<Interval> ivs;
        for (int i = 0; i < n; ++i)
            ivs.push_back({10.0 * i, 10.0 * i + 25.0});  // overlaps the next two
        return IntervalModel::from(std::move(ivs));
    };
    for (int n : {1000, 10000, 100000}) {
        Graph g = interval_graph_from_model(chain_model(n));
        IntervalRunResult run =
            semi_paired_dom_interval_traced(g, LeftEndOrdering::identity(n));
        CHECK(is_dominating(g, run.solution.vertex_set(n)));
        CHECK(run.work <=
              50ull * static_cast<std::uint64_t>(g.vertex_count() + g.edge_count() + 1));
    }
    // random models too (denser, small n so the oracle-checked suite covers them)
    std::mt19937_64 seeds(101);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(seeds() % 12);
        auto out = generate(GenSpec::parse("random-interval", n, seeds()));
        Graph g = interval_graph_from_model(std::get<IntervalModel>(out));
        IntervalRunResult run =
            semi_paired_dom_interval_traced(g, LeftEndOrdering::identity(n));
        CHECK(run.work <=
              50ull * static_cast<std::uint64_t>(g.vertex_count() + g.edge_count() + 1));
    }
}

TEST_CASE("every sweep iteration strictly shrinks the unsolved prefix") {
    std::mt19937_64 seeds(67);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(seeds() % 12);
        auto out = generate(GenSpec::parse("random-interval", n, seeds()));
        Graph g = interval_graph_from_model(std::get<IntervalModel>(out));
        IntervalRunResult run =
            semi_paired_dom_interval_traced(g, LeftEndOrdering::identity(n));
        int previous = n;
        for (const auto& step : run.steps) {
            CHECK(step.i == previous);
            CHECK(step.remaining_after < previous);
            previous = step.remaining_after;
        }
        CHECK(previous == 0);
    }
}
