#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tribreak/breaker_node.hpp>
#include <tribreak/errors.hpp>
#include <tribreak/triangle_index.hpp>

#include "test_support.hpp"

#include <numeric>

using namespace tribreak;

TEST_CASE("bowtie center wins the first pick") {
    Graph g = ts::bowtie();
    auto plan = break_nodes_discounting(g, 1);
    REQUIRE(plan.size() == 1);
    CHECK(plan.selected_nodes[0] == 2);
    CHECK(plan.gains[0] == 2);
    CHECK(plan.cumulative[0] == 2);
    CHECK(plan.total_triangles_initial == 2);
    CHECK(plan.broken() == 2);
}

TEST_CASE("selection reports original ids and ties prefer low labels") {
    // One triangle {100,200,300}: every member gains 1, so the tie goes to the
    // smallest internal label, i.e. lowest degree first, then original id.
    Graph g = ts::make_graph({{100, 200}, {200, 300}, {100, 300}, {300, 400}});
    auto plan = break_nodes_discounting(g, 1);
    CHECK(plan.selected_nodes[0] == 100);
}

TEST_CASE("invalid budgets are rejected") {
    Graph g = ts::complete(4);
    CHECK_THROWS_AS(break_nodes_discounting(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(break_nodes_discounting(g, 5), std::invalid_argument);
}

TEST_CASE("maintained counts equal a fresh recount after every step") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = ts::random_graph(seed, 50);
        const std::size_t k = std::max<std::size_t>(1, g.live_node_count() / 2);
        break_nodes_discounting(
            g, k,
            [&](std::size_t, const Graph& now, const std::vector<std::int64_t>& counts) {
                const auto fresh = count_forward(now);
                REQUIRE(counts == fresh.per_node);
            });
    }
}

TEST_CASE("discounting and recount greedy produce identical plans") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = ts::random_graph(seed, 40);
        const std::size_t k =
            1 + static_cast<std::size_t>(seed % std::min<std::size_t>(g.live_node_count(), 8));
        auto fast = break_nodes_discounting(g, k);
        auto slow = break_nodes_greedy_recount(g, k);
        REQUIRE(fast.selected_nodes == slow.selected_nodes);
        REQUIRE(fast.gains == slow.gains);
        CHECK(fast.cumulative == slow.cumulative);
    }
}

TEST_CASE("gains are non-increasing is not required, but cumulative is consistent") {
    Graph g = ts::complete(6);
    auto plan = break_nodes_discounting(g, 4);
    std::int64_t running = 0;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        running += plan.gains[i];
        CHECK(plan.cumulative[i] == running);
    }
    CHECK(plan.broken() == plan.total_triangles_initial); // K6 loses all triangles by n-2 removals
}

TEST_CASE("min variant stops at the target and matches the greedy prefix") {
    Graph g = ts::complete(6); // 20 triangles
    auto plan = break_nodes_min(g, 15);
    CHECK(plan.broken() >= 15);
    CHECK(plan.cumulative[plan.size() - 2] < 15); // one step fewer is short

    auto full = break_nodes_discounting(g, plan.size());
    CHECK(plan.selected_nodes == full.selected_nodes);
    CHECK(plan.gains == full.gains);
}

TEST_CASE("min variant input validation") {
    Graph g = ts::bowtie(); // 2 triangles
    CHECK_THROWS_AS(break_nodes_min(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(break_nodes_min(g, -3), std::invalid_argument);
    CHECK_THROWS_AS(break_nodes_min(g, 3), InfeasibleError);
    CHECK(break_nodes_min(g, 2).size() == 1);
}

TEST_CASE("bound certificate brackets the plan") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = ts::random_graph(seed, 30);
        if (count_forward(g).total == 0) continue;
        const std::size_t k = 1 + seed % 3;
        if (k > g.live_node_count()) continue;
        auto plan = break_nodes_discounting(g, k);
        auto bound = bound_nodes(g, plan);
        CHECK(bound.objective == plan.broken());
        CHECK(bound.upper_bound >= bound.objective);
        CHECK(bound.ratio <= 1.0);
        CHECK(bound.ratio > 0.0);
    }
}

TEST_CASE("bound is exactly 1 when everything is broken") {
    Graph g = ts::complete(5);
    auto plan = break_nodes_discounting(g, 3); // kills all 10 triangles
    REQUIRE(plan.broken() == 10);
    auto bound = bound_nodes(g, plan);
    CHECK(bound.upper_bound == 10);
    CHECK(bound.ratio == 1.0);
}

TEST_CASE("bound rejects plans from a different graph") {
    Graph g = ts::complete(5);
    Graph other = ts::bowtie();
    auto plan = break_nodes_discounting(g, 2);
    CHECK_THROWS_AS(bound_nodes(other, plan), DataError);
}

TEST_CASE("phase timings are populated") {
    Graph g = ts::complete(10);
    PhaseTimings t;
    break_nodes_discounting(g, 5, {}, &t);
    CHECK(t.count_ms >= 0.0);
    CHECK(t.select_ms >= 0.0);
}
