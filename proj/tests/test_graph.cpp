#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tribreak/errors.hpp>
#include <tribreak/graph.hpp>

#include "test_support.hpp"

#include <algorithm>
#include <sstream>

using namespace tribreak;

TEST_CASE("from_edges basics and id mapping") {
    Graph g = ts::make_graph({{10, 20}, {20, 30}, {10, 30}});
    CHECK(g.live_node_count() == 3);
    CHECK(g.live_edge_count() == 3);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const OriginalId orig = g.original_id(u);
        REQUIRE(g.internal_id(orig).has_value());
        CHECK(*g.internal_id(orig) == u);
    }
    CHECK_FALSE(g.internal_id(99).has_value());
}

TEST_CASE("duplicate and reversed edges merge") {
    Graph g = ts::make_graph({{1, 2}, {2, 1}, {1, 2}, {2, 3}});
    CHECK(g.live_edge_count() == 2);
    CHECK(g.live_node_count() == 3);
}

TEST_CASE("self-loops are rejected by from_edges") {
    CHECK_THROWS_AS(ts::make_graph({{1, 1}}), std::invalid_argument);
}

TEST_CASE("labels are sorted by degree, ties by original id") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = ts::random_graph(seed);
        for (NodeId u = 0; u + 1 < g.node_count(); ++u) {
            const bool deg_ok = g.degree(u) < g.degree(u + 1);
            const bool tie_ok = g.degree(u) == g.degree(u + 1) &&
                                g.original_id(u) < g.original_id(u + 1);
            CHECK((deg_ok || tie_ok));
        }
    }
}

TEST_CASE("edge ids follow lexicographic original pairs") {
    Graph g = ts::make_graph({{5, 9}, {1, 7}, {1, 3}, {2, 8}});
    std::vector<std::pair<OriginalId, OriginalId>> order;
    for (EdgeId e = 0; e < g.edge_slot_count(); ++e) order.push_back(g.edge_original(e));
    CHECK(std::is_sorted(order.begin(), order.end()));
}

TEST_CASE("parse_edge_list handles comments, whitespace, and duplicates") {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "0\t1\n"
        "1 0\n"
        "  2   3  \n"
        "3 3\n");
    Graph g = parse_edge_list(in);
    CHECK(g.live_node_count() == 4);
    CHECK(g.live_edge_count() == 2);
    CHECK(g.internal_id(3).has_value()); // self-loop dropped, node kept
}

TEST_CASE("parse_edge_list reports the offending line") {
    std::istringstream in("0 1\n0 1 2\n");
    try {
        parse_edge_list(in);
        FAIL("expected DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::istringstream bad("0 x\n");
    CHECK_THROWS_AS(parse_edge_list(bad), DataError);

    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_edge_list(empty), DataError);
}

TEST_CASE("load_edge_list rejects missing files") {
    CHECK_THROWS_AS(load_edge_list("/nonexistent/file.txt"), DataError);
}

TEST_CASE("node removal tombstones incident edges") {
    Graph g = ts::bowtie();
    const NodeId center = *g.internal_id(2);
    CHECK(g.degree(center) == 4);
    g.remove_node(center);
    CHECK_FALSE(g.node_live(center));
    CHECK(g.degree(center) == 0);
    CHECK(g.live_node_count() == 4);
    CHECK(g.live_edge_count() == 2); // the two wing edges survive
    CHECK_THROWS_AS(g.remove_node(center), std::invalid_argument);
    for (const auto& h : g.neighbors(center)) CHECK_FALSE(g.edge_live(h.edge));
}

TEST_CASE("edge removal decrements both endpoint degrees") {
    Graph g = ts::complete(4);
    const NodeId a = *g.internal_id(0), b = *g.internal_id(1);
    const auto e = g.find_edge(a, b);
    REQUIRE(e.has_value());
    const auto da = g.degree(a), db = g.degree(b);
    g.remove_edge(*e);
    CHECK(g.degree(a) == da - 1);
    CHECK(g.degree(b) == db - 1);
    CHECK_FALSE(g.edge_live(*e));
    CHECK(g.live_edge_count() == 5);
    CHECK_THROWS_AS(g.remove_edge(*e), std::invalid_argument);
}

TEST_CASE("common_neighbors sees only live structure") {
    Graph g = ts::bowtie();
    const NodeId n0 = *g.internal_id(0), n1 = *g.internal_id(1);
    auto common = g.common_neighbors(n0, n1);
    REQUIRE(common.size() == 1);
    CHECK(g.original_id(common[0]) == 2);

    auto with_edges = g.common_neighbors_with_edges(n0, n1);
    REQUIRE(with_edges.size() == 1);
    const auto [w, e_uw, e_vw] = with_edges[0];
    CHECK(w == common[0]);
    CHECK(g.edge_key(e_uw).lo == std::min(n0, w));
    CHECK(g.edge_key(e_vw).lo == std::min(n1, w));

    g.remove_node(common[0]);
    CHECK(g.common_neighbors(n0, n1).empty());
}

TEST_CASE("serialize round-trips through the parser") {
    Graph g = ts::petersen();
    std::ostringstream out;
    g.serialize(out);
    std::istringstream in(out.str());
    Graph back = parse_edge_list(in);
    CHECK(back.live_node_count() == g.live_node_count());
    CHECK(back.live_edge_count() == g.live_edge_count());
}

TEST_CASE("relabeled_by_degree rebuilds the live subgraph") {
    Graph g = ts::complete(5);
    g.remove_node(*g.internal_id(0));
    g.remove_edge(EdgeKey{std::min(*g.internal_id(1), *g.internal_id(2)),
                          std::max(*g.internal_id(1), *g.internal_id(2))});
    Graph h = relabeled_by_degree(g);
    CHECK(h.node_count() == 4);
    CHECK(h.live_edge_count() == g.live_edge_count());
    for (NodeId u = 0; u + 1 < h.node_count(); ++u)
        CHECK(h.degree(u) <= h.degree(u + 1));
    // Original ids carry over.
    CHECK_FALSE(h.internal_id(0).has_value());
    CHECK(h.internal_id(4).has_value());
}

TEST_CASE("empty input yields DataError, isolated nodes are allowed") {
    CHECK_THROWS_AS(Graph::from_edges({}, {}), DataError);
    Graph g = Graph::from_edges({7}, {});
    CHECK(g.live_node_count() == 1);
    CHECK(g.live_edge_count() == 0);
    CHECK(g.degree(0) == 0);
}
