#ifndef TRIBREAK_DISCOUNT_HPP
#define TRIBREAK_DISCOUNT_HPP

#include <tribreak/graph.hpp>

#include <cstdint>
#include <vector>

namespace tribreak {

/**
 * Reusable workspace for the discount steps; avoids an O(n) allocation per
 * removal. One instance per running loop, sized lazily to the graph.
 */
struct DiscountScratch {
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    std::vector<NodeId> nbrs;

    void reset(std::size_t n) {
        if (stamp.size() < n) stamp.assign(n, 0);
    }
};

/**
 * Tombstone node u and update per-node triangle counts in place: every live
 * triangle through u loses one triangle at each of its two other corners.
 * Pairs (v, w) are enumerated unordered (w > v within u's neighborhood), so
 * each corner is decremented exactly once per triangle. on_changed(x) fires
 * after each single decrement of counts[x]; use it to mirror the change into
 * a priority queue. Returns the number of triangles broken (== counts[u] on
 * entry). Cost O(sum of live degrees over u's neighborhood).
 */
template <typename OnChanged>
std::int64_t discount_remove_node(Graph& g, std::vector<std::int64_t>& counts,
                                  NodeId u, DiscountScratch& scratch,
                                  OnChanged&& on_changed) {
    scratch.reset(g.node_count());
    ++scratch.epoch;
    scratch.nbrs.clear();
    for (const HalfEdge& h : g.neighbors(u)) {
        if (!g.edge_live(h.edge)) continue;
        scratch.nbrs.push_back(h.to);
        scratch.stamp[h.to] = scratch.epoch;
    }
    g.remove_node(u);

    std::int64_t broken = 0;
    for (NodeId v : scratch.nbrs) {
        for (const HalfEdge& h : g.neighbors(v)) {
            if (!g.edge_live(h.edge) || h.to <= v) continue;
            if (scratch.stamp[h.to] != scratch.epoch) continue;
            ++broken;
            --counts[v];
            on_changed(v);
            --counts[h.to];
            on_changed(h.to);
        }
    }
    counts[u] = 0;
    return broken;
}

inline std::int64_t discount_remove_node(Graph& g, std::vector<std::int64_t>& counts,
                                         NodeId u, DiscountScratch& scratch) {
    return discount_remove_node(g, counts, u, scratch, [](NodeId) {});
}

/**
 * Tombstone edge e and update per-edge triangle counts in place: every live
 * triangle through e loses one triangle at each of its two other edges (this
 * update needs no pair-ordering care; the two side edges are distinct).
 * Returns the number of triangles broken (== counts[e] on entry).
 */
template <typename OnChanged>
std::int64_t discount_remove_edge(Graph& g, std::vector<std::int64_t>& counts,
                                  EdgeId e, OnChanged&& on_changed) {
    const auto [u, v] = g.edge_key(e);
    auto commons = g.common_neighbors_with_edges(u, v);
    g.remove_edge(e);
    for (const auto& [w, e_uw, e_vw] : commons) {
        --counts[e_uw];
        on_changed(e_uw);
        --counts[e_vw];
        on_changed(e_vw);
    }
    counts[e] = 0;
    return static_cast<std::int64_t>(commons.size());
}

inline std::int64_t discount_remove_edge(Graph& g, std::vector<std::int64_t>& counts,
                                         EdgeId e) {
    return discount_remove_edge(g, counts, e, [](EdgeId) {});
}

} // namespace tribreak

#endif
