#include <tribreak/triangle_index.hpp>

#include <algorithm>

namespace tribreak {

namespace {

struct Acc {
    NodeId to;
    EdgeId edge;
};

// Accumulator arrays stay sorted descending because labels are processed
// from high to low; intersection is a plain merge.
template <typename OnTriangle>
void forward_scan(const Graph& g, OnTriangle&& on_triangle) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<Acc>> acc(n);
    for (std::size_t ui = n; ui-- > 0;) {
        const NodeId u = static_cast<NodeId>(ui);
        if (!g.node_live(u)) continue;
        for (const HalfEdge& h : g.neighbors(u)) {
            if (!g.edge_live(h.edge) || h.to >= u) continue;
            const NodeId v = h.to;
            const auto& au = acc[u];
            const auto& av = acc[v];
            std::size_t i = 0, j = 0;
            while (i < au.size() && j < av.size()) {
                if (au[i].to > av[j].to) {
                    ++i;
                } else if (au[i].to < av[j].to) {
                    ++j;
                } else {
                    on_triangle(v, u, au[i].to, h.edge, au[i].edge, av[j].edge);
                    ++i;
                    ++j;
                }
            }
            acc[v].push_back({u, h.edge});
        }
    }
}

} // namespace

TriangleIndex count_forward(const Graph& g) {
    TriangleIndex idx;
    idx.per_node.assign(g.node_count(), 0);
    idx.per_edge.assign(g.edge_slot_count(), 0);
    forward_scan(g, [&](NodeId v, NodeId u, NodeId w,
                        EdgeId e_uv, EdgeId e_uw, EdgeId e_vw) {
        ++idx.total;
        ++idx.per_node[v];
        ++idx.per_node[u];
        ++idx.per_node[w];
        ++idx.per_edge[e_uv];
        ++idx.per_edge[e_uw];
        ++idx.per_edge[e_vw];
    });
    return idx;
}

TriangleIndex count_naive(const Graph& g) {
    TriangleIndex idx;
    const std::size_t n = g.node_count();
    idx.per_node.assign(n, 0);
    idx.per_edge.assign(g.edge_slot_count(), 0);
    for (EdgeId e = 0; e < g.edge_slot_count(); ++e) {
        if (!g.edge_live(e)) continue;
        const auto [u, v] = g.edge_key(e);
        for (NodeId w = v + 1; w < n; ++w) {
            auto uw = g.find_edge(u, w);
            if (!uw || !g.edge_live(*uw)) continue;
            auto vw = g.find_edge(v, w);
            if (!vw || !g.edge_live(*vw)) continue;
            ++idx.total;
            ++idx.per_node[u];
            ++idx.per_node[v];
            ++idx.per_node[w];
            ++idx.per_edge[e];
            ++idx.per_edge[*uw];
            ++idx.per_edge[*vw];
        }
    }
    return idx;
}

std::vector<Triple> list_triangles(const Graph& g) {
    std::vector<Triple> out;
    forward_scan(g, [&](NodeId v, NodeId u, NodeId w, EdgeId, EdgeId, EdgeId) {
        out.push_back({v, u, w});
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tribreak
