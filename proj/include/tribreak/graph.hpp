#ifndef TRIBREAK_GRAPH_HPP
#define TRIBREAK_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tribreak {

using NodeId = std::uint32_t;     // dense internal label, 0..n-1
using EdgeId = std::uint32_t;     // dense edge slot, 0..m0-1
using OriginalId = std::uint64_t; // node id as it appeared in the input

/** Canonical internal edge endpoints, lo < hi. */
struct EdgeKey {
    NodeId lo;
    NodeId hi;

    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/** One adjacency slot: neighbor label plus the id of the connecting edge. */
struct HalfEdge {
    NodeId to;
    EdgeId edge;
};

/**
 * Undirected simple graph with tombstone removal.
 *
 * Internal labels are assigned so that label(u) < label(v) implies
 * degree(u) <= degree(v) at construction time, ties broken by original id
 * (stable). Removals only mark nodes/edges dead; adjacency is never
 * compacted, so iteration must skip dead slots (edge_live()). A dead node
 * has all incident edges dead, hence checking edge liveness alone is enough
 * when scanning adjacency.
 *
 * Edge ids are assigned in lexicographic order of the canonical
 * (min, max) original-id pairs, which downstream code uses as the
 * deterministic edge tie-break.
 */
class Graph {
public:
    /**
     * Build from explicit node universe and undirected edges in original ids.
     * Self-loops are rejected here (the parser drops them before calling);
     * duplicate pairs are merged. Nodes listed but not covered by any edge
     * stay isolated.
     */
    static Graph from_edges(const std::vector<OriginalId>& nodes,
                            const std::vector<std::pair<OriginalId, OriginalId>>& edges);

    /** Number of internal labels, dead or alive. */
    std::size_t node_count() const { return adj_.size(); }
    /** Number of live nodes. */
    std::size_t live_node_count() const { return live_nodes_; }
    /** Number of edge slots, dead or alive. */
    std::size_t edge_slot_count() const { return edge_keys_.size(); }
    /** Number of live edges (m). */
    std::size_t live_edge_count() const { return live_edges_; }

    bool node_live(NodeId u) const { return !node_dead_[u]; }
    bool edge_live(EdgeId e) const { return !edge_dead_[e]; }

    /** Live degree of u (0 once u is removed). */
    std::uint32_t degree(NodeId u) const { return degree_[u]; }

    /** All adjacency slots of u, including dead ones; filter with edge_live(). */
    std::span<const HalfEdge> neighbors(NodeId u) const {
        return {adj_[u].data(), adj_[u].size()};
    }

    EdgeKey edge_key(EdgeId e) const { return edge_keys_[e]; }

    /** Canonical (min, max) original-id pair of an edge. */
    std::pair<OriginalId, OriginalId> edge_original(EdgeId e) const;

    OriginalId original_id(NodeId u) const { return to_original_[u]; }
    std::optional<NodeId> internal_id(OriginalId id) const;

    /** Edge id connecting u and v, if such an edge slot exists (live or dead). */
    std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;

    /**
     * Tombstone a live node and all its live incident edges.
     * Throws std::invalid_argument if u is out of range or already removed.
     */
    void remove_node(NodeId u);

    /**
     * Tombstone a live edge and decrement both endpoint degrees.
     * Throws std::invalid_argument if e is out of range or already removed.
     */
    void remove_edge(EdgeId e);
    void remove_edge(const EdgeKey& key);

    /** Sorted labels w adjacent to both u and v through live edges. */
    std::vector<NodeId> common_neighbors(NodeId u, NodeId v) const;

    /**
     * Like common_neighbors but also yields the connecting edge ids:
     * tuples (w, edge(u,w), edge(v,w)).
     */
    std::vector<std::tuple<NodeId, EdgeId, EdgeId>>
    common_neighbors_with_edges(NodeId u, NodeId v) const;

    /** Live edges as "lo hi" lines in original ids, plus a '#' header. */
    void serialize(std::ostream& out) const;

private:
    std::vector<std::vector<HalfEdge>> adj_;
    std::vector<std::uint32_t> degree_;
    std::vector<std::uint8_t> node_dead_;
    std::vector<std::uint8_t> edge_dead_;
    std::vector<EdgeKey> edge_keys_;
    std::vector<OriginalId> to_original_;
    std::unordered_map<OriginalId, NodeId> to_internal_;
    std::size_t live_nodes_ = 0;
    std::size_t live_edges_ = 0;
};

/**
 * Parse SNAP-style edge-list text: lines "u v" (any whitespace), '#' comment
 * lines, blank lines ignored. Directed duplicates merge into one undirected
 * edge; self-loops are dropped but still register their node id. Node ids may
 * be arbitrary non-negative 64-bit integers.
 *
 * Throws DataError with a 1-based line number on malformed lines and when the
 * input contains no nodes at all.
 */
Graph parse_edge_list(std::istream& in);

/** parse_edge_list on a file path; DataError if the file cannot be opened. */
Graph load_edge_list(const std::string& path);

/**
 * Rebuild the live subgraph with fresh degree-ordered labels (removals make
 * the original labeling drift from the live degrees). Original ids carry over.
 */
Graph relabeled_by_degree(const Graph& g);

} // namespace tribreak

#endif
