#include <tribreak/graph.hpp>

#include <tribreak/errors.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace tribreak {

namespace {

std::pair<OriginalId, OriginalId> canonical(OriginalId a, OriginalId b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

} // namespace

Graph Graph::from_edges(const std::vector<OriginalId>& nodes,
                        const std::vector<std::pair<OriginalId, OriginalId>>& edges) {
    // Canonicalize and dedupe edges in original-id space. The sorted order
    // doubles as the edge-id assignment order (lexicographic on (lo, hi)).
    std::vector<std::pair<OriginalId, OriginalId>> canon;
    canon.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("from_edges: self-loop " + std::to_string(a));
        }
        canon.push_back(canonical(a, b));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    std::vector<OriginalId> ids = nodes;
    for (const auto& [a, b] : canon) {
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) {
        throw DataError("graph has no nodes");
    }

    std::unordered_map<OriginalId, std::uint32_t> deg;
    deg.reserve(ids.size());
    for (const auto& [a, b] : canon) {
        ++deg[a];
        ++deg[b];
    }

    // Degree-ordered labels: ascending (degree, original id).
    std::stable_sort(ids.begin(), ids.end(), [&](OriginalId a, OriginalId b) {
        std::uint32_t da = deg.count(a) ? deg.at(a) : 0;
        std::uint32_t db = deg.count(b) ? deg.at(b) : 0;
        if (da != db) return da < db;
        return a < b;
    });

    Graph g;
    g.to_original_ = ids;
    g.to_internal_.reserve(ids.size());
    for (NodeId u = 0; u < ids.size(); ++u) {
        g.to_internal_.emplace(ids[u], u);
    }

    g.adj_.resize(ids.size());
    g.degree_.assign(ids.size(), 0);
    g.node_dead_.assign(ids.size(), 0);
    g.edge_dead_.assign(canon.size(), 0);
    g.edge_keys_.reserve(canon.size());
    g.live_nodes_ = ids.size();
    g.live_edges_ = canon.size();

    for (EdgeId e = 0; e < canon.size(); ++e) {
        NodeId u = g.to_internal_.at(canon[e].first);
        NodeId v = g.to_internal_.at(canon[e].second);
        EdgeKey key = u < v ? EdgeKey{u, v} : EdgeKey{v, u};
        g.edge_keys_.push_back(key);
        g.adj_[u].push_back({v, e});
        g.adj_[v].push_back({u, e});
        ++g.degree_[u];
        ++g.degree_[v];
    }
    for (auto& slots : g.adj_) {
        std::sort(slots.begin(), slots.end(),
                  [](const HalfEdge& a, const HalfEdge& b) { return a.to < b.to; });
    }
    return g;
}

std::pair<OriginalId, OriginalId> Graph::edge_original(EdgeId e) const {
    const EdgeKey& k = edge_keys_[e];
    return canonical(to_original_[k.lo], to_original_[k.hi]);
}

std::optional<NodeId> Graph::internal_id(OriginalId id) const {
    auto it = to_internal_.find(id);
    if (it == to_internal_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
    if (u >= adj_.size() || v >= adj_.size() || u == v) return std::nullopt;
    if (adj_[u].size() > adj_[v].size()) std::swap(u, v);
    const auto& slots = adj_[u];
    auto it = std::lower_bound(slots.begin(), slots.end(), v,
                               [](const HalfEdge& h, NodeId x) { return h.to < x; });
    if (it == slots.end() || it->to != v) return std::nullopt;
    return it->edge;
}

void Graph::remove_node(NodeId u) {
    if (u >= adj_.size() || node_dead_[u]) {
        throw std::invalid_argument("remove_node: node absent or already removed");
    }
    for (const HalfEdge& h : adj_[u]) {
        if (edge_dead_[h.edge]) continue;
        edge_dead_[h.edge] = 1;
        --degree_[h.to];
        --live_edges_;
    }
    node_dead_[u] = 1;
    degree_[u] = 0;
    --live_nodes_;
}

void Graph::remove_edge(EdgeId e) {
    if (e >= edge_keys_.size() || edge_dead_[e]) {
        throw std::invalid_argument("remove_edge: edge absent or already removed");
    }
    edge_dead_[e] = 1;
    --degree_[edge_keys_[e].lo];
    --degree_[edge_keys_[e].hi];
    --live_edges_;
}

void Graph::remove_edge(const EdgeKey& key) {
    auto e = find_edge(key.lo, key.hi);
    if (!e) {
        throw std::invalid_argument("remove_edge: no such edge");
    }
    remove_edge(*e);
}

std::vector<NodeId> Graph::common_neighbors(NodeId u, NodeId v) const {
    std::vector<NodeId> out;
    for (const auto& [w, eu, ev] : common_neighbors_with_edges(u, v)) {
        out.push_back(w);
    }
    return out;
}

std::vector<std::tuple<NodeId, EdgeId, EdgeId>>
Graph::common_neighbors_with_edges(NodeId u, NodeId v) const {
    std::vector<std::tuple<NodeId, EdgeId, EdgeId>> out;
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (edge_dead_[a[i].edge]) { ++i; continue; }
        if (edge_dead_[b[j].edge]) { ++j; continue; }
        if (a[i].to < b[j].to) {
            ++i;
        } else if (a[i].to > b[j].to) {
            ++j;
        } else {
            out.emplace_back(a[i].to, a[i].edge, b[j].edge);
            ++i;
            ++j;
        }
    }
    return out;
}

void Graph::serialize(std::ostream& out) const {
    out << "# Undirected graph: " << live_node_count() << " nodes, "
        << live_edge_count() << " edges\n";
    std::vector<std::pair<OriginalId, OriginalId>> lines;
    lines.reserve(live_edges_);
    for (EdgeId e = 0; e < edge_keys_.size(); ++e) {
        if (!edge_dead_[e]) lines.push_back(edge_original(e));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) {
        out << a << '\t' << b << '\n';
    }
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    std::vector<OriginalId> loop_nodes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        OriginalId vals[2];
        const char* p = line.data() + start;
        const char* end = line.data() + line.size();
        int tokens = 0;
        while (p < end) {
            while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
            if (p == end) break;
            if (tokens == 2) {
                throw DataError("line " + std::to_string(lineno) + ": expected two integers");
            }
            OriginalId v = 0;
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc{} ||
                (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
                throw DataError("line " + std::to_string(lineno) + ": expected two integers");
            }
            vals[tokens++] = v;
            p = next;
        }
        if (tokens != 2) {
            throw DataError("line " + std::to_string(lineno) + ": expected two integers");
        }
        if (vals[0] == vals[1]) {
            loop_nodes.push_back(vals[0]);
        } else {
            edges.emplace_back(vals[0], vals[1]);
        }
    }
    if (edges.empty() && loop_nodes.empty()) {
        throw DataError("graph has no nodes");
    }
    return Graph::from_edges(loop_nodes, edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path);
    }
    return parse_edge_list(in);
}

Graph relabeled_by_degree(const Graph& g) {
    std::vector<OriginalId> nodes;
    nodes.reserve(g.live_node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.node_live(u)) nodes.push_back(g.original_id(u));
    }
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    edges.reserve(g.live_edge_count());
    for (EdgeId e = 0; e < g.edge_slot_count(); ++e) {
        if (g.edge_live(e)) edges.push_back(g.edge_original(e));
    }
    return Graph::from_edges(nodes, edges);
}

} // namespace tribreak
