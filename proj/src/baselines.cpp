#include <tribreak/baselines.hpp>

#include <tribreak/discount.hpp>
#include <tribreak/errors.hpp>
#include <tribreak/triangle_index.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>

namespace tribreak {

namespace {

// Uniform integer in [0, bound) by rejection; std::uniform_int_distribution
// is implementation-defined, which would break cross-platform reproducibility.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::vector<OriginalId> live_original_ids(const Graph& g) {
    std::vector<OriginalId> ids;
    ids.reserve(g.live_node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.node_live(u)) ids.push_back(g.original_id(u));
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::pair<OriginalId, OriginalId>> live_original_edges(const Graph& g) {
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    edges.reserve(g.live_edge_count());
    for (EdgeId e = 0; e < g.edge_slot_count(); ++e) {
        if (g.edge_live(e)) edges.push_back(g.edge_original(e));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Top-k original ids by (score desc, original id asc).
std::vector<OriginalId> top_nodes_by(const Graph& g,
                                     const std::vector<double>& score, std::size_t k) {
    if (k > g.live_node_count()) {
        throw std::invalid_argument("baseline: k exceeds live node count");
    }
    std::vector<NodeId> order;
    order.reserve(g.live_node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.node_live(u)) order.push_back(u);
    }
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (score[a] != score[b]) return score[a] > score[b];
        return g.original_id(a) < g.original_id(b);
    });
    std::vector<OriginalId> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(g.original_id(order[i]));
    return out;
}

std::vector<std::pair<OriginalId, OriginalId>>
top_edges_by(const Graph& g, const std::vector<double>& node_score, std::size_t k) {
    if (k > g.live_edge_count()) {
        throw std::invalid_argument("baseline: k exceeds live edge count");
    }
    std::vector<EdgeId> order;
    order.reserve(g.live_edge_count());
    for (EdgeId e = 0; e < g.edge_slot_count(); ++e) {
        if (g.edge_live(e)) order.push_back(e);
    }
    auto edge_score = [&](EdgeId e) {
        const auto key = g.edge_key(e);
        return node_score[key.lo] + node_score[key.hi];
    };
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        double sa = edge_score(a), sb = edge_score(b);
        if (sa != sb) return sa > sb;
        return g.edge_original(a) < g.edge_original(b);
    });
    std::vector<std::pair<OriginalId, OriginalId>> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(g.edge_original(order[i]));
    return out;
}

std::vector<double> degree_scores(const Graph& g) {
    std::vector<double> s(g.node_count(), 0.0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.node_live(u)) s[u] = g.degree(u);
    }
    return s;
}

} // namespace

PageRankResult pagerank(const Graph& g, const PageRankConfig& cfg) {
    if (cfg.damping <= 0.0 || cfg.damping >= 1.0) {
        throw std::invalid_argument("pagerank: damping must lie in (0,1)");
    }
    PageRankResult res;
    res.scores.assign(g.node_count(), 0.0);
    const std::size_t n_live = g.live_node_count();
    if (n_live == 0) return res;

    std::vector<NodeId> live;
    live.reserve(n_live);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.node_live(u)) live.push_back(u);
    }
    const double init = 1.0 / static_cast<double>(n_live);
    for (NodeId u : live) res.scores[u] = init;

    std::vector<double> next(g.node_count(), 0.0);
    for (res.iterations = 1; res.iterations <= cfg.max_iters; ++res.iterations) {
        double dangling = 0.0;
        for (NodeId u : live) {
            if (g.degree(u) == 0) dangling += res.scores[u];
        }
        const double base =
            (1.0 - cfg.damping) / n_live + cfg.damping * dangling / n_live;
        for (NodeId u : live) next[u] = base;
        for (NodeId u : live) {
            if (g.degree(u) == 0) continue;
            const double share = cfg.damping * res.scores[u] / g.degree(u);
            for (const HalfEdge& h : g.neighbors(u)) {
                if (g.edge_live(h.edge)) next[h.to] += share;
            }
        }
        double change = 0.0;
        for (NodeId u : live) change += std::abs(next[u] - res.scores[u]);
        for (NodeId u : live) res.scores[u] = next[u];
        if (change < cfg.tolerance) {
            res.converged = true;
            break;
        }
    }
    return res;
}

std::vector<OriginalId> max_degree_nodes(const Graph& g, std::size_t k) {
    return top_nodes_by(g, degree_scores(g), k);
}

std::vector<OriginalId> pagerank_nodes(const Graph& g, std::size_t k,
                                       const PageRankConfig& cfg, bool* converged) {
    PageRankResult pr = pagerank(g, cfg);
    if (converged) *converged = pr.converged;
    return top_nodes_by(g, pr.scores, k);
}

std::vector<OriginalId> random_nodes(const Graph& g, std::size_t k, std::uint64_t seed) {
    std::vector<OriginalId> pool = live_original_ids(g);
    if (k > pool.size()) {
        throw std::invalid_argument("random_nodes: k exceeds live node count");
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + uniform_below(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

std::vector<std::pair<OriginalId, OriginalId>>
max_degree_edges(const Graph& g, std::size_t k) {
    return top_edges_by(g, degree_scores(g), k);
}

std::vector<std::pair<OriginalId, OriginalId>>
pagerank_edges(const Graph& g, std::size_t k, const PageRankConfig& cfg,
               bool* converged) {
    PageRankResult pr = pagerank(g, cfg);
    if (converged) *converged = pr.converged;
    return top_edges_by(g, pr.scores, k);
}

std::vector<std::pair<OriginalId, OriginalId>>
random_edges(const Graph& g, std::size_t k, std::uint64_t seed) {
    auto pool = live_original_edges(g);
    if (k > pool.size()) {
        throw std::invalid_argument("random_edges: k exceeds live edge count");
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + uniform_below(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

EvalResult evaluate_node_set(const Graph& g, const std::vector<OriginalId>& nodes) {
    Graph work = g;
    TriangleIndex idx = count_forward(work);
    const std::int64_t total0 = idx.total;
    EvalResult res;
    DiscountScratch scratch;
    std::int64_t running = 0;
    for (OriginalId id : nodes) {
        auto u = work.internal_id(id);
        if (!u || !work.node_live(*u)) {
            throw DataError("evaluate_node_set: node " + std::to_string(id) +
                            " absent or repeated");
        }
        running += discount_remove_node(work, idx.per_node, *u, scratch);
        res.cumulative.push_back(running);
    }
    res.broken = total0 - count_forward(work).total;
    assert(res.broken == running);
    return res;
}

EvalResult evaluate_edge_set(const Graph& g,
                             const std::vector<std::pair<OriginalId, OriginalId>>& edges) {
    Graph work = g;
    TriangleIndex idx = count_forward(work);
    const std::int64_t total0 = idx.total;
    EvalResult res;
    std::int64_t running = 0;
    for (const auto& [a, b] : edges) {
        auto u = work.internal_id(a);
        auto v = work.internal_id(b);
        std::optional<EdgeId> e;
        if (u && v) e = work.find_edge(*u, *v);
        if (!e || !work.edge_live(*e)) {
            throw DataError("evaluate_edge_set: edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ") absent or repeated");
        }
        running += discount_remove_edge(work, idx.per_edge, *e);
        res.cumulative.push_back(running);
    }
    res.broken = total0 - count_forward(work).total;
    assert(res.broken == running);
    return res;
}

} // namespace tribreak
