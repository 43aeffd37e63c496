#ifndef TRIBREAK_BASELINES_HPP
#define TRIBREAK_BASELINES_HPP

#include <tribreak/graph.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace tribreak {

/** Power-iteration settings. Defaults are the conventional ones. */
struct PageRankConfig {
    double damping = 0.85;
    std::size_t max_iters = 200;
    double tolerance = 1e-10; // L1 change between iterations
};

struct PageRankResult {
    std::vector<double> scores; // by internal label; dead nodes hold 0
    bool converged = false;
    std::size_t iterations = 0;
};

/**
 * PageRank on the live subgraph, each undirected edge acting as two directed
 * ones. Dangling (isolated) nodes spread their mass uniformly. Scores over
 * live nodes sum to 1.
 */
PageRankResult pagerank(const Graph& g, const PageRankConfig& cfg = {});

/**
 * Static centrality and random baselines. Rankings are computed once on the
 * intact graph (no re-ranking between removals). Node ties break by smallest
 * original id; edge ties lexicographically on the canonical (lo, hi)
 * original-id pair. Edge scores are the sum of the endpoint node scores.
 * All throw std::invalid_argument when k exceeds the live element count.
 */
std::vector<OriginalId> max_degree_nodes(const Graph& g, std::size_t k);
std::vector<OriginalId> pagerank_nodes(const Graph& g, std::size_t k,
                                       const PageRankConfig& cfg = {},
                                       bool* converged = nullptr);
/** Uniform sample without replacement; reproducible from the seed. */
std::vector<OriginalId> random_nodes(const Graph& g, std::size_t k, std::uint64_t seed);

std::vector<std::pair<OriginalId, OriginalId>>
max_degree_edges(const Graph& g, std::size_t k);
std::vector<std::pair<OriginalId, OriginalId>>
pagerank_edges(const Graph& g, std::size_t k, const PageRankConfig& cfg = {},
               bool* converged = nullptr);
std::vector<std::pair<OriginalId, OriginalId>>
random_edges(const Graph& g, std::size_t k, std::uint64_t seed);

/** Broken-triangle score of an arbitrary removal set. */
struct EvalResult {
    std::int64_t broken = 0;               // triangle total before minus after
    std::vector<std::int64_t> cumulative;  // after each sequential removal
};

/**
 * Score a node/edge set fairly: remove the elements in the given order on a
 * scratch copy, tracking the per-step cumulative broken count, and recount at
 * the end. Throws DataError on unknown or repeated elements.
 */
EvalResult evaluate_node_set(const Graph& g, const std::vector<OriginalId>& nodes);
EvalResult evaluate_edge_set(const Graph& g,
                             const std::vector<std::pair<OriginalId, OriginalId>>& edges);

} // namespace tribreak

#endif
