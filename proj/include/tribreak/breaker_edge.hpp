#ifndef TRIBREAK_BREAKER_EDGE_HPP
#define TRIBREAK_BREAKER_EDGE_HPP

#include <tribreak/graph.hpp>
#include <tribreak/plan.hpp>

#include <cstdint>
#include <functional>

namespace tribreak {

/**
 * Called after every selection step with the step index (0-based), the
 * current tombstoned graph, and the maintained per-edge triangle counts
 * (indexed by edge id).
 */
using EdgeStepObserver =
    std::function<void(std::size_t, const Graph&, const std::vector<std::int64_t>&)>;

/**
 * Greedy edge selection with discounting updates: count per-edge triangle
 * participation once, then k times pop the edge with the maximal residual
 * count, tombstone it, and decrement the two side edges of every triangle it
 * broke. Ties broken by smallest edge id, i.e. lexicographic on the canonical
 * (lo, hi) original-id pair. O(m^{3/2} + k*n) total. Throws
 * std::invalid_argument unless 1 <= k <= live edge count.
 */
RemovalPlan break_edges_discounting(const Graph& g, std::size_t k,
                                    const EdgeStepObserver& observer = {},
                                    PhaseTimings* timings = nullptr);

/** Recount-every-round reference greedy; same plans as the discounting run. */
RemovalPlan break_edges_greedy_recount(const Graph& g, std::size_t k);

/**
 * Smallest greedy prefix that breaks at least p triangles. Throws
 * std::invalid_argument for p <= 0 and InfeasibleError when p exceeds the
 * graph's triangle total.
 */
RemovalPlan break_edges_min(const Graph& g, std::int64_t p,
                            PhaseTimings* timings = nullptr);

/**
 * Per-run optimality certificate for a finished edge plan; mirrors
 * bound_nodes with residual per-edge counts.
 */
BoundReport bound_edges(const Graph& g, const RemovalPlan& plan);

} // namespace tribreak

#endif
