#ifndef TRIBREAK_BREAKER_NODE_HPP
#define TRIBREAK_BREAKER_NODE_HPP

#include <tribreak/graph.hpp>
#include <tribreak/plan.hpp>

#include <cstdint>
#include <functional>

namespace tribreak {

/**
 * Called after every selection step with the step index (0-based), the
 * current tombstoned graph, and the maintained per-node triangle counts.
 * Verification hooks re-count the graph here and compare.
 */
using NodeStepObserver =
    std::function<void(std::size_t, const Graph&, const std::vector<std::int64_t>&)>;

/**
 * Greedy node selection with discounting updates: count triangles once
 * (counting phase), then k times pop the node with the maximal residual
 * count, tombstone it, and decrement the counts of the two other corners of
 * every triangle it broke (selection phase). Ties broken by smallest label.
 * O(m^{3/2} + k*m) total. Throws std::invalid_argument unless 1 <= k <= live
 * node count.
 */
RemovalPlan break_nodes_discounting(const Graph& g, std::size_t k,
                                    const NodeStepObserver& observer = {},
                                    PhaseTimings* timings = nullptr);

/**
 * Reference greedy that recounts the whole graph every round and picks the
 * argmax (same tie-break). Produces the same plan as the discounting version
 * on every input; exists for cross-checking. O(k * m^{3/2}).
 */
RemovalPlan break_nodes_greedy_recount(const Graph& g, std::size_t k);

/**
 * Smallest greedy prefix that breaks at least p triangles. Throws
 * std::invalid_argument for p <= 0 and InfeasibleError when p exceeds the
 * graph's triangle total.
 */
RemovalPlan break_nodes_min(const Graph& g, std::int64_t p,
                            PhaseTimings* timings = nullptr);

/**
 * Per-run optimality certificate for a finished node plan: replay the
 * removals on a fresh copy, recount, and add the top-|plan| residual per-node
 * counts to the realized objective. Throws DataError when the plan does not
 * fit the graph (unknown ids, duplicate removals, or a different triangle
 * total at start).
 */
BoundReport bound_nodes(const Graph& g, const RemovalPlan& plan);

} // namespace tribreak

#endif
