#ifndef TRIBREAK_ORACLE_HPP
#define TRIBREAK_ORACLE_HPP

#include <tribreak/graph.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace tribreak {

/**
 * Exact optimum from exhaustive enumeration. Exactly one of best_nodes /
 * best_edges is populated. The reported set is the lexicographically first
 * optimal one (elements ordered by original id / canonical original pair).
 */
struct OptResult {
    std::vector<OriginalId> best_nodes;
    std::vector<std::pair<OriginalId, OriginalId>> best_edges;
    std::int64_t opt_value = 0;
};

/**
 * Maximum triangles breakable by any k live nodes, by subset enumeration
 * with an admissible standalone-count prune (prune=false runs the plain
 * enumeration; both give the same result, which tests verify). Refuses with
 * std::invalid_argument when C(n, k) exceeds 10^7 or k > n.
 */
OptResult brute_force_opt_nodes(const Graph& g, std::size_t k, bool prune = true);

/** Edge-set counterpart of brute_force_opt_nodes. */
OptResult brute_force_opt_edges(const Graph& g, std::size_t k, bool prune = true);

/**
 * Smallest node set breaking at least p triangles, by increasing-size
 * enumeration. Throws InfeasibleError when p exceeds the triangle total and
 * std::invalid_argument for p <= 0 or oversized instances.
 */
OptResult brute_force_min_break_nodes(const Graph& g, std::int64_t p);

/** Edge-set counterpart of brute_force_min_break_nodes. */
OptResult brute_force_min_break_edges(const Graph& g, std::int64_t p);

} // namespace tribreak

#endif
