#ifndef TRIBREAK_PLAN_HPP
#define TRIBREAK_PLAN_HPP

#include <tribreak/graph.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace tribreak {

enum class ElementKind { node, edge };

/**
 * Result of a removal strategy. Exactly one of selected_nodes /
 * selected_edges is populated, per kind; both use original ids (edges as
 * canonical (min, max) pairs). gains[i] is the number of triangles the i-th
 * removal broke on the residual graph; cumulative is its prefix sum. For
 * greedy strategies gains are non-increasing and cumulative never exceeds
 * total_triangles_initial.
 */
struct RemovalPlan {
    ElementKind kind = ElementKind::node;
    std::vector<OriginalId> selected_nodes;
    std::vector<std::pair<OriginalId, OriginalId>> selected_edges;
    std::vector<std::int64_t> gains;
    std::vector<std::int64_t> cumulative;
    std::int64_t total_triangles_initial = 0;

    std::size_t size() const { return gains.size(); }
    std::int64_t broken() const { return cumulative.empty() ? 0 : cumulative.back(); }
};

/**
 * Per-run optimality certificate. upper_bound = objective plus the sum of the
 * top-k residual marginal gains on the post-removal graph; by submodularity
 * no k-element solution can beat upper_bound, so the realized objective is at
 * least ratio * OPT. ratio = objective / upper_bound, in (0, 1]; defined as
 * 1.0 when upper_bound is 0 (triangle-free input, vacuous certificate).
 */
struct BoundReport {
    std::int64_t objective = 0;
    std::int64_t upper_bound = 0;
    double ratio = 1.0;
};

/** Wall-clock split of a breaker run: counting pass vs selection loop. */
struct PhaseTimings {
    double count_ms = 0.0;
    double select_ms = 0.0;
};

} // namespace tribreak

#endif
