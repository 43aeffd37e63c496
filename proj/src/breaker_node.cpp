#include <tribreak/breaker_node.hpp>

#include <tribreak/decrement_max_queue.hpp>
#include <tribreak/discount.hpp>
#include <tribreak/errors.hpp>
#include <tribreak/triangle_index.hpp>

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace tribreak {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Core discounting loop. Runs until `done(plan)` is true or every node has
// been selected.
RemovalPlan run_discounting(const Graph& g,
                            const std::function<bool(const RemovalPlan&)>& done,
                            const NodeStepObserver& observer,
                            PhaseTimings* timings) {
    Graph work = g;
    auto t0 = Clock::now();
    TriangleIndex idx = count_forward(work);
    if (timings) timings->count_ms = ms_since(t0);

    t0 = Clock::now();
    RemovalPlan plan;
    plan.kind = ElementKind::node;
    plan.total_triangles_initial = idx.total;

    DecrementMaxQueue queue(idx.per_node);
    DiscountScratch scratch;
    std::size_t step = 0;
    while (!done(plan) && !queue.empty()) {
        auto [u, score] = queue.pop_max();
        std::int64_t gain = discount_remove_node(
            work, idx.per_node, u, scratch,
            [&](NodeId x) { queue.decrement(x); });
        assert(gain == score);
        (void)score;
        plan.selected_nodes.push_back(work.original_id(u));
        plan.gains.push_back(gain);
        plan.cumulative.push_back(plan.broken() + gain);
        if (observer) observer(step, work, idx.per_node);
        ++step;
    }
    if (timings) timings->select_ms = ms_since(t0);
    return plan;
}

} // namespace

RemovalPlan break_nodes_discounting(const Graph& g, std::size_t k,
                                    const NodeStepObserver& observer,
                                    PhaseTimings* timings) {
    if (k < 1 || k > g.live_node_count()) {
        throw std::invalid_argument("break_nodes_discounting: k out of range");
    }
    return run_discounting(
        g, [k](const RemovalPlan& p) { return p.size() >= k; }, observer, timings);
}

RemovalPlan break_nodes_greedy_recount(const Graph& g, std::size_t k) {
    if (k < 1 || k > g.live_node_count()) {
        throw std::invalid_argument("break_nodes_greedy_recount: k out of range");
    }
    Graph work = g;
    RemovalPlan plan;
    plan.kind = ElementKind::node;
    plan.total_triangles_initial = count_forward(work).total;
    for (std::size_t step = 0; step < k; ++step) {
        TriangleIndex idx = count_forward(work);
        NodeId best = 0;
        std::int64_t best_gain = -1;
        for (NodeId u = 0; u < work.node_count(); ++u) {
            if (!work.node_live(u)) continue;
            if (idx.per_node[u] > best_gain) {
                best = u;
                best_gain = idx.per_node[u];
            }
        }
        work.remove_node(best);
        plan.selected_nodes.push_back(work.original_id(best));
        plan.gains.push_back(best_gain);
        plan.cumulative.push_back(plan.broken() + best_gain);
    }
    return plan;
}

RemovalPlan break_nodes_min(const Graph& g, std::int64_t p, PhaseTimings* timings) {
    if (p <= 0) {
        throw std::invalid_argument("break_nodes_min: p must be positive");
    }
    std::int64_t total = count_forward(g).total;
    if (p > total) {
        throw InfeasibleError("break_nodes_min: p=" + std::to_string(p) +
                              " exceeds the triangle total " + std::to_string(total));
    }
    return run_discounting(
        g, [p](const RemovalPlan& plan) { return plan.broken() >= p; }, {}, timings);
}

BoundReport bound_nodes(const Graph& g, const RemovalPlan& plan) {
    if (plan.kind != ElementKind::node || !plan.selected_edges.empty()) {
        throw DataError("bound_nodes: plan is not a node plan");
    }
    Graph work = g;
    std::int64_t total0 = count_forward(work).total;
    if (plan.total_triangles_initial != total0) {
        throw DataError("bound_nodes: plan does not match this graph");
    }
    for (OriginalId id : plan.selected_nodes) {
        auto u = work.internal_id(id);
        if (!u || !work.node_live(*u)) {
            throw DataError("bound_nodes: plan node " + std::to_string(id) +
                            " absent or removed twice");
        }
        work.remove_node(*u);
    }
    TriangleIndex idx = count_forward(work);

    BoundReport report;
    report.objective = total0 - idx.total;

    std::vector<std::int64_t> residual;
    residual.reserve(work.live_node_count());
    for (NodeId u = 0; u < work.node_count(); ++u) {
        if (work.node_live(u)) residual.push_back(idx.per_node[u]);
    }
    std::size_t k = std::min(plan.selected_nodes.size(), residual.size());
    std::partial_sort(residual.begin(), residual.begin() + k, residual.end(),
                      std::greater<>());
    report.upper_bound = report.objective;
    for (std::size_t i = 0; i < k; ++i) report.upper_bound += residual[i];
    report.ratio = report.upper_bound > 0
                       ? static_cast<double>(report.objective) / report.upper_bound
                       : 1.0;
    return report;
}

} // namespace tribreak
