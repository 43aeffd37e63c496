#include <tribreak/breaker_edge.hpp>

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

RemovalPlan run_discounting(const Graph& g,
                            const std::function<bool(const RemovalPlan&)>& done,
                            const EdgeStepObserver& observer,
                            PhaseTimings* timings) {
    Graph work = g;
    auto t0 = Clock::now();
    TriangleIndex idx = count_forward(work);
    if (timings) timings->count_ms = ms_since(t0);

    t0 = Clock::now();
    RemovalPlan plan;
    plan.kind = ElementKind::edge;
    plan.total_triangles_initial = idx.total;

    DecrementMaxQueue queue(idx.per_edge);
    std::size_t step = 0;
    while (!done(plan) && !queue.empty()) {
        auto [e, score] = queue.pop_max();
        std::int64_t gain = discount_remove_edge(
            work, idx.per_edge, e, [&](EdgeId x) { queue.decrement(x); });
        assert(gain == score);
        (void)score;
        plan.selected_edges.push_back(work.edge_original(e));
        plan.gains.push_back(gain);
        plan.cumulative.push_back(plan.broken() + gain);
        if (observer) observer(step, work, idx.per_edge);
        ++step;
    }
    if (timings) timings->select_ms = ms_since(t0);
    return plan;
}

} // namespace

RemovalPlan break_edges_discounting(const Graph& g, std::size_t k,
                                    const EdgeStepObserver& observer,
                                    PhaseTimings* timings) {
    if (k < 1 || k > g.live_edge_count()) {
        throw std::invalid_argument("break_edges_discounting: k out of range");
    }
    return run_discounting(
        g, [k](const RemovalPlan& p) { return p.size() >= k; }, observer, timings);
}

RemovalPlan break_edges_greedy_recount(const Graph& g, std::size_t k) {
    if (k < 1 || k > g.live_edge_count()) {
        throw std::invalid_argument("break_edges_greedy_recount: k out of range");
    }
    Graph work = g;
    RemovalPlan plan;
    plan.kind = ElementKind::edge;
    plan.total_triangles_initial = count_forward(work).total;
    for (std::size_t step = 0; step < k; ++step) {
        TriangleIndex idx = count_forward(work);
        EdgeId best = 0;
        std::int64_t best_gain = -1;
        for (EdgeId e = 0; e < work.edge_slot_count(); ++e) {
            if (!work.edge_live(e)) continue;
            if (idx.per_edge[e] > best_gain) {
                best = e;
                best_gain = idx.per_edge[e];
            }
        }
        work.remove_edge(best);
        plan.selected_edges.push_back(work.edge_original(best));
        plan.gains.push_back(best_gain);
        plan.cumulative.push_back(plan.broken() + best_gain);
    }
    return plan;
}

RemovalPlan break_edges_min(const Graph& g, std::int64_t p, PhaseTimings* timings) {
    if (p <= 0) {
        throw std::invalid_argument("break_edges_min: p must be positive");
    }
    std::int64_t total = count_forward(g).total;
    if (p > total) {
        throw InfeasibleError("break_edges_min: p=" + std::to_string(p) +
                              " exceeds the triangle total " + std::to_string(total));
    }
    return run_discounting(
        g, [p](const RemovalPlan& plan) { return plan.broken() >= p; }, {}, timings);
}

BoundReport bound_edges(const Graph& g, const RemovalPlan& plan) {
    if (plan.kind != ElementKind::edge || !plan.selected_nodes.empty()) {
        throw DataError("bound_edges: plan is not an edge plan");
    }
    Graph work = g;
    std::int64_t total0 = count_forward(work).total;
    if (plan.total_triangles_initial != total0) {
        throw DataError("bound_edges: plan does not match this graph");
    }
    for (const auto& [a, b] : plan.selected_edges) {
        auto u = work.internal_id(a);
        auto v = work.internal_id(b);
        if (!u || !v) {
            throw DataError("bound_edges: plan edge endpoint absent from graph");
        }
        auto e = work.find_edge(*u, *v);
        if (!e || !work.edge_live(*e)) {
            throw DataError("bound_edges: plan edge absent or removed twice");
        }
        work.remove_edge(*e);
    }
    TriangleIndex idx = count_forward(work);

    BoundReport report;
    report.objective = total0 - idx.total;

    std::vector<std::int64_t> residual;
    residual.reserve(work.live_edge_count());
    for (EdgeId e = 0; e < work.edge_slot_count(); ++e) {
        if (work.edge_live(e)) residual.push_back(idx.per_edge[e]);
    }
    std::size_t k = std::min(plan.selected_edges.size(), residual.size());
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
