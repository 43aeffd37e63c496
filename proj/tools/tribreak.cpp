#include <tribreak/baselines.hpp>
#include <tribreak/bench.hpp>
#include <tribreak/breaker_edge.hpp>
#include <tribreak/breaker_node.hpp>
#include <tribreak/errors.hpp>
#include <tribreak/oracle.hpp>
#include <tribreak/synth.hpp>
#include <tribreak/triangle_index.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using tribreak::DataError;
using tribreak::Graph;
using tribreak::InfeasibleError;
using tribreak::OriginalId;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot write " + out_path);
    out << text;
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

json plan_to_json(const tribreak::RemovalPlan& plan) {
    json j;
    if (plan.kind == tribreak::ElementKind::node) {
        j["selected"] = plan.selected_nodes;
    } else {
        auto arr = json::array();
        for (const auto& [a, b] : plan.selected_edges) {
            arr.push_back(json::array({a, b}));
        }
        j["selected"] = std::move(arr);
    }
    j["gains"] = plan.gains;
    j["cumulative"] = plan.cumulative;
    j["total_triangles"] = plan.total_triangles_initial;
    return j;
}

std::string plan_to_csv(const tribreak::RemovalPlan& plan) {
    std::ostringstream out;
    if (plan.kind == tribreak::ElementKind::node) {
        out << "step,node,gain,cumulative\n";
        for (std::size_t i = 0; i < plan.size(); ++i) {
            out << i + 1 << ',' << plan.selected_nodes[i] << ',' << plan.gains[i]
                << ',' << plan.cumulative[i] << '\n';
        }
    } else {
        out << "step,u,v,gain,cumulative\n";
        for (std::size_t i = 0; i < plan.size(); ++i) {
            out << i + 1 << ',' << plan.selected_edges[i].first << ','
                << plan.selected_edges[i].second << ',' << plan.gains[i] << ','
                << plan.cumulative[i] << '\n';
        }
    }
    return out.str();
}

json bound_to_json(const tribreak::BoundReport& b) {
    return json{{"objective", b.objective},
                {"upper_bound", b.upper_bound},
                {"ratio", b.ratio}};
}

struct GlobalOpts {
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
};

int run_count(const std::string& file, bool list, const GlobalOpts& g) {
    auto t0 = Clock::now();
    Graph graph = tribreak::load_edge_list(file);
    tribreak::TriangleIndex idx = tribreak::count_forward(graph);
    if (list) {
        std::ostringstream out;
        std::vector<std::array<OriginalId, 3>> rows;
        for (const auto& tri : tribreak::list_triangles(graph)) {
            std::array<OriginalId, 3> t = {graph.original_id(tri[0]),
                                           graph.original_id(tri[1]),
                                           graph.original_id(tri[2])};
            std::sort(t.begin(), t.end());
            rows.push_back(t);
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& t : rows) {
            out << t[0] << ',' << t[1] << ',' << t[2] << '\n';
        }
        emit(out.str(), g.out);
        return 0;
    }
    if (g.format == "csv") {
        std::ostringstream out;
        out << "n,m,total_triangles\n"
            << graph.live_node_count() << ',' << graph.live_edge_count() << ','
            << idx.total << '\n';
        emit(out.str(), g.out);
        return 0;
    }
    json j;
    j["command"] = "count";
    j["n"] = graph.live_node_count();
    j["m"] = graph.live_edge_count();
    j["total_triangles"] = idx.total;
    j["runtime_ms"] = ms_since(t0);
    emit_json(j, g.out);
    return 0;
}

int run_break(const std::string& file, const std::string& target, std::int64_t k,
              std::int64_t min_p, bool with_bound, const GlobalOpts& g) {
    Graph graph = tribreak::load_edge_list(file);
    tribreak::PhaseTimings timings;
    tribreak::RemovalPlan plan;
    const bool is_node = target == "node";
    if (min_p > 0) {
        plan = is_node ? tribreak::break_nodes_min(graph, min_p, &timings)
                       : tribreak::break_edges_min(graph, min_p, &timings);
    } else {
        plan = is_node
                   ? tribreak::break_nodes_discounting(
                         graph, static_cast<std::size_t>(k), {}, &timings)
                   : tribreak::break_edges_discounting(
                         graph, static_cast<std::size_t>(k), {}, &timings);
    }
    if (g.format == "csv") {
        emit(plan_to_csv(plan), g.out);
        return 0;
    }
    json j;
    j["command"] = is_node ? "break-node" : "break-edge";
    j["method"] = "discounting";
    if (min_p > 0) j["min_p"] = min_p;
    j["k"] = plan.size();
    const json plan_json = plan_to_json(plan); // keep alive while iterating
    for (const auto& [key, value] : plan_json.items()) j[key] = value;
    if (with_bound) {
        j["bound"] = bound_to_json(is_node ? tribreak::bound_nodes(graph, plan)
                                           : tribreak::bound_edges(graph, plan));
    }
    j["count_ms"] = timings.count_ms;
    j["select_ms"] = timings.select_ms;
    j["runtime_ms"] = timings.count_ms + timings.select_ms;
    emit_json(j, g.out);
    return 0;
}

int run_baseline(const std::string& file, const std::string& method,
                 const std::string& target, std::int64_t k, std::uint64_t seed,
                 const GlobalOpts& g) {
    Graph graph = tribreak::load_edge_list(file);
    auto t0 = Clock::now();
    const auto ks = static_cast<std::size_t>(k);
    tribreak::RemovalPlan plan; // reused as the output container
    tribreak::EvalResult eval;
    bool pagerank_converged = true;
    tribreak::PageRankConfig pr_cfg;
    if (target == "node") {
        std::vector<OriginalId> picks;
        if (method == "maxdeg") {
            picks = tribreak::max_degree_nodes(graph, ks);
        } else if (method == "pagerank") {
            picks = tribreak::pagerank_nodes(graph, ks, pr_cfg, &pagerank_converged);
        } else {
            picks = tribreak::random_nodes(graph, ks, seed);
        }
        eval = tribreak::evaluate_node_set(graph, picks);
        plan.kind = tribreak::ElementKind::node;
        plan.selected_nodes = std::move(picks);
    } else {
        std::vector<std::pair<OriginalId, OriginalId>> picks;
        if (method == "maxdeg") {
            picks = tribreak::max_degree_edges(graph, ks);
        } else if (method == "pagerank") {
            picks = tribreak::pagerank_edges(graph, ks, pr_cfg, &pagerank_converged);
        } else {
            picks = tribreak::random_edges(graph, ks, seed);
        }
        eval = tribreak::evaluate_edge_set(graph, picks);
        plan.kind = tribreak::ElementKind::edge;
        plan.selected_edges = std::move(picks);
    }
    plan.cumulative = eval.cumulative;
    plan.gains.reserve(eval.cumulative.size());
    std::int64_t prev = 0;
    for (std::int64_t c : eval.cumulative) {
        plan.gains.push_back(c - prev);
        prev = c;
    }
    plan.total_triangles_initial = tribreak::count_forward(graph).total;

    if (g.format == "csv") {
        emit(plan_to_csv(plan), g.out);
        return 0;
    }
    json j;
    j["command"] = "baseline";
    j["method"] = method == "maxdeg" ? "max-degree" : method;
    j["target"] = target;
    j["k"] = k;
    if (method == "random") j["seed"] = seed;
    if (method == "pagerank") {
        j["pagerank"] = json{{"damping", pr_cfg.damping},
                             {"max_iters", pr_cfg.max_iters},
                             {"tolerance", pr_cfg.tolerance},
                             {"converged", pagerank_converged}};
    }
    if (target == "edge") j["edge_score_rule"] = "endpoint_sum";
    const json plan_json = plan_to_json(plan); // keep alive while iterating
    for (const auto& [key, value] : plan_json.items()) j[key] = value;
    j["broken"] = eval.broken;
    j["runtime_ms"] = ms_since(t0);
    emit_json(j, g.out);
    return 0;
}

int run_oracle(const std::string& file, const std::string& target, std::int64_t k,
               const GlobalOpts& g) {
    Graph graph = tribreak::load_edge_list(file);
    auto t0 = Clock::now();
    tribreak::OptResult opt = target == "node"
                                  ? tribreak::brute_force_opt_nodes(
                                        graph, static_cast<std::size_t>(k))
                                  : tribreak::brute_force_opt_edges(
                                        graph, static_cast<std::size_t>(k));
    json j;
    j["command"] = "oracle";
    j["target"] = target;
    j["k"] = k;
    j["opt_value"] = opt.opt_value;
    if (target == "node") {
        j["best_set"] = opt.best_nodes;
    } else {
        auto arr = json::array();
        for (const auto& [a, b] : opt.best_edges) arr.push_back(json::array({a, b}));
        j["best_set"] = std::move(arr);
    }
    j["runtime_ms"] = ms_since(t0);
    if (g.format == "csv") {
        std::ostringstream out;
        out << "target,k,opt_value\n" << target << ',' << k << ',' << opt.opt_value << '\n';
        emit(out.str(), g.out);
        return 0;
    }
    emit_json(j, g.out);
    return 0;
}

int run_bench_cmd(const std::string& manifest_path, const std::string& data_dir_flag,
                  const std::vector<std::string>& methods, const std::string& target,
                  std::vector<std::int64_t> k_grid,
                  const std::vector<std::int64_t>& synthetic_m, bool scaling,
                  const std::vector<std::size_t>& ladder, double gamma,
                  const GlobalOpts& g) {
    if (scaling) {
        auto rows = tribreak::scaling_probe(ladder, gamma, g.seed);
        if (g.format == "csv") {
            emit(tribreak::scaling_to_csv(rows), g.out);
        } else {
            emit_json(tribreak::scaling_to_json(rows, gamma, g.seed), g.out);
        }
        return 0;
    }
    const std::string data_dir = tribreak::resolve_data_dir(data_dir_flag);
    std::vector<std::pair<std::string, Graph>> store;
    if (!manifest_path.empty()) {
        for (const auto& m : tribreak::load_manifest_file(manifest_path)) {
            store.emplace_back(m.name, tribreak::load_dataset(m, data_dir));
        }
    } else {
        const auto m = tribreak::gnutella04_manifest();
        store.emplace_back(m.name, tribreak::load_dataset(m, data_dir));
        for (std::int64_t target_m : synthetic_m) {
            const double alpha = tribreak::alpha_for_edge_target(
                2.5, static_cast<std::size_t>(target_m));
            store.emplace_back("powerlaw-m" + std::to_string(target_m),
                               tribreak::generate_powerlaw(alpha, 2.5, g.seed));
        }
    }
    std::vector<std::pair<std::string, const Graph*>> datasets;
    datasets.reserve(store.size());
    for (const auto& [name, graph] : store) datasets.emplace_back(name, &graph);
    auto results = tribreak::run_bench(datasets, methods, k_grid, target, g.seed);
    if (g.format == "csv") {
        emit(tribreak::bench_to_csv(results), g.out);
    } else {
        emit_json(tribreak::bench_to_json(results), g.out);
    }
    return 0;
}

int run_gen(const std::string& model, std::int64_t target_m, double alpha,
            double gamma, std::int64_t n, double p, std::size_t attach,
            const GlobalOpts& g) {
    Graph graph = [&] {
        if (model == "powerlaw") {
            const double a = target_m > 0
                                 ? tribreak::alpha_for_edge_target(
                                       gamma, static_cast<std::size_t>(target_m))
                                 : alpha;
            return tribreak::generate_powerlaw(a, gamma, g.seed);
        }
        if (model == "er") {
            return tribreak::generate_er(static_cast<std::size_t>(n), p, g.seed);
        }
        return tribreak::generate_pref_attach(static_cast<std::size_t>(n), attach,
                                              g.seed);
    }();
    std::ostringstream out;
    out << "# model: " << model << " seed: " << g.seed << '\n';
    graph.serialize(out);
    emit(out.str(), g.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangle-breaking analysis for undirected graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--seed", g.seed, "Seed for randomized steps")->capture_default_str();

    std::string file;
    bool list_triangles = false;
    auto* count = app.add_subcommand("count", "Count triangles");
    count->add_option("file", file, "Edge-list file")->required();
    count->add_flag("--list", list_triangles, "Stream all triangles as CSV");

    std::int64_t k = 0, min_p = 0;
    bool with_bound = false;
    auto* break_node = app.add_subcommand("break-node", "Select triangle-breaking nodes");
    break_node->add_option("file", file)->required();
    break_node->add_option("--k", k, "Number of nodes to remove");
    break_node->add_option("--min-p", min_p, "Remove nodes until p triangles are broken");
    break_node->add_flag("--bound", with_bound, "Attach the optimality certificate");

    auto* break_edge = app.add_subcommand("break-edge", "Select triangle-breaking edges");
    break_edge->add_option("file", file)->required();
    break_edge->add_option("--k", k, "Number of edges to remove");
    break_edge->add_option("--min-p", min_p, "Remove edges until p triangles are broken");
    break_edge->add_flag("--bound", with_bound, "Attach the optimality certificate");

    std::string method = "maxdeg", target = "node";
    auto* baseline = app.add_subcommand("baseline", "Centrality and random baselines");
    baseline->add_option("file", file)->required();
    baseline->add_option("--method", method)
        ->check(CLI::IsMember({"maxdeg", "pagerank", "random"}))
        ->required();
    baseline->add_option("--target", target)
        ->check(CLI::IsMember({"node", "edge"}))
        ->required();
    baseline->add_option("--k", k)->required();

    auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for tiny graphs");
    oracle->add_option("file", file)->required();
    oracle->add_option("--target", target)
        ->check(CLI::IsMember({"node", "edge"}))
        ->required();
    oracle->add_option("--k", k)->required();

    std::string manifest_path, data_dir_flag;
    std::vector<std::string> methods = {"discounting", "max-degree", "pagerank", "random"};
    std::vector<std::int64_t> k_grid = {200, 400, 600, 800, 1000};
    std::vector<std::int64_t> synthetic_m = {10000};
    bool scaling = false;
    std::vector<std::size_t> ladder = {10000, 100000, 1000000};
    double gamma = 2.5;
    auto* bench = app.add_subcommand("bench", "Benchmark harness");
    bench->add_option("--manifest", manifest_path, "Dataset manifest JSON");
    bench->add_option("--data-dir", data_dir_flag,
                      "Dataset directory (default: $TRIBREAK_DATA_DIR or ./data)");
    bench->add_option("--methods", methods, "Methods to run")->delimiter(',');
    bench->add_option("--target", target)->check(CLI::IsMember({"node", "edge"}));
    bench->add_option("--k-grid", k_grid, "Budgets to sweep")->delimiter(',');
    bench->add_option("--synthetic-m", synthetic_m,
                      "Edge counts for generated datasets (default corpus only)")
        ->delimiter(',');
    bench->add_flag("--scaling", scaling, "Run the phase-ratio scaling probe instead");
    bench->add_option("--ladder", ladder, "Scaling probe edge-count ladder")
        ->delimiter(',');
    bench->add_option("--gamma", gamma, "Degree exponent for generated graphs")
        ->capture_default_str();

    std::string model = "powerlaw";
    std::int64_t target_m = 0, n = 0;
    double alpha = 0.0, p = 0.0;
    std::size_t attach = 2;
    auto* gen = app.add_subcommand("gen", "Generate a synthetic graph");
    gen->add_option("--model", model)
        ->check(CLI::IsMember({"powerlaw", "er", "pa"}))
        ->required();
    gen->add_option("--target-m", target_m, "Approximate edge count (powerlaw)");
    gen->add_option("--alpha", alpha, "Degree-sequence scale (powerlaw)");
    gen->add_option("--gamma", gamma, "Degree exponent (powerlaw)")
        ->capture_default_str();
    gen->add_option("--n", n, "Node count (er, pa)");
    gen->add_option("--p", p, "Edge probability (er)");
    gen->add_option("--attach", attach, "Links per new node (pa)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);

        if (count->parsed()) return run_count(file, list_triangles, g);
        if (break_node->parsed() || break_edge->parsed()) {
            if (min_p <= 0 && k <= 0) {
                throw std::invalid_argument("either --k or --min-p is required");
            }
            return run_break(file, break_node->parsed() ? "node" : "edge", k, min_p,
                             with_bound, g);
        }
        if (baseline->parsed()) return run_baseline(file, method, target, k, g.seed, g);
        if (oracle->parsed()) return run_oracle(file, target, k, g);
        if (bench->parsed()) {
            return run_bench_cmd(manifest_path, data_dir_flag, methods, target, k_grid,
                                 synthetic_m, scaling, ladder, gamma, g);
        }
        if (gen->parsed()) {
            if (model == "powerlaw" && target_m <= 0 && alpha <= 0) {
                throw std::invalid_argument("gen powerlaw needs --target-m or --alpha");
            }
            if (model != "powerlaw" && n <= 0) {
                throw std::invalid_argument("gen " + model + " needs --n");
            }
            return run_gen(model, target_m, alpha, gamma, n, p, attach, g);
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 3;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
