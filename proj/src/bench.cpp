#include <tribreak/bench.hpp>

#include <tribreak/baselines.hpp>
#include <tribreak/breaker_edge.hpp>
#include <tribreak/breaker_node.hpp>
#include <tribreak/errors.hpp>
#include <tribreak/synth.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tribreak {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

DatasetManifest manifest_from_json(const nlohmann::json& j) {
    DatasetManifest m;
    m.name = j.at("name").get<std::string>();
    m.url = j.value("url", "");
    m.filename = j.value("filename", m.name + ".txt");
    m.expected_n = j.at("expected_n").get<std::int64_t>();
    m.expected_m = j.at("expected_m").get<std::int64_t>();
    m.checksum = j.value("checksum", "");
    return m;
}

} // namespace

DatasetManifest gnutella04_manifest() {
    DatasetManifest m;
    m.name = "p2p-Gnutella04";
    m.url = "https://snap.stanford.edu/data/p2p-Gnutella04.txt.gz";
    m.filename = "p2p-Gnutella04.txt";
    m.expected_n = 10876;
    m.expected_m = 39994;
    return m;
}

std::vector<DatasetManifest> load_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open manifest " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("manifest " + path + ": " + e.what());
    }
    std::vector<DatasetManifest> out;
    try {
        if (j.is_array()) {
            for (const auto& item : j) out.push_back(manifest_from_json(item));
        } else {
            out.push_back(manifest_from_json(j));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError("manifest " + path + ": " + e.what());
    }
    return out;
}

std::string resolve_data_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TRIBREAK_DATA_DIR"); env && *env) return env;
    return "data";
}

Graph load_dataset(const DatasetManifest& manifest, const std::string& data_dir) {
    const auto path = std::filesystem::path(data_dir) / manifest.filename;
    if (!std::filesystem::exists(path)) {
        throw DataError("dataset '" + manifest.name + "' not found at " + path.string() +
                        "\n  download it first, e.g.:\n    curl -L " + manifest.url +
                        " | gunzip > " + path.string());
    }
    Graph g = load_edge_list(path.string());
    const auto n = static_cast<std::int64_t>(g.live_node_count());
    const auto m = static_cast<std::int64_t>(g.live_edge_count());
    if (n != manifest.expected_n || m != manifest.expected_m) {
        throw DataError("dataset '" + manifest.name + "': parsed (n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ") but manifest expects (n=" +
                        std::to_string(manifest.expected_n) + ", m=" +
                        std::to_string(manifest.expected_m) + ")");
    }
    return g;
}

namespace {

struct MethodRun {
    std::int64_t broken = 0;
    double bound = -1.0; // < 0: no certificate for this method
};

MethodRun run_method_at_k(const Graph& g, const std::string& method,
                          const std::string& target, std::int64_t k,
                          std::uint64_t seed) {
    MethodRun out;
    const auto ks = static_cast<std::size_t>(k);
    if (target == "node") {
        if (method == "discounting") {
            RemovalPlan plan = break_nodes_discounting(g, ks);
            out.broken = plan.broken();
            out.bound = bound_nodes(g, plan).ratio;
            return out;
        }
        std::vector<OriginalId> picks;
        if (method == "max-degree") {
            picks = max_degree_nodes(g, ks);
        } else if (method == "pagerank") {
            picks = pagerank_nodes(g, ks);
        } else if (method == "random") {
            picks = random_nodes(g, ks, seed);
        } else {
            throw std::invalid_argument("unknown method " + method);
        }
        out.broken = evaluate_node_set(g, picks).broken;
        return out;
    }
    if (target != "edge") throw std::invalid_argument("unknown target " + target);
    if (method == "discounting") {
        RemovalPlan plan = break_edges_discounting(g, ks);
        out.broken = plan.broken();
        out.bound = bound_edges(g, plan).ratio;
        return out;
    }
    std::vector<std::pair<OriginalId, OriginalId>> picks;
    if (method == "max-degree") {
        picks = max_degree_edges(g, ks);
    } else if (method == "pagerank") {
        picks = pagerank_edges(g, ks);
    } else if (method == "random") {
        picks = random_edges(g, ks, seed);
    } else {
        throw std::invalid_argument("unknown method " + method);
    }
    out.broken = evaluate_edge_set(g, picks).broken;
    return out;
}

} // namespace

std::vector<BenchResult> run_bench(
    const std::vector<std::pair<std::string, const Graph*>>& datasets,
    const std::vector<std::string>& methods,
    const std::vector<std::int64_t>& k_grid,
    const std::string& target,
    std::uint64_t seed) {
    std::vector<BenchResult> results;
    for (const auto& [name, graph] : datasets) {
        const std::int64_t elements =
            target == "edge" ? static_cast<std::int64_t>(graph->live_edge_count())
                             : static_cast<std::int64_t>(graph->live_node_count());
        for (const std::string& method : methods) {
            BenchResult row;
            row.dataset = name;
            row.method = method;
            row.target = target;
            row.parsed_n = static_cast<std::int64_t>(graph->live_node_count());
            row.parsed_m = static_cast<std::int64_t>(graph->live_edge_count());
            for (std::int64_t k : k_grid) {
                if (k < 1 || k > elements) continue;
                auto t0 = Clock::now();
                MethodRun r = run_method_at_k(*graph, method, target, k, seed);
                row.runtime_ms.push_back(ms_since(t0));
                row.k_values.push_back(k);
                row.broken.push_back(r.broken);
                if (r.bound >= 0) row.bound.push_back(r.bound);
            }
            results.push_back(std::move(row));
        }
    }
    return results;
}

std::vector<ScalingRow> scaling_probe(const std::vector<std::size_t>& ladder,
                                      double gamma, std::uint64_t seed) {
    std::vector<ScalingRow> rows;
    for (std::size_t target_m : ladder) {
        const double alpha = alpha_for_edge_target(gamma, target_m);
        Graph g = generate_powerlaw(alpha, gamma, seed);
        ScalingRow row;
        row.target_m = target_m;
        row.realized_n = static_cast<std::int64_t>(g.live_node_count());
        row.realized_m = static_cast<std::int64_t>(g.live_edge_count());

        PhaseTimings first;
        break_nodes_discounting(g, g.live_node_count(), {}, &first);
        row.count_ms = first.count_ms;
        row.select_ms = first.select_ms;
        row.reps = 1;
        // Repeat small rungs until the counting phase has accumulated enough
        // wall time for a stable ratio.
        const double target_accum_ms = 150.0;
        while (row.count_ms < target_accum_ms && row.reps < 50) {
            PhaseTimings t;
            break_nodes_discounting(g, g.live_node_count(), {}, &t);
            row.count_ms += t.count_ms;
            row.select_ms += t.select_ms;
            ++row.reps;
        }
        row.ratio = row.count_ms > 0 ? row.select_ms / row.count_ms : 0.0;
        rows.push_back(row);
    }
    return rows;
}

nlohmann::ordered_json bench_to_json(const std::vector<BenchResult>& results) {
    nlohmann::ordered_json out;
    out["schema_version"] = 1;
    out["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json item;
        item["dataset"] = r.dataset;
        item["method"] = r.method;
        item["target"] = r.target;
        item["parsed_n"] = r.parsed_n;
        item["parsed_m"] = r.parsed_m;
        item["k_values"] = r.k_values;
        item["broken"] = r.broken;
        if (!r.bound.empty()) item["bound"] = r.bound;
        item["runtime_ms"] = r.runtime_ms;
        out["results"].push_back(std::move(item));
    }
    return out;
}

std::string bench_to_csv(const std::vector<BenchResult>& results) {
    std::ostringstream out;
    out << "dataset,method,target,k,broken,bound,runtime_ms,parsed_n,parsed_m\n";
    for (const auto& r : results) {
        for (std::size_t i = 0; i < r.k_values.size(); ++i) {
            out << r.dataset << ',' << r.method << ',' << r.target << ','
                << r.k_values[i] << ',' << r.broken[i] << ',';
            if (i < r.bound.size()) out << r.bound[i];
            out << ',' << r.runtime_ms[i] << ',' << r.parsed_n << ',' << r.parsed_m
                << '\n';
        }
    }
    return out.str();
}

nlohmann::ordered_json scaling_to_json(const std::vector<ScalingRow>& rows,
                                       double gamma, std::uint64_t seed) {
    nlohmann::ordered_json out;
    out["schema_version"] = 1;
    out["generator"] = "powerlaw-configuration-model";
    out["gamma"] = gamma;
    out["seed"] = seed;
    out["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json item;
        item["target_m"] = r.target_m;
        item["realized_n"] = r.realized_n;
        item["realized_m"] = r.realized_m;
        item["reps"] = r.reps;
        item["count_ms"] = r.count_ms;
        item["select_ms"] = r.select_ms;
        item["phase_ratio"] = r.ratio;
        out["rows"].push_back(std::move(item));
    }
    return out;
}

std::string scaling_to_csv(const std::vector<ScalingRow>& rows) {
    std::ostringstream out;
    out << "target_m,realized_n,realized_m,reps,count_ms,select_ms,phase_ratio\n";
    for (const auto& r : rows) {
        out << r.target_m << ',' << r.realized_n << ',' << r.realized_m << ','
            << r.reps << ',' << r.count_ms << ',' << r.select_ms << ',' << r.ratio
            << '\n';
    }
    return out.str();
}

} // namespace tribreak
