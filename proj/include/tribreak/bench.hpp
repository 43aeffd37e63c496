#ifndef TRIBREAK_BENCH_HPP
#define TRIBREAK_BENCH_HPP

#include <tribreak/graph.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace tribreak {

/**
 * Where a benchmark dataset comes from and what the parsed graph must look
 * like. checksum is carried for reference, not enforced; the exact (n, m)
 * equality check is the integrity gate.
 */
struct DatasetManifest {
    std::string name;
    std::string url;
    std::string filename;
    std::int64_t expected_n = 0;
    std::int64_t expected_m = 0;
    std::string checksum;
};

/** Built-in manifest entry for the default peer-to-peer benchmark graph. */
DatasetManifest gnutella04_manifest();

/** Parse a manifest JSON file (one object or an array of objects). */
std::vector<DatasetManifest> load_manifest_file(const std::string& path);

/**
 * Resolve the dataset directory: explicit --data-dir flag if nonempty, else
 * the TRIBREAK_DATA_DIR environment variable, else "data".
 */
std::string resolve_data_dir(const std::string& flag_value);

/**
 * Load and validate a manifest entry from data_dir. Missing file raises
 * DataError with download instructions; a parsed (n, m) that differs from the
 * manifest raises DataError naming both.
 */
Graph load_dataset(const DatasetManifest& manifest, const std::string& data_dir);

/** One (dataset, method) sweep over the k grid. */
struct BenchResult {
    std::string dataset;
    std::string method;           // discounting | max-degree | pagerank | random
    std::string target;           // node | edge
    std::vector<std::int64_t> k_values;
    std::vector<std::int64_t> broken;
    std::vector<double> runtime_ms;
    std::vector<double> bound;    // greedy methods only, else empty
    std::int64_t parsed_n = 0;
    std::int64_t parsed_m = 0;
};

/**
 * Full protocol: for every dataset and method, run each k in the grid as an
 * independent full run (parsing excluded from timing), score baselines with
 * the fair evaluator, and attach the optimality certificate for the greedy
 * method. k values exceeding a dataset's element count are skipped for that
 * dataset. seed feeds the random baseline.
 */
std::vector<BenchResult> run_bench(
    const std::vector<std::pair<std::string, const Graph*>>& datasets,
    const std::vector<std::string>& methods,
    const std::vector<std::int64_t>& k_grid,
    const std::string& target,
    std::uint64_t seed);

/** One rung of the generated-graph scaling ladder. */
struct ScalingRow {
    std::size_t target_m = 0;
    std::int64_t realized_n = 0;
    std::int64_t realized_m = 0;
    int reps = 1;
    double count_ms = 0.0;   // counting phase, summed over reps
    double select_ms = 0.0;  // selection phase, summed over reps
    double ratio = 0.0;      // select_ms / count_ms
};

/**
 * Empirical complexity probe: generate a heavy-tailed graph per target size,
 * run the full node-discounting sweep (k = n), and report the
 * selection/counting time ratio. Small sizes are repeated (capped) until the
 * counting phase accumulates enough wall time to be measurable.
 */
std::vector<ScalingRow> scaling_probe(const std::vector<std::size_t>& ladder,
                                      double gamma, std::uint64_t seed);

nlohmann::ordered_json bench_to_json(const std::vector<BenchResult>& results);
std::string bench_to_csv(const std::vector<BenchResult>& results);
nlohmann::ordered_json scaling_to_json(const std::vector<ScalingRow>& rows,
                                       double gamma, std::uint64_t seed);
std::string scaling_to_csv(const std::vector<ScalingRow>& rows);

} // namespace tribreak

#endif
