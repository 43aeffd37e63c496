#include <tribreak/synth.hpp>

#include <tribreak/rng.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace tribreak {

namespace {

std::uint64_t pair_key(OriginalId a, OriginalId b) {
    if (a > b) std::swap(a, b);
    return (a << 32) | b;
}

Graph from_stub_pairing(const std::vector<std::uint32_t>& degrees, std::uint64_t seed) {
    std::vector<OriginalId> stubs;
    for (OriginalId u = 0; u < degrees.size(); ++u) {
        for (std::uint32_t i = 0; i < degrees[u]; ++i) stubs.push_back(u);
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = stubs.size(); i > 1; --i) {
        std::size_t j = uniform_below(rng, i);
        std::swap(stubs[i - 1], stubs[j]);
    }
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    std::unordered_set<std::uint64_t> seen;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        OriginalId a = stubs[i], b = stubs[i + 1];
        if (a == b) continue;
        if (!seen.insert(pair_key(a, b)).second) continue;
        edges.emplace_back(a, b);
    }
    std::vector<OriginalId> nodes(degrees.size());
    for (OriginalId u = 0; u < degrees.size(); ++u) nodes[u] = u;
    return Graph::from_edges(nodes, edges);
}

} // namespace

std::vector<std::uint32_t> powerlaw_degree_sequence(double alpha, double gamma) {
    if (alpha < 0 || gamma <= 0) {
        throw std::invalid_argument("powerlaw_degree_sequence: bad parameters");
    }
    const auto max_degree =
        static_cast<std::uint64_t>(std::floor(std::exp(alpha / gamma)));
    std::vector<std::uint32_t> degrees;
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
        const auto count = static_cast<std::uint64_t>(
            std::floor(std::exp(alpha - gamma * std::log(static_cast<double>(d)))));
        for (std::uint64_t i = 0; i < count; ++i) {
            degrees.push_back(static_cast<std::uint32_t>(d));
        }
    }
    std::uint64_t stub_total = 0;
    for (std::uint32_t d : degrees) stub_total += d;
    if (stub_total % 2 == 1) degrees.push_back(1);
    return degrees;
}

Graph generate_powerlaw(double alpha, double gamma, std::uint64_t seed) {
    return from_stub_pairing(powerlaw_degree_sequence(alpha, gamma), seed);
}

double alpha_for_edge_target(double gamma, std::size_t target_m) {
    auto stub_pairs = [&](double alpha) {
        const auto max_degree =
            static_cast<std::uint64_t>(std::floor(std::exp(alpha / gamma)));
        std::uint64_t stubs = 0;
        for (std::uint64_t d = 1; d <= max_degree; ++d) {
            stubs += d * static_cast<std::uint64_t>(std::floor(
                             std::exp(alpha - gamma * std::log(static_cast<double>(d)))));
        }
        return stubs / 2;
    };
    double lo = 0.0, hi = 1.0;
    while (stub_pairs(hi) < target_m) {
        hi *= 2;
        if (hi > 64) throw std::invalid_argument("alpha_for_edge_target: target too large");
    }
    for (int iter = 0; iter < 80; ++iter) {
        double mid = (lo + hi) / 2;
        if (stub_pairs(mid) >= target_m) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

Graph generate_er(std::size_t n, double p, std::uint64_t seed) {
    if (n == 0 || p < 0 || p > 1) {
        throw std::invalid_argument("generate_er: bad parameters");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    for (OriginalId u = 0; u < n; ++u) {
        for (OriginalId v = u + 1; v < n; ++v) {
            if (unit_double(rng) < p) edges.emplace_back(u, v);
        }
    }
    std::vector<OriginalId> nodes(n);
    for (OriginalId u = 0; u < n; ++u) nodes[u] = u;
    return Graph::from_edges(nodes, edges);
}

Graph generate_pref_attach(std::size_t n, std::size_t attach, std::uint64_t seed) {
    if (n == 0 || attach == 0) {
        throw std::invalid_argument("generate_pref_attach: bad parameters");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<OriginalId, OriginalId>> edges;
    std::vector<OriginalId> targets; // node repeated once per degree
    const std::size_t seed_size = std::min(n, attach + 1);
    for (OriginalId u = 0; u < seed_size; ++u) {
        for (OriginalId v = u + 1; v < seed_size; ++v) {
            edges.emplace_back(u, v);
            targets.push_back(u);
            targets.push_back(v);
        }
    }
    for (OriginalId u = seed_size; u < n; ++u) {
        std::unordered_set<OriginalId> chosen;
        while (chosen.size() < attach) {
            chosen.insert(targets[uniform_below(rng, targets.size())]);
        }
        // Sorted so the target list (and thus later samples) never depends on
        // hash-set iteration order.
        std::vector<OriginalId> picks(chosen.begin(), chosen.end());
        std::sort(picks.begin(), picks.end());
        for (OriginalId v : picks) {
            edges.emplace_back(u, v);
            targets.push_back(u);
            targets.push_back(v);
        }
    }
    std::vector<OriginalId> nodes(n);
    for (OriginalId u = 0; u < n; ++u) nodes[u] = u;
    return Graph::from_edges(nodes, edges);
}

} // namespace tribreak
