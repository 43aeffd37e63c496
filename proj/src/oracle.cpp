#include <tribreak/oracle.hpp>

#include <tribreak/errors.hpp>
#include <tribreak/triangle_index.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tribreak {

namespace {

constexpr std::int64_t kEnumerationLimit = 10'000'000;

// True when C(n, k) stays within limit.
bool combinations_within(std::size_t n, std::size_t k, std::int64_t limit) {
    if (k > n) return true;
    k = std::min(k, n - k);
    long double c = 1.0L;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (c > static_cast<long double>(limit)) return false;
    }
    return true;
}

// Shared enumeration state over abstract elements 0..m-1, where each element
// covers a list of triangle indices. Subsets are visited in lexicographic
// index order, so keeping only strict improvements yields the
// lexicographically first optimum.
struct Enumerator {
    std::vector<std::vector<std::int32_t>> covers; // element -> triangle indices
    std::vector<std::int32_t> cover_count;         // triangle -> selected covers
    std::vector<std::int64_t> standalone_prefix;   // top-i standalone sum
    std::vector<std::uint32_t> current;
    std::vector<std::uint32_t> best_set;
    std::int64_t score = 0;
    std::int64_t best = -1;
    std::int64_t stop_at = -1; // when >= 0: accept first subset with score >= stop_at
    bool found = false;
    bool prune = true;

    explicit Enumerator(std::vector<std::vector<std::int32_t>> cov, std::size_t n_triangles)
        : covers(std::move(cov)), cover_count(n_triangles, 0) {
        std::vector<std::int64_t> standalone;
        standalone.reserve(covers.size());
        for (const auto& c : covers) standalone.push_back(static_cast<std::int64_t>(c.size()));
        std::sort(standalone.rbegin(), standalone.rend());
        standalone_prefix.assign(standalone.size() + 1, 0);
        for (std::size_t i = 0; i < standalone.size(); ++i) {
            standalone_prefix[i + 1] = standalone_prefix[i] + standalone[i];
        }
    }

    void add(std::uint32_t x) {
        for (std::int32_t t : covers[x]) {
            if (cover_count[t]++ == 0) ++score;
        }
        current.push_back(x);
    }

    void drop(std::uint32_t x) {
        for (std::int32_t t : covers[x]) {
            if (--cover_count[t] == 0) --score;
        }
        current.pop_back();
    }

    // Admissible optimistic bound: standalone counts dominate marginal gains.
    std::int64_t optimistic(std::size_t remaining) const {
        return score + standalone_prefix[std::min(remaining, covers.size())];
    }

    void dfs(std::size_t start, std::size_t remaining) {
        if (found) return;
        if (remaining == 0) {
            if (stop_at >= 0) {
                if (score >= stop_at) {
                    best = score;
                    best_set = current;
                    found = true;
                }
            } else if (score > best) {
                best = score;
                best_set = current;
            }
            return;
        }
        if (prune) {
            if (stop_at >= 0) {
                if (optimistic(remaining) < stop_at) return;
            } else if (optimistic(remaining) <= best) {
                return;
            }
        }
        for (std::size_t i = start; i + remaining <= covers.size(); ++i) {
            add(static_cast<std::uint32_t>(i));
            dfs(i + 1, remaining - 1);
            drop(static_cast<std::uint32_t>(i));
            if (found) return;
        }
    }
};

// Live elements in canonical order plus the triangle cover lists.
struct NodeInstance {
    std::vector<OriginalId> elements;
    std::vector<std::vector<std::int32_t>> covers;
    std::size_t n_triangles = 0;
};

NodeInstance node_instance(const Graph& g) {
    NodeInstance inst;
    std::vector<NodeId> internal;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.node_live(u)) internal.push_back(u);
    }
    std::sort(internal.begin(), internal.end(), [&](NodeId a, NodeId b) {
        return g.original_id(a) < g.original_id(b);
    });
    std::unordered_map<NodeId, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < internal.size(); ++i) {
        inst.elements.push_back(g.original_id(internal[i]));
        pos[internal[i]] = i;
    }
    auto triangles = list_triangles(g);
    inst.n_triangles = triangles.size();
    inst.covers.resize(internal.size());
    for (std::int32_t t = 0; t < static_cast<std::int32_t>(triangles.size()); ++t) {
        for (NodeId u : triangles[static_cast<std::size_t>(t)]) {
            inst.covers[pos.at(u)].push_back(t);
        }
    }
    return inst;
}

struct EdgeInstance {
    std::vector<std::pair<OriginalId, OriginalId>> elements;
    std::vector<std::vector<std::int32_t>> covers;
    std::size_t n_triangles = 0;
};

EdgeInstance edge_instance(const Graph& g) {
    EdgeInstance inst;
    std::vector<EdgeId> live;
    for (EdgeId e = 0; e < g.edge_slot_count(); ++e) {
        if (g.edge_live(e)) live.push_back(e);
    }
    std::sort(live.begin(), live.end(), [&](EdgeId a, EdgeId b) {
        return g.edge_original(a) < g.edge_original(b);
    });
    std::unordered_map<EdgeId, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < live.size(); ++i) {
        inst.elements.push_back(g.edge_original(live[i]));
        pos[live[i]] = i;
    }
    auto triangles = list_triangles(g);
    inst.n_triangles = triangles.size();
    inst.covers.resize(live.size());
    for (std::int32_t t = 0; t < static_cast<std::int32_t>(triangles.size()); ++t) {
        const auto& tri = triangles[static_cast<std::size_t>(t)];
        const std::array<std::optional<EdgeId>, 3> ids = {
            g.find_edge(tri[0], tri[1]), g.find_edge(tri[0], tri[2]),
            g.find_edge(tri[1], tri[2])};
        for (const auto& e : ids) {
            inst.covers[pos.at(*e)].push_back(t);
        }
    }
    return inst;
}

void check_size(std::size_t n_elements, std::size_t k, const char* what) {
    if (k > n_elements) {
        throw std::invalid_argument(std::string(what) + ": k exceeds element count");
    }
    if (!combinations_within(n_elements, k, kEnumerationLimit)) {
        throw std::invalid_argument(std::string(what) +
                                    ": instance too large for exhaustive search");
    }
}

} // namespace

OptResult brute_force_opt_nodes(const Graph& g, std::size_t k, bool prune) {
    NodeInstance inst = node_instance(g);
    check_size(inst.elements.size(), k, "brute_force_opt_nodes");
    Enumerator en(std::move(inst.covers), inst.n_triangles);
    en.prune = prune;
    en.dfs(0, k);
    OptResult res;
    res.opt_value = std::max<std::int64_t>(en.best, 0);
    for (std::uint32_t i : en.best_set) res.best_nodes.push_back(inst.elements[i]);
    return res;
}

OptResult brute_force_opt_edges(const Graph& g, std::size_t k, bool prune) {
    EdgeInstance inst = edge_instance(g);
    check_size(inst.elements.size(), k, "brute_force_opt_edges");
    Enumerator en(std::move(inst.covers), inst.n_triangles);
    en.prune = prune;
    en.dfs(0, k);
    OptResult res;
    res.opt_value = std::max<std::int64_t>(en.best, 0);
    for (std::uint32_t i : en.best_set) res.best_edges.push_back(inst.elements[i]);
    return res;
}

namespace {

template <typename Instance, typename Emit>
OptResult min_break_impl(const Instance& inst, std::int64_t p, const char* what,
                         Emit&& emit) {
    if (p <= 0) {
        throw std::invalid_argument(std::string(what) + ": p must be positive");
    }
    if (p > static_cast<std::int64_t>(inst.n_triangles)) {
        throw InfeasibleError(std::string(what) + ": p exceeds the triangle total");
    }
    for (std::size_t k = 1; k <= inst.elements.size(); ++k) {
        check_size(inst.elements.size(), k, what);
        Enumerator en(inst.covers, inst.n_triangles);
        en.stop_at = p;
        en.dfs(0, k);
        if (en.found) {
            OptResult res;
            res.opt_value = static_cast<std::int64_t>(k);
            emit(res, en.best_set);
            return res;
        }
    }
    throw InfeasibleError(std::string(what) + ": unreachable target");
}

} // namespace

OptResult brute_force_min_break_nodes(const Graph& g, std::int64_t p) {
    NodeInstance inst = node_instance(g);
    return min_break_impl(inst, p, "brute_force_min_break_nodes",
                          [&](OptResult& res, const std::vector<std::uint32_t>& set) {
                              for (std::uint32_t i : set)
                                  res.best_nodes.push_back(inst.elements[i]);
                          });
}

OptResult brute_force_min_break_edges(const Graph& g, std::int64_t p) {
    EdgeInstance inst = edge_instance(g);
    return min_break_impl(inst, p, "brute_force_min_break_edges",
                          [&](OptResult& res, const std::vector<std::uint32_t>& set) {
                              for (std::uint32_t i : set)
                                  res.best_edges.push_back(inst.elements[i]);
                          });
}

} // namespace tribreak
