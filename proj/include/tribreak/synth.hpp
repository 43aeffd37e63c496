#ifndef TRIBREAK_SYNTH_HPP
#define TRIBREAK_SYNTH_HPP

#include <tribreak/graph.hpp>

#include <cstdint>
#include <vector>

namespace tribreak {

/**
 * Heavy-tailed degree sequence: floor(e^alpha / d^gamma) nodes of degree d
 * for d = 1 .. floor(e^(alpha/gamma)), padded by one degree-1 node if the
 * stub total is odd. Exposed separately so tests can check the construction.
 */
std::vector<std::uint32_t> powerlaw_degree_sequence(double alpha, double gamma);

/**
 * Configuration-model graph over that degree sequence: stubs shuffled with
 * the seeded generator, paired in order, self-loops and duplicate pairs
 * dropped (so realized degrees can fall slightly short). Node original ids
 * are 0..n-1.
 */
Graph generate_powerlaw(double alpha, double gamma, std::uint64_t seed);

/**
 * Smallest alpha whose degree sequence carries at least target_m stub pairs;
 * feed to generate_powerlaw to hit a requested edge count (realized edges
 * land slightly below target after the simple-graph rejection).
 */
double alpha_for_edge_target(double gamma, std::size_t target_m);

/** Erdos-Renyi G(n, p); O(n^2) pair scan, intended for test-sized graphs. */
Graph generate_er(std::size_t n, double p, std::uint64_t seed);

/**
 * Preferential attachment: each new node links to `attach` distinct existing
 * nodes sampled proportionally to degree. Intended for test-sized graphs.
 */
Graph generate_pref_attach(std::size_t n, std::size_t attach, std::uint64_t seed);

} // namespace tribreak

#endif
