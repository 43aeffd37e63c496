#ifndef TRIBREAK_TRIANGLE_INDEX_HPP
#define TRIBREAK_TRIANGLE_INDEX_HPP

#include <tribreak/graph.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace tribreak {

/**
 * Triangle counts of a (possibly tombstoned) graph: per-node counts T(u)
 * indexed by label, per-edge counts indexed by edge id, and the global total.
 * Dead nodes/edges have count 0. Identities that always hold:
 * sum(per_node) == 3*total and sum(per_edge) == 3*total; for a live edge
 * (u,v), per_edge equals the number of live common neighbors of u and v.
 */
struct TriangleIndex {
    std::vector<std::int64_t> per_node;
    std::vector<std::int64_t> per_edge;
    std::int64_t total = 0;
};

/** Node triple of one triangle, sorted ascending. */
using Triple = std::array<NodeId, 3>;

/**
 * Degree-ordered counting pass in O(m^{3/2}): process labels from high to
 * low, intersecting accumulator arrays that hold the already-processed
 * higher neighbors of each node. Each triangle is counted exactly once, at
 * its middle label, for any total order; the degree ordering only bounds the
 * accumulator sizes. Skips tombstoned nodes and edges.
 */
TriangleIndex count_forward(const Graph& g);

/**
 * Reference counter in O(mn): for every live edge (u,v) with u < v, test all
 * labels w > v for adjacency to both endpoints by binary search. Slow on
 * purpose; exists as an independent oracle for count_forward.
 */
TriangleIndex count_naive(const Graph& g);

/** All live triangles as ascending triples, list sorted lexicographically. */
std::vector<Triple> list_triangles(const Graph& g);

} // namespace tribreak

#endif
