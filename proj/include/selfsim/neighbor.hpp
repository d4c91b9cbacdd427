#ifndef SELFSIM_NEIGHBOR_HPP
#define SELFSIM_NEIGHBOR_HPP

#include <string>
#include <vector>

#include "selfsim/ifs.hpp"

namespace selfsim {

/// Edge h -> phi_i^{-1} h phi_j of the neighbor graph; from == -1 marks a
/// root edge h = phi_i^{-1} phi_j (i != j).
struct NeighborEdge {
    int from = -1;
    int to = 0;
    int i = 0;  // 1-based letters
    int j = 0;
};

/// Vertices are the non-identity maps h = phi_u^{-1} phi_w whose image of
/// the hull still meets the hull (touching counts); everything farther away
/// can never produce an overlap again and is pruned.
struct NeighborGraph {
    std::vector<AffineMap> vertices;
    std::vector<NeighborEdge> edges;
    bool incomplete = false;      // vertex budget exhausted
    bool identity_found = false;  // some phi_u = phi_w with u != w (exact overlap)
};

NeighborGraph neighbor_graph(const IFS& ifs, int max_vertices = 512);

/// Iteratively removes vertices without outgoing edges; what survives are
/// exactly the maps admitting arbitrarily deep continuations.
NeighborGraph trim(const NeighborGraph& graph);

enum class BoundaryVerdict { Empty, Finite, CountablyInfinite, Uncountable };

struct BoundaryClassification {
    BoundaryVerdict verdict = BoundaryVerdict::Empty;
    std::string reason;
    std::size_t trimmed_vertices = 0;
    std::size_t trimmed_edges = 0;
};

/// Cardinality of the dynamical boundary, read off the trimmed graph:
/// a strongly connected component with more internal edges than vertices
/// yields uncountably many continuations; a simple cycle with an exit edge
/// countably many; exit-free simple cycles only, finitely many.
/// Throws std::invalid_argument on an incomplete graph.
BoundaryClassification classify(const NeighborGraph& graph);

std::string to_dot(const NeighborGraph& graph);

}  // namespace selfsim

#endif
