#ifndef TREESPAN_ORACLE_HPP
#define TREESPAN_ORACLE_HPP

#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// Brute-force strong vertex span for arbitrary small connected graphs,
/// via the pair-walk product construction. Deliberately shares no
/// traversal code with the tree algorithm.

inline constexpr int kOracleVertexCap = 64;

/// Hop-count matrix from n BFS runs. Throws on disconnected input.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// True iff a pair of walks covering all vertices in each coordinate can
/// maintain distance >= k: some connected component of the product graph
/// restricted to pairs at distance >= k projects onto V(G) in both
/// coordinates.
bool feasible_at(const Graph& g, int k, const std::vector<std::vector<int>>& dist);

/// Largest feasible k in [0, rad(g)]. Throws if g exceeds the vertex cap
/// or is disconnected.
int product_span_oracle(const Graph& g);

}  // namespace treespan

#endif
