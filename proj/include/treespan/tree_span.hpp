#ifndef TREESPAN_TREE_SPAN_HPP
#define TREESPAN_TREE_SPAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// Per-vertex guarded top-3 component reaches produced by the height scan.
///
/// For v != root, r1 is pre-seeded with rad(T) so that no child subtree can
/// displace the parent-side component; after the scan r2(v) equals the height
/// of the subtree rooted at v and r3(v) equals the triod size of v.
struct ReachTable {
    int root = -1;
    std::vector<int> parent;  // -1 for the root
    std::vector<int> r1, r2, r3;
    std::vector<int> order;  // DFS finish order
};

enum class SpanKind { trivial, path, triod };

std::string to_string(SpanKind kind);

struct SpanResult {
    int span = 0;
    SpanKind kind = SpanKind::trivial;
    std::optional<int> witness_vertex;  // present iff kind == triod
    int eta = 0;                        // triod size of the witness vertex
    int radius = 0;
};

/// Single post-order DFS from a central vertex c, accumulating each child
/// subtree height h as a candidate h+1 in the guarded top-3 slots.
/// Throws std::invalid_argument if c is not a center of t.
ReachTable height_scan(const Tree& t, int c);

/// Triod size of v read off a ReachTable: reach of the third-deepest
/// component around v, 0 when deg(v) <= 2.
int eta(const ReachTable& table, int v);

/// Maximum triod size over all vertices and one maximizing vertex
/// (smallest id on ties).
std::pair<int, int> tree_triod_size(const Tree& t);

/// Strong vertex span of a tree in O(n): 0 for the single vertex, 1 for a
/// non-trivial path, the maximum triod size otherwise.
SpanResult strong_vertex_span(const Tree& t);

/// Strong edge span; coincides with the strong vertex span on trees.
SpanResult strong_edge_span(const Tree& t);

/// O(n^2) oracle: per-vertex component decomposition, reaches sorted
/// descending, third value (or 0), maximized over all vertices.
/// Shares no code with height_scan.
int brute_triod_size(const Tree& t);

/// Vertices attaining the maximum triod size. Requires a non-path tree.
std::vector<int> max_eta_vertices(const Tree& t);

}  // namespace treespan

#endif
