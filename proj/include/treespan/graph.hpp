#ifndef TREESPAN_GRAPH_HPP
#define TREESPAN_GRAPH_HPP

#include <string>
#include <vector>

namespace treespan {

/// Distance value for vertices a BFS never reached.
inline constexpr int kUnreachable = -1;

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Adjacency lists are kept sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// A Graph validated to be connected with m = n - 1.
class Tree {
public:
    explicit Tree(Graph g);  // throws std::invalid_argument if not a tree

    const Graph& graph() const { return g_; }
    int num_vertices() const { return g_.num_vertices(); }

private:
    Graph g_;
};

/// Parses the edge-list text format: '#' comment lines, first token n,
/// then whitespace-separated pairs "u v" until end of stream.
/// Throws std::invalid_argument with the offending token position.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Renders a graph back to the edge-list text format.
std::string format_edge_list(const Graph& g);

Tree validate_tree(Graph g);

struct BfsResult {
    std::vector<int> dist;    // kUnreachable where not reached
    std::vector<int> parent;  // -1 for src and unreached vertices
};

BfsResult bfs_distances(const Graph& g, int src);

struct CenterInfo {
    std::vector<int> centers;  // one or two vertices, ascending
    int radius = 0;
    int diameter = 0;
    std::vector<int> diameter_path;  // vertex sequence realizing the diameter
};

/// Center, radius and diameter of a tree via two BFS traversals.
CenterInfo center_and_radius(const Tree& t);

/// True iff every vertex has degree <= 2 (the single vertex counts as a path).
bool is_path(const Tree& t);

/// Components of T - {v}, sorted by descending reach, ties broken by the
/// smallest contained vertex id.
struct ComponentSet {
    int pivot = -1;
    std::vector<std::vector<int>> components;  // vertex sets
    std::vector<std::vector<int>> borders;     // per component, vertices adjacent to pivot
    std::vector<int> reach;                    // eccentricity of pivot in the closure

    /// Index into components for u, or -1 for the pivot itself.
    int component_of(int u) const { return label_[u]; }

    friend ComponentSet components_minus_vertex(const Tree& t, int v);

private:
    std::vector<int> label_;
};

ComponentSet components_minus_vertex(const Tree& t, int v);

}  // namespace treespan

#endif
