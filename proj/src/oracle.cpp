#include "treespan/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace treespan {

namespace {

// Oracle-local BFS, independent of the graph_core traversal machinery.
std::vector<int> oracle_bfs(const Graph& g, int src) {
    const int n = g.num_vertices();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    dist[src] = 0;
    queue.push_back(src);
    for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int u : g.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("oracle: empty graph");
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) {
        dist[v] = oracle_bfs(g, v);
        for (int u = 0; u < n; ++u)
            if (dist[v][u] < 0) throw std::invalid_argument("oracle: graph is disconnected");
    }
    return dist;
}

bool feasible_at(const Graph& g, int k, const std::vector<std::vector<int>>& dist) {
    const int n = g.num_vertices();
    // Product nodes are pairs (u, v) with d(u, v) >= k, dense-indexed as u*n+v.
    // Edges: both coordinates move within closed neighborhoods (the all-stay
    // self-loop is omitted; it never affects components or projections).
    std::vector<int> component(static_cast<size_t>(n) * n, -1);
    std::vector<int> stack;
    int next_component = 0;
    for (int su = 0; su < n; ++su) {
        for (int sv = 0; sv < n; ++sv) {
            if (dist[su][sv] < k || component[su * n + sv] >= 0) continue;
            const int comp = next_component++;
            std::vector<char> proj_u(n, 0), proj_v(n, 0);
            int count_u = 0, count_v = 0;
            component[su * n + sv] = comp;
            stack.assign(1, su * n + sv);
            while (!stack.empty()) {
                const int node = stack.back();
                stack.pop_back();
                const int u = node / n, v = node % n;
                if (!proj_u[u]) { proj_u[u] = 1; ++count_u; }
                if (!proj_v[v]) { proj_v[v] = 1; ++count_v; }
                auto try_push = [&](int u2, int v2) {
                    if (u2 == u && v2 == v) return;
                    if (dist[u2][v2] < k || component[u2 * n + v2] >= 0) return;
                    component[u2 * n + v2] = comp;
                    stack.push_back(u2 * n + v2);
                };
                for (int u2 : g.neighbors(u)) {
                    try_push(u2, v);
                    for (int v2 : g.neighbors(v)) try_push(u2, v2);
                }
                for (int v2 : g.neighbors(v)) try_push(u, v2);
            }
            if (count_u == n && count_v == n) return true;
        }
    }
    return false;
}

int product_span_oracle(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kOracleVertexCap)
        throw std::invalid_argument("oracle: graph exceeds the vertex cap of " +
                                    std::to_string(kOracleVertexCap));
    const auto dist = all_pairs_distances(g);

    int radius = n;
    for (int v = 0; v < n; ++v)
        radius = std::min(radius, *std::max_element(dist[v].begin(), dist[v].end()));

    std::vector<char> feasible(radius + 1, 0);
    for (int k = radius; k >= 0; --k) feasible[k] = feasible_at(g, k, dist);
    if (!feasible[0]) throw std::logic_error("oracle: k = 0 must be feasible");
    for (int k = 0; k < radius; ++k)
        if (!feasible[k] && feasible[k + 1])
            throw std::logic_error("oracle: feasibility is not monotone in k");

    int best = 0;
    for (int k = radius; k >= 0; --k)
        if (feasible[k]) { best = k; break; }
    return best;
}

}  // namespace treespan
