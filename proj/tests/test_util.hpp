#ifndef TREESPAN_TEST_UTIL_HPP
#define TREESPAN_TEST_UTIL_HPP

#include <vector>

#include "treespan/graph.hpp"

namespace treespan::testutil {

inline Tree path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(Graph(n, edges));
}

/// Star K_{1,k} with hub 0.
inline Tree star(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Tree(Graph(k + 1, edges));
}

/// Spider: hub 0, one path of each given length attached to the hub.
inline Tree spider(const std::vector<int>& legs) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int step = 0; step < len; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(Graph(next, edges));
}

/// Perfect binary tree of the given height (root 0, children 2i+1, 2i+2).
inline Tree perfect_binary(int height) {
    const int n = (1 << (height + 1)) - 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
    return Tree(Graph(n, edges));
}

}  // namespace treespan::testutil

#endif
