#include "treespan/random_tree.hpp"

#include <stdexcept>

namespace treespan {

Tree prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 1) throw std::invalid_argument("prufer_decode: n must be positive");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw std::invalid_argument("prufer_decode: sequence length must be n - 2");
    if (n == 1) return Tree(Graph(1, {}));
    if (n == 2) return Tree(Graph(2, {{0, 1}}));

    std::vector<int> degree(n, 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw std::invalid_argument("prufer_decode: label out of range");
        ++degree[s];
    }

    // Linear decode: ptr sweeps left to right, leaf tracks the current
    // smallest unprocessed leaf.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree(Graph(n, edges));
}

Tree random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be positive");
    std::vector<int> seq(std::max(0, n - 2));
    std::uniform_int_distribution<int> label(0, n - 1);
    for (int& s : seq) s = label(rng);
    return prufer_decode(seq, n);
}

void enumerate_labeled_trees(int n, const std::function<void(const Tree&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_labeled_trees: n must be positive");
    if (n > kEnumerateCap)
        throw std::invalid_argument("enumerate_labeled_trees: n exceeds cap of " +
                                    std::to_string(kEnumerateCap));
    std::vector<int> seq(std::max(0, n - 2), 0);
    while (true) {
        fn(prufer_decode(seq, n));
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

std::uint64_t labeled_tree_count(int n) {
    if (n <= 2) return 1;
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
    return count;
}

}  // namespace treespan
