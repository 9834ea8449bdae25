#ifndef TREESPAN_RANDOM_TREE_HPP
#define TREESPAN_RANDOM_TREE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// Labeled tree on n vertices from its Pruefer sequence (length n - 2).
Tree prufer_decode(const std::vector<int>& seq, int n);

/// Uniform random labeled tree via a random Pruefer sequence.
Tree random_tree(int n, std::mt19937_64& rng);

inline constexpr int kEnumerateCap = 8;

/// Calls fn for each of the n^(n-2) labeled trees on n vertices (n <= 8).
void enumerate_labeled_trees(int n, const std::function<void(const Tree&)>& fn);

/// n^(n-2) for n >= 2, 1 for n = 1.
std::uint64_t labeled_tree_count(int n);

}  // namespace treespan

#endif
