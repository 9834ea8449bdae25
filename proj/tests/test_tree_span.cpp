#include <algorithm>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "test_util.hpp"
#include "treespan/graph.hpp"
#include "treespan/random_tree.hpp"
#include "treespan/tree_span.hpp"

using namespace treespan;
using namespace treespan::testutil;

TEST_CASE("height_scan hand-traced on the star") {
    const Tree k13 = star(3);
    const ReachTable table = height_scan(k13, 0);
    CHECK(table.r1[0] == 1);
    CHECK(table.r2[0] == 1);
    CHECK(table.r3[0] == 1);
    for (int leaf = 1; leaf <= 3; ++leaf) {
        CHECK(table.r1[leaf] == 1);  // guard
        CHECK(table.r2[leaf] == 0);
        CHECK(table.r3[leaf] == 0);
    }
}

TEST_CASE("height_scan on a path leaves r3 at zero") {
    const Tree p3 = path_graph(3);
    const ReachTable table = height_scan(p3, 1);
    for (int v = 0; v < 3; ++v) CHECK(table.r3[v] == 0);
}

TEST_CASE("height_scan rejects a non-center root") {
    CHECK_THROWS_AS(height_scan(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("height_scan on the perfect binary tree of height 3") {
    const Tree t = perfect_binary(3);
    const ReachTable table = height_scan(t, 0);
    int best = 0;
    for (int v = 0; v < t.num_vertices(); ++v) best = std::max(best, table.r3[v]);
    CHECK(best == 2);
}

TEST_CASE("eta") {
    const Tree k13 = star(3);
    const ReachTable table = height_scan(k13, 0);
    CHECK(eta(table, 0) == 1);
    CHECK(eta(table, 1) == 0);

    const Tree sp = spider({2, 2, 2});
    CHECK(eta(height_scan(sp, 0), 0) == 2);
}

TEST_CASE("tree_triod_size") {
    CHECK(tree_triod_size(path_graph(10)).first == 0);
    CHECK(tree_triod_size(star(3)) == std::pair<int, int>{1, 0});

    const auto [value, argmax] = tree_triod_size(perfect_binary(4));
    CHECK(value == 3);
    CHECK((argmax == 1 || argmax == 2));
    CHECK(argmax == 1);  // smallest id wins ties
}

TEST_CASE("strong_vertex_span cases") {
    const SpanResult trivial = strong_vertex_span(path_graph(1));
    CHECK(trivial.span == 0);
    CHECK(trivial.kind == SpanKind::trivial);
    CHECK_FALSE(trivial.witness_vertex);

    const SpanResult p7 = strong_vertex_span(path_graph(7));
    CHECK(p7.span == 1);
    CHECK(p7.kind == SpanKind::path);

    const SpanResult p2 = strong_vertex_span(path_graph(2));
    CHECK(p2.span == 1);
    CHECK(p2.kind == SpanKind::path);

    const SpanResult pbt3 = strong_vertex_span(perfect_binary(3));
    CHECK(pbt3.span == 2);
    CHECK(pbt3.kind == SpanKind::triod);
    REQUIRE(pbt3.witness_vertex);
    CHECK(perfect_binary(3).graph().degree(*pbt3.witness_vertex) >= 3);

    CHECK(strong_vertex_span(spider({3, 2, 1})).span == 1);
}

TEST_CASE("strong_edge_span equals strong_vertex_span on trees") {
    CHECK(strong_edge_span(path_graph(1)).span == 0);
    CHECK(strong_edge_span(path_graph(2)).span == 1);
    CHECK(strong_edge_span(star(3)).span == strong_vertex_span(star(3)).span);

    std::mt19937_64 rng(3);
    for (int round = 0; round < 50; ++round) {
        const Tree t = random_tree(2 + static_cast<int>(rng() % 100), rng);
        CHECK(strong_edge_span(t).span == strong_vertex_span(t).span);
    }
}

TEST_CASE("brute_triod_size") {
    CHECK(brute_triod_size(star(3)) == 1);
    CHECK(brute_triod_size(path_graph(6)) == 0);

    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; ++round) {
        const Tree t = random_tree(50, rng);
        if (!is_path(t)) CHECK(strong_vertex_span(t).span == brute_triod_size(t));
    }
}

TEST_CASE("max_eta_vertices") {
    CHECK(max_eta_vertices(star(3)) == std::vector<int>{0});
    CHECK(max_eta_vertices(spider({2, 2, 2})) == std::vector<int>{0});

    // H-tree: two adjacent hubs, two leaves each.
    const Tree h(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}));
    CHECK(max_eta_vertices(h) == std::vector<int>{0, 1});

    CHECK_THROWS_AS(max_eta_vertices(path_graph(4)), std::invalid_argument);
}

TEST_CASE("span never exceeds the radius") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 100; ++round) {
        const Tree t = random_tree(1 + static_cast<int>(rng() % 120), rng);
        const SpanResult r = strong_vertex_span(t);
        CHECK(r.span <= center_and_radius(t).radius);
    }
}

TEST_CASE("deepest component of a non-root vertex holds its parent, strictly") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 30; ++round) {
        const int n = 2 + static_cast<int>(rng() % 60);
        const Tree t = random_tree(n, rng);
        const int c = center_and_radius(t).centers.front();
        const auto bfs = bfs_distances(t.graph(), c);
        for (int v = 0; v < n; ++v) {
            if (v == c) continue;
            const ComponentSet cs = components_minus_vertex(t, v);
            const int parent = bfs.parent[v];
            CHECK(std::find(cs.components[0].begin(), cs.components[0].end(), parent) !=
                  cs.components[0].end());
            if (cs.components.size() > 1) CHECK(cs.reach[0] > cs.reach[1]);
        }
    }
}

TEST_CASE("r2 equals the brute-force subtree height, r1 at the root the radius") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 30; ++round) {
        const int n = 2 + static_cast<int>(rng() % 80);
        const Tree t = random_tree(n, rng);
        const CenterInfo info = center_and_radius(t);
        const int c = info.centers.front();
        const ReachTable table = height_scan(t, c);

        // Independent heights: process vertices by decreasing depth.
        const auto bfs = bfs_distances(t.graph(), c);
        std::vector<int> by_depth(n);
        for (int v = 0; v < n; ++v) by_depth[v] = v;
        std::sort(by_depth.begin(), by_depth.end(),
                  [&](int a, int b) { return bfs.dist[a] > bfs.dist[b]; });
        std::vector<int> height(n, 0);
        for (int v : by_depth)
            if (v != c) height[bfs.parent[v]] = std::max(height[bfs.parent[v]], height[v] + 1);

        CHECK(table.r1[c] == info.radius);
        for (int v = 0; v < n; ++v)
            if (v != c) CHECK(table.r2[v] == height[v]);
    }
}
