#include "treespan/tree_span.hpp"

#include <algorithm>
#include <stdexcept>

namespace treespan {

std::string to_string(SpanKind kind) {
    switch (kind) {
        case SpanKind::trivial: return "trivial";
        case SpanKind::path: return "path";
        case SpanKind::triod: return "triod";
    }
    return "?";
}

namespace {

// Guarded top-3 insert of a candidate reach value.
void push_reach(int candidate, int& r1, int& r2, int& r3) {
    if (candidate > r1) {
        r3 = r2;
        r2 = r1;
        r1 = candidate;
    } else if (candidate > r2) {
        r3 = r2;
        r2 = candidate;
    } else if (candidate > r3) {
        r3 = candidate;
    }
}

ReachTable height_scan_impl(const Tree& t, int c, int radius) {
    const Graph& g = t.graph();
    const int n = g.num_vertices();

    ReachTable table;
    table.root = c;
    table.parent.assign(n, -1);
    table.r1.assign(n, radius);
    table.r1[c] = 0;
    table.r2.assign(n, 0);
    table.r3.assign(n, 0);
    table.order.reserve(n);

    // Explicit-stack post-order DFS; frames hold the next neighbor index.
    std::vector<std::pair<int, size_t>> stack;
    stack.reserve(64);
    std::vector<int> height(n, 0);
    std::vector<char> visited(n, 0);
    visited[c] = 1;
    stack.emplace_back(c, 0);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nbrs = g.neighbors(v);
        if (idx < nbrs.size()) {
            const int u = nbrs[idx++];
            if (!visited[u]) {
                visited[u] = 1;
                table.parent[u] = v;
                stack.emplace_back(u, 0);
            }
        } else {
            table.order.push_back(v);
            stack.pop_back();
            if (!stack.empty()) {
                const int p = stack.back().first;
                const int candidate = height[v] + 1;
                // Every child-side component of a non-root vertex reaches
                // strictly less far than rad(T); a violation means the
                // guard could be displaced and the scan would be wrong.
                if (p != c && candidate >= radius)
                    throw std::logic_error("height_scan: child reach " +
                                           std::to_string(candidate) +
                                           " not below radius " + std::to_string(radius));
                push_reach(candidate, table.r1[p], table.r2[p], table.r3[p]);
                height[p] = std::max(height[p], candidate);
            }
        }
    }
    return table;
}

int pick_center(const CenterInfo& info) { return info.centers.front(); }

}  // namespace

ReachTable height_scan(const Tree& t, int c) {
    const CenterInfo info = center_and_radius(t);
    if (std::find(info.centers.begin(), info.centers.end(), c) == info.centers.end())
        throw std::invalid_argument("height_scan: vertex " + std::to_string(c) +
                                    " is not a center");
    return height_scan_impl(t, c, info.radius);
}

int eta(const ReachTable& table, int v) { return table.r3[v]; }

std::pair<int, int> tree_triod_size(const Tree& t) {
    const CenterInfo info = center_and_radius(t);
    const ReachTable table = height_scan_impl(t, pick_center(info), info.radius);
    int best = 0, argmax = 0;
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (table.r3[v] > best) {
            best = table.r3[v];
            argmax = v;
        }
    }
    return {best, argmax};
}

SpanResult strong_vertex_span(const Tree& t) {
    SpanResult result;
    if (t.num_vertices() == 1) return result;  // trivial, span 0

    const CenterInfo info = center_and_radius(t);
    result.radius = info.radius;
    if (is_path(t)) {
        result.span = 1;
        result.kind = SpanKind::path;
        return result;
    }

    const ReachTable table = height_scan_impl(t, pick_center(info), info.radius);
    int best = 0, argmax = 0;
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (table.r3[v] > best) {
            best = table.r3[v];
            argmax = v;
        }
    }
    result.span = best;
    result.kind = SpanKind::triod;
    result.witness_vertex = argmax;
    result.eta = best;
    return result;
}

SpanResult strong_edge_span(const Tree& t) { return strong_vertex_span(t); }

int brute_triod_size(const Tree& t) {
    int best = 0;
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (t.graph().degree(v) < 3) continue;
        const ComponentSet cs = components_minus_vertex(t, v);
        best = std::max(best, cs.reach[2]);
    }
    return best;
}

std::vector<int> max_eta_vertices(const Tree& t) {
    if (is_path(t)) throw std::invalid_argument("max_eta_vertices: tree is a path");
    const CenterInfo info = center_and_radius(t);
    const ReachTable table = height_scan_impl(t, pick_center(info), info.radius);
    const int best = *std::max_element(table.r3.begin(), table.r3.end());
    std::vector<int> out;
    for (int v = 0; v < t.num_vertices(); ++v)
        if (table.r3[v] == best) out.push_back(v);
    return out;
}

}  // namespace treespan
