#include "treespan/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "treespan/tree_span.hpp"

namespace treespan {

namespace {

// Vertex sequence a .. b along the unique tree path.
std::vector<int> path_between(const Graph& g, int a, int b) {
    const auto bfs = bfs_distances(g, b);
    std::vector<int> path;
    for (int v = a; v != b; v = bfs.parent[v]) path.push_back(v);
    path.push_back(b);
    return path;
}

// Closed DFS tour from start covering every allowed vertex reachable through
// allowed vertices; each traversed edge is walked twice.
std::vector<int> closed_tour(const Graph& g, int start, const std::vector<char>& allowed) {
    std::vector<int> walk{start};
    std::vector<char> visited(g.num_vertices(), 0);
    std::vector<std::pair<int, size_t>> stack;
    visited[start] = 1;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nbrs = g.neighbors(v);
        if (idx < nbrs.size()) {
            const int u = nbrs[idx++];
            if (allowed[u] && !visited[u]) {
                visited[u] = 1;
                walk.push_back(u);
                stack.emplace_back(u, 0);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) walk.push_back(stack.back().first);
        }
    }
    return walk;
}

// Keeps the two walks aligned: while one player moves, the other repeats
// its current vertex.
struct PairBuilder {
    std::vector<int> a, b;

    void move_a(const std::vector<int>& seg) {
        for (size_t i = 1; i < seg.size(); ++i) {
            a.push_back(seg[i]);
            b.push_back(b.back());
        }
    }
    void move_b(const std::vector<int>& seg) {
        for (size_t i = 1; i < seg.size(); ++i) {
            b.push_back(seg[i]);
            a.push_back(a.back());
        }
    }
};

WalkPair path_witness(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.num_vertices();
    int end = 0;
    while (g.degree(end) != 1) ++end;  // smallest-id endpoint

    std::vector<int> order{end};
    int prev = -1, cur = end;
    while (static_cast<int>(order.size()) < n) {
        for (int u : g.neighbors(cur)) {
            if (u != prev) {
                order.push_back(u);
                prev = cur;
                cur = u;
                break;
            }
        }
    }

    const int m = n - 1;
    WalkPair w;
    w.claimed_span = 1;
    if (m % 2 == 1) {
        // Opposite sweeps cross as a swap over the middle edge.
        w.a = order;
        w.b = std::vector<int>(order.rbegin(), order.rend());
    } else {
        // Even edge count: one stall shifts the parity so the walks swap
        // instead of meeting.
        w.a = order;
        w.a.push_back(order.back());
        w.b.push_back(order.back());
        w.b.insert(w.b.end(), order.rbegin(), order.rend());
    }
    return w;
}

}  // namespace

WalkPair build_witness(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.num_vertices();
    if (n == 1) return WalkPair{{0}, {0}, 0};
    if (is_path(t)) return path_witness(t);

    const SpanResult sr = strong_vertex_span(t);
    const int pivot = *sr.witness_vertex;
    const int span = sr.span;
    const ComponentSet cs = components_minus_vertex(t, pivot);
    const auto from_pivot = bfs_distances(g, pivot);

    // Anchors at distance exactly span inside the three deepest components.
    int anchor[3] = {-1, -1, -1};
    for (int j = 0; j < 3; ++j)
        for (int u : cs.components[j])
            if (from_pivot.dist[u] == span && (anchor[j] < 0 || u < anchor[j])) anchor[j] = u;
    const int v1 = anchor[0], v2 = anchor[1], v3 = anchor[2];

    auto allowed_outside = [&](int excluded) {
        std::vector<char> mask(n, 0);
        for (int u = 0; u < n; ++u) mask[u] = cs.component_of(u) != excluded;
        return mask;
    };
    auto allowed_closure = [&](int comp) {
        std::vector<char> mask(n, 0);
        for (int u = 0; u < n; ++u) mask[u] = cs.component_of(u) == comp || u == pivot;
        return mask;
    };

    PairBuilder pb;
    pb.a = {v1};
    pb.b = {v2};
    // Bob tours everything outside C1 while Alice parks at v1.
    pb.move_b(closed_tour(g, v2, allowed_outside(0)));
    // Alice crosses to v3 while Bob parks at v2.
    pb.move_a(path_between(g, v1, v3));
    // Bob picks up C1 and returns to v2.
    pb.move_b(path_between(g, v2, pivot));
    pb.move_b(closed_tour(g, pivot, allowed_closure(0)));
    pb.move_b(path_between(g, pivot, v2));
    // Mirrored phases: Alice covers the tree with Bob parked.
    pb.move_a(closed_tour(g, v3, allowed_outside(1)));
    pb.move_b(path_between(g, v2, v1));
    pb.move_a(path_between(g, v3, pivot));
    pb.move_a(closed_tour(g, pivot, allowed_closure(1)));

    return WalkPair{std::move(pb.a), std::move(pb.b), span};
}

namespace {

// Distance lookup: dense matrix for small graphs, lazy per-source BFS
// otherwise.
class DistanceProvider {
public:
    explicit DistanceProvider(const Graph& g) : g_(g) {
        if (g.num_vertices() <= 2000) {
            matrix_.resize(g.num_vertices());
            for (int v = 0; v < g.num_vertices(); ++v) matrix_[v] = bfs_distances(g, v).dist;
        }
    }

    int operator()(int u, int v) {
        if (!matrix_.empty()) return matrix_[u][v];
        auto it = cache_.find(u);
        if (it == cache_.end()) it = cache_.emplace(u, bfs_distances(g_, u).dist).first;
        return it->second[v];
    }

private:
    const Graph& g_;
    std::vector<std::vector<int>> matrix_;
    std::unordered_map<int, std::vector<int>> cache_;
};

}  // namespace

VerifyReport verify_walk_pair(const Graph& g, const WalkPair& w, int claimed) {
    const int n = g.num_vertices();
    if (w.a.size() != w.b.size() || w.a.empty())
        throw std::invalid_argument("walk pair must hold two equal-length non-empty walks");
    for (int x : w.a)
        if (x < 0 || x >= n) throw std::out_of_range("walk A vertex id out of range");
    for (int x : w.b)
        if (x < 0 || x >= n) throw std::out_of_range("walk B vertex id out of range");

    const int len = static_cast<int>(w.a.size());
    VerifyReport report;
    report.valid_a = report.valid_b = true;

    auto check_walk = [&](const std::vector<int>& walk, bool& valid, const char* name) {
        for (int step = 0; step + 1 < len; ++step) {
            if (walk[step] != walk[step + 1] && !g.has_edge(walk[step], walk[step + 1])) {
                valid = false;
                if (!report.first_violation)
                    report.first_violation = {step + 1, std::string(name) + " move not adjacent"};
                return;
            }
        }
    };
    check_walk(w.a, report.valid_a, "A");
    check_walk(w.b, report.valid_b, "B");

    auto surjective = [&](const std::vector<int>& walk) {
        std::vector<char> seen(n, 0);
        int count = 0;
        for (int x : walk)
            if (!seen[x]) { seen[x] = 1; ++count; }
        return count == n;
    };
    report.surjective_a = surjective(w.a);
    report.surjective_b = surjective(w.b);
    if (!report.first_violation && !report.surjective_a)
        report.first_violation = {-1, "A not surjective"};
    if (!report.first_violation && !report.surjective_b)
        report.first_violation = {-1, "B not surjective"};

    if (report.valid_a && report.valid_b) {
        DistanceProvider dist(g);
        int best = dist(w.a[0], w.b[0]);
        int arg = 0;
        for (int step = 1; step < len; ++step) {
            const int d = dist(w.a[step], w.b[step]);
            if (d < best) { best = d; arg = step; }
        }
        report.min_distance = best;
        if (best < claimed && !report.first_violation)
            report.first_violation = {arg, "distance " + std::to_string(best) +
                                               " below claimed " + std::to_string(claimed)};
    }

    report.pass = report.valid_a && report.valid_b && report.surjective_a &&
                  report.surjective_b && report.min_distance && *report.min_distance >= claimed;
    return report;
}

bool edge_coverage(const Tree& t, const std::vector<int>& walk) {
    const int n = t.num_vertices();
    std::unordered_set<long long> covered;
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
        const int u = walk[i], v = walk[i + 1];
        if (u != v)
            covered.insert(static_cast<long long>(std::min(u, v)) * n + std::max(u, v));
    }
    return static_cast<int>(covered.size()) == n - 1;
}

std::optional<SwitchCertificate> detect_switch(const Tree& t, const WalkPair& w, int v) {
    if (t.graph().degree(v) < 3) return std::nullopt;  // three distinct components needed
    const ComponentSet cs = components_minus_vertex(t, v);
    const int len = static_cast<int>(w.a.size());

    int prev_b_at_v = -1;
    for (int j = 0; j < len; ++j) {
        if (w.b[j] != v) continue;
        const int gamma = cs.component_of(w.a[j]);
        if (gamma >= 0) {
            for (int i = j - 1; i > prev_b_at_v; --i) {
                const int alpha = cs.component_of(w.a[i]);
                const int beta = cs.component_of(w.b[i]);
                if (alpha < 0 || beta < 0) continue;
                if (alpha == beta || alpha == gamma || beta == gamma) continue;
                // Definition consequence: B stays in its component until j.
                for (int s = i; s < j; ++s)
                    if (cs.component_of(w.b[s]) != beta)
                        throw std::logic_error("detect_switch: walk B left its component "
                                               "without passing the pivot");
                return SwitchCertificate{v, i, j, alpha, beta, gamma};
            }
        }
        prev_b_at_v = j;
    }
    return std::nullopt;
}

std::string walk_pair_to_json(const WalkPair& w) {
    nlohmann::json j;
    j["claimed_span"] = w.claimed_span;
    j["A"] = w.a;
    j["B"] = w.b;
    return j.dump();
}

WalkPair walk_pair_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed walk JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("claimed_span") || !j.contains("A") || !j.contains("B"))
        throw std::invalid_argument("walk JSON must contain claimed_span, A and B");
    try {
        WalkPair w;
        w.claimed_span = j.at("claimed_span").get<int>();
        w.a = j.at("A").get<std::vector<int>>();
        w.b = j.at("B").get<std::vector<int>>();
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed walk JSON: ") + e.what());
    }
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["valid_A"] = valid_a;
    j["valid_B"] = valid_b;
    j["surjective_A"] = surjective_a;
    j["surjective_B"] = surjective_b;
    if (min_distance) j["min_distance"] = *min_distance;
    if (first_violation) {
        j["first_violation"] = {{"step", first_violation->first},
                                {"reason", first_violation->second}};
    }
    j["pass"] = pass;
    return j.dump();
}

}  // namespace treespan
