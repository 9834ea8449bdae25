#include "treespan/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace treespan {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::unordered_set<long long> seen;
    seen.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        long long key = static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = static_cast<long long>(edges.size());
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Whitespace tokenizer that skips '#' comments and tracks the token index
// for error messages.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    bool next(std::string& tok) {
        char c;
        while (in_.get(c)) {
            if (c == '#') {
                while (in_.get(c) && c != '\n') {
                }
                continue;
            }
            if (!std::isspace(static_cast<unsigned char>(c))) {
                tok.clear();
                tok.push_back(c);
                while (in_.get(c) && !std::isspace(static_cast<unsigned char>(c)) && c != '#') {
                    tok.push_back(c);
                }
                if (in_ && c == '#') in_.unget();
                ++count_;
                return true;
            }
        }
        return false;
    }

    int position() const { return count_; }  // 1-based index of the last token

private:
    std::istream& in_;
    int count_ = 0;
};

int parse_int(const std::string& tok, int position) {
    size_t used = 0;
    int value;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed token '" + tok + "' at position " +
                                    std::to_string(position));
    }
    if (used != tok.size() || value < 0)
        throw std::invalid_argument("malformed token '" + tok + "' at position " +
                                    std::to_string(position));
    return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    TokenReader reader(in);
    std::string tok;
    if (!reader.next(tok)) throw std::invalid_argument("empty input, expected vertex count");
    const int n = parse_int(tok, reader.position());

    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;
    while (reader.next(tok)) {
        const int u = parse_int(tok, reader.position());
        if (!reader.next(tok))
            throw std::invalid_argument("dangling endpoint at position " +
                                        std::to_string(reader.position()));
        const int v = parse_int(tok, reader.position());
        const int pos = reader.position();
        if (u >= n || v >= n)
            throw std::invalid_argument("vertex id out of range at position " +
                                        std::to_string(pos));
        if (u == v)
            throw std::invalid_argument("self-loop at position " + std::to_string(pos));
        const long long key = static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge at position " + std::to_string(pos));
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Tree::Tree(Graph g) : g_(std::move(g)) {
    const int n = g_.num_vertices();
    if (n == 0) throw std::invalid_argument("not a tree: empty graph");
    if (g_.num_edges() >= n) throw std::invalid_argument("not a tree: cycle present (m >= n)");
    const auto bfs = bfs_distances(g_, 0);
    for (int v = 0; v < n; ++v)
        if (bfs.dist[v] == kUnreachable) throw std::invalid_argument("not a tree: disconnected");
    // connected with m <= n - 1 forces m = n - 1
}

Tree validate_tree(Graph g) { return Tree(std::move(g)); }

BfsResult bfs_distances(const Graph& g, int src) {
    const int n = g.num_vertices();
    if (src < 0 || src >= n) throw std::invalid_argument("bfs source out of range");
    BfsResult r;
    r.dist.assign(n, kUnreachable);
    r.parent.assign(n, -1);
    std::deque<int> queue;
    r.dist[src] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (r.dist[u] == kUnreachable) {
                r.dist[u] = r.dist[v] + 1;
                r.parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    return r;
}

CenterInfo center_and_radius(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.num_vertices();
    CenterInfo info;
    if (n == 1) {
        info.centers = {0};
        info.diameter_path = {0};
        return info;
    }

    const auto first = bfs_distances(g, 0);
    int u = 0;
    for (int v = 0; v < n; ++v)
        if (first.dist[v] > first.dist[u]) u = v;

    const auto second = bfs_distances(g, u);
    int w = u;
    for (int v = 0; v < n; ++v)
        if (second.dist[v] > second.dist[w]) w = v;

    info.diameter = second.dist[w];
    info.radius = (info.diameter + 1) / 2;
    for (int v = w; v != -1; v = second.parent[v]) info.diameter_path.push_back(v);
    std::reverse(info.diameter_path.begin(), info.diameter_path.end());  // u .. w

    // middle one or two vertices of the diameter path
    info.centers.push_back(info.diameter_path[info.diameter / 2]);
    if (info.diameter % 2 == 1) info.centers.push_back(info.diameter_path[info.diameter / 2 + 1]);
    std::sort(info.centers.begin(), info.centers.end());
    return info;
}

bool is_path(const Tree& t) {
    const Graph& g = t.graph();
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

ComponentSet components_minus_vertex(const Tree& t, int v) {
    const Graph& g = t.graph();
    const int n = g.num_vertices();
    if (v < 0 || v >= n) throw std::invalid_argument("pivot out of range");

    const int deg = g.degree(v);
    // One BFS from v; each vertex inherits the component of its first hop.
    std::vector<int> raw_label(n, -1);
    std::vector<int> dist(n, kUnreachable);
    std::vector<int> raw_reach(deg, 0);
    std::deque<int> queue;
    dist[v] = 0;
    for (int i = 0; i < deg; ++i) {
        const int u = g.neighbors(v)[i];
        raw_label[u] = i;
        dist[u] = 1;
        raw_reach[i] = 1;
        queue.push_back(u);
    }
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                raw_label[y] = raw_label[x];
                raw_reach[raw_label[x]] = std::max(raw_reach[raw_label[x]], dist[y]);
                queue.push_back(y);
            }
        }
    }

    std::vector<std::vector<int>> members(deg);
    for (int u = 0; u < n; ++u)
        if (u != v) members[raw_label[u]].push_back(u);  // ascending, BFS order not needed

    // Sort by descending reach; ties by smallest contained vertex id.
    std::vector<int> order(deg);
    for (int i = 0; i < deg; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (raw_reach[a] != raw_reach[b]) return raw_reach[a] > raw_reach[b];
        return members[a].front() < members[b].front();
    });

    ComponentSet cs;
    cs.pivot = v;
    cs.label_.assign(n, -1);
    cs.components.resize(deg);
    cs.borders.resize(deg);
    cs.reach.resize(deg);
    for (int slot = 0; slot < deg; ++slot) {
        const int i = order[slot];
        cs.components[slot] = std::move(members[i]);
        cs.borders[slot] = {g.neighbors(v)[i]};
        cs.reach[slot] = raw_reach[i];
        for (int u : cs.components[slot]) cs.label_[u] = slot;
    }
    return cs;
}

}  // namespace treespan
