#include "mdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "mdim/error.hpp"

namespace mdim {

bool Graph::has_edge(int u, int v) const {
    const auto& nu = adj[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error("vertex count must be nonnegative, got " + std::to_string(n));
    if (n > kMaxVertices)
        throw Error("vertex count " + std::to_string(n) + " exceeds limit " +
                    std::to_string(kMaxVertices));
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw Error("self-loop (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") is not allowed");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    int m = 0;
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m += static_cast<int>(nb.size());
    }
    g.m = m / 2;
    return g;
}

namespace {

// BFS distances from src into out[0..n). Unreached entries stay at max.
void bfs(const Graph& g, int src, std::uint16_t* out) {
    constexpr std::uint16_t unreached = 0xffff;
    std::fill(out, out + g.n, unreached);
    out[src] = 0;
    std::vector<int> queue;
    queue.reserve(g.n);
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint16_t du = out[u];
        for (int w : g.adj[u]) {
            if (out[w] == unreached) {
                out[w] = static_cast<std::uint16_t>(du + 1);
                queue.push_back(w);
            }
        }
    }
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<std::uint16_t> dist(g.n);
    bfs(g, 0, dist.data());
    for (int v = 0; v < g.n; ++v)
        if (dist[v] == 0xffff) return false;
    return true;
}

void ensure_connected(const Graph& g) {
    if (g.n <= 1) return;
    std::vector<std::uint16_t> dist(g.n);
    bfs(g, 0, dist.data());
    for (int v = 0; v < g.n; ++v) {
        if (dist[v] == 0xffff)
            throw Error("graph is disconnected: vertices 0 and " + std::to_string(v) +
                        " are mutually unreachable");
    }
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix dm;
    dm.n = g.n;
    dm.d.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    if (g.n == 0) return dm;
    bfs(g, 0, dm.d.data());
    for (int v = 0; v < g.n; ++v) {
        if (dm.d[v] == 0xffff)
            throw Error("graph is disconnected: vertices 0 and " + std::to_string(v) +
                        " are mutually unreachable");
    }
    for (int u = 1; u < g.n; ++u) bfs(g, u, dm.d.data() + static_cast<std::size_t>(u) * g.n);
    return dm;
}

int DistanceMatrix::diameter() const {
    std::uint16_t best = 0;
    for (std::uint16_t x : d) best = std::max(best, x);
    return best;
}

void check_vertex_range(const Graph& g, int v) {
    if (v < 0 || v >= g.n)
        throw Error("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(g.n - 1));
}

void check_vertex_set(const Graph& g, const std::vector<int>& vs) {
    for (int v : vs) check_vertex_range(g, v);
}

}  // namespace mdim
