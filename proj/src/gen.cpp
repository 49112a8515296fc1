#include "mdim/gen.hpp"

#include <numeric>
#include <string>

#include "mdim/error.hpp"

namespace mdim {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return build_graph(leaves + 1, e);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spoke
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return build_graph(10, e);
}

Graph hypercube_graph(int dims) {
    if (dims < 0 || dims > 14) throw Error("hypercube dimension out of range: " + std::to_string(dims));
    int n = 1 << dims;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dims; ++b)
            if (!(v >> b & 1)) e.emplace_back(v, v | (1 << b));
    return build_graph(n, e);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

}  // namespace

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7)
        throw Error("exhaustive enumeration supports 1..7 vertices, got " + std::to_string(n));
    auto pairs = all_pairs(n);
    int bits = static_cast<int>(pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        UnionFind uf(n);
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) uf.unite(pairs[b].first, pairs[b].second);
        bool connected = true;
        for (int v = 1; v < n && connected; ++v) connected = uf.find(v) == uf.find(0);
        if (!connected) continue;
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        fn(build_graph(n, edges));
    }
}

long long count_connected_graphs(int n) {
    long long count = 0;
    for_each_connected_graph(n, [&](const Graph&) { ++count; });
    return count;
}

Graph random_connected_graph(int n, int edge_percent, SplitMix64& rng) {
    if (n < 1 || n > kMaxVertices) throw Error("vertex count out of range: " + std::to_string(n));
    if (edge_percent < 1 || edge_percent > 100)
        throw Error("edge percentage must be in 1..100, got " + std::to_string(edge_percent));
    auto pairs = all_pairs(n);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : pairs)
            if (rng.below(100) < static_cast<std::uint64_t>(edge_percent)) edges.emplace_back(u, v);
        Graph g = build_graph(n, edges);
        if (is_connected(g)) return g;
    }
}

}  // namespace mdim
