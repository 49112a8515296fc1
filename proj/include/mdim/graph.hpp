#ifndef MDIM_GRAPH_HPP
#define MDIM_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace mdim {

// Hard cap on vertex counts so distance matrix entries fit in 16 bits and
// n*n index arithmetic stays comfortably inside int range.
constexpr int kMaxVertices = 32767;

// Undirected simple graph. Vertices are 0..n-1, adjacency lists are sorted
// and symmetric, no loops, no parallel edges. Immutable after construction;
// safe to share across threads.
struct Graph {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj[v]; }

    // All edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Graph& other) const { return n == other.n && adj == other.adj; }
};

// Validates endpoints, rejects self-loops, collapses duplicate edges.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Hop-count metric, stored dense. Entries fit in 16 bits (n < 2^15).
struct DistanceMatrix {
    int n = 0;
    std::vector<std::uint16_t> d;  // row-major n*n

    std::uint16_t at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
    const std::uint16_t* row(int u) const { return d.data() + static_cast<std::size_t>(u) * n; }
    int diameter() const;
};

bool is_connected(const Graph& g);

// Throws naming two mutually unreachable vertices when g is disconnected.
void ensure_connected(const Graph& g);

// BFS from every vertex. Throws if g is disconnected, naming two mutually
// unreachable vertices (the metric is undefined there).
DistanceMatrix all_pairs_distances(const Graph& g);

void check_vertex_range(const Graph& g, int v);
void check_vertex_set(const Graph& g, const std::vector<int>& vs);

}  // namespace mdim

#endif
