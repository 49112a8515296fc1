#ifndef MDIM_GEN_HPP
#define MDIM_GEN_HPP

#include <functional>

#include "mdim/graph.hpp"
#include "mdim/rng.hpp"

namespace mdim {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph petersen_graph();
Graph hypercube_graph(int dims);

// All labeled connected graphs on n vertices (one call per graph). Guarded
// to n <= 7; beyond that the edge-mask space is out of desk range.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

long long count_connected_graphs(int n);

// Rejection-sampled G(n, p) conditioned on connectivity. edge_percent in
// 1..100.
Graph random_connected_graph(int n, int edge_percent, SplitMix64& rng);

}  // namespace mdim

#endif
