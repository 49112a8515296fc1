#ifndef MDIM_RESOLVING_HPP
#define MDIM_RESOLVING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

struct ResolutionCheck {
    bool resolved = false;
    // Present iff not resolved: the lexicographically smallest pair on which
    // every probe vertex is equidistant.
    std::optional<std::pair<int, int>> unresolved_pair;
};

// Does s resolve V(g)? Vacuously true for n <= 1.
ResolutionCheck is_resolving(const Graph& g, const std::vector<int>& s);
ResolutionCheck is_resolving(const Graph& g, const DistanceMatrix& dm, const std::vector<int>& s);

struct EquidistancePartition {
    std::vector<int> probe;
    std::vector<int> target;
    std::vector<std::vector<int>> classes;  // partition of target, ordered by smallest member

    int count() const { return static_cast<int>(classes.size()); }
};

// Equivalence classes of the map t -> (d(t, w))_{w in probe} restricted to
// target. An empty probe leaves target in a single class.
EquidistancePartition equidistance_classes(const Graph& g, const std::vector<int>& probe,
                                           const std::vector<int>& target);
EquidistancePartition equidistance_classes(const Graph& g, const DistanceMatrix& dm,
                                           const std::vector<int>& probe,
                                           const std::vector<int>& target);

enum class Engine {
    branch_and_bound,  // twin-forced search with split-count ordering
    enumerate,         // plain subset enumeration; the cross-check oracle
};

struct SearchStats {
    long long nodes = 0;  // search tree nodes (bnb) or subsets tested (enumerate)
};

// Smallest-first search for a resolving set of size <= k; nullopt if none
// exists. Deterministic for both engines.
std::optional<std::vector<int>> has_resolving_set_of_size(const Graph& g, int k,
                                                          Engine engine = Engine::branch_and_bound,
                                                          SearchStats* stats = nullptr);

struct MdResult {
    int md = 0;
    std::vector<int> witness;  // sorted resolving set of size md
};

MdResult metric_dimension_exact(const Graph& g, Engine engine = Engine::branch_and_bound,
                                SearchStats* stats = nullptr);

// Given a co-resolving set t (complement must resolve g; checked), builds
// S inside the complement with |S| <= |t| that resolves t: repeatedly take
// the lexicographically smallest still-unresolved pair in t and the
// smallest-id distinguishing vertex outside t.
std::vector<int> resolve_witness(const Graph& g, const std::vector<int>& t);

}  // namespace mdim

#endif
