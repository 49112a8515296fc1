#ifndef MDIM_TWINS_HPP
#define MDIM_TWINS_HPP

#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

enum class TwinKind { true_twin, false_twin, singleton };

struct TwinClass {
    std::vector<int> vertices;  // sorted
    TwinKind kind = TwinKind::singleton;
};

// Maximal twin classes of g. Classes of size >= 2 hold vertices that are
// pairwise true twins (equal closed neighborhoods) or pairwise false twins
// (equal open neighborhoods); everything else is a singleton. The returned
// classes partition V(g) and are ordered by smallest member.
std::vector<TwinClass> twin_classes(const Graph& g);

struct PruneResult {
    Graph pruned;
    int removed = 0;
    std::vector<int> kept_map;  // pruned id -> original id, increasing
};

// Shrinks every twin class to at most two vertices, rerunning twin
// detection until fixpoint. Keeps the two lowest-numbered members of each
// oversized class, so output ids are reproducible. Idempotent.
PruneResult prune(const Graph& g);

}  // namespace mdim

#endif
