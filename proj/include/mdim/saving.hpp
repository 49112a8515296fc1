#ifndef MDIM_SAVING_HPP
#define MDIM_SAVING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

// Dual-parameter instance: does g have a resolving set of size at most
// n - k, equivalently a co-resolving set of size at least k?
struct SavingInstance {
    Graph g;
    int k = 0;
};

// Symmetric difference of open neighborhoods. Pairs with tau > k are told
// apart by any n-k landmarks, which is what makes H useful.
int tau(const Graph& g, int u, int v);

// H on V(g) with uv in E(H) iff tau(u, v) <= k.
struct AuxGraph {
    Graph h;
    int k = 0;
};
AuxGraph build_aux_graph(const Graph& g, int k);

enum class HomogeneousKind { clique, independent_set };

struct HomogeneousSet {
    HomogeneousKind kind = HomogeneousKind::independent_set;
    std::vector<int> vertices;  // exactly 2k, sorted
};

// Searches the closed H-neighborhood of the smallest vertex with H-degree
// >= 8k^3 for a clique or independent set of size 2k: if every vertex of
// g[S] has degree < 4k^2, greedy closed-neighborhood packing yields the
// independent set; otherwise iterated common-neighborhood intersection
// yields the clique. Returns nullopt iff no vertex reaches H-degree 8k^3.
// Expects g pruned.
std::optional<HomogeneousSet> find_homogeneous_2k(const Graph& g, int k);

// One representative per twin class meeting X (X a clique or independent
// set of size 2k in a pruned graph). The result is a co-resolving set of
// size >= k; its complement is checked to resolve g before returning.
std::vector<int> co_resolving_from_homogeneous(const Graph& g, const std::vector<int>& x, int k);

enum class KernelVerdict { reduced, trivial_yes };

struct KernelOutcome {
    KernelVerdict verdict = KernelVerdict::reduced;
    SavingInstance instance;  // reduced instance, or the canonical single-vertex yes-instance
    // Present for every trivial-yes: a co-resolving set of the input graph
    // of size >= k, given in input vertex ids (all of which survive
    // pruning, so the same set is co-resolving in the pruned graph too).
    std::optional<std::vector<int>> certificate;
};

// Prune (k is unchanged under the dual parameter), then: a vertex of
// H-degree >= 8k^3 or a pruned size >= 8k^4 certifies a yes-instance;
// otherwise the pruned instance itself is the kernel, below 8k^4 vertices.
KernelOutcome kernelize(const SavingInstance& inst);

struct Partition {
    std::vector<int> r;
    std::vector<int> b;
};

// Number of B-equidistance classes within R (probe = B, target = R).
std::pair<int, EquidistancePartition> count_partition_classes(const Graph& g, const Partition& p);

enum class SolveMethod { exact, randomized, derandomized, kernel_shortcut };

struct SavingAnswer {
    bool yes = false;
    std::optional<std::vector<int>> witness;  // co-resolving set, sorted, verified
    SolveMethod method = SolveMethod::exact;
    long long trials = 0;  // trials or family members examined
};

const char* method_name(SolveMethod m);

// 4^k; refuses k > 15 so callers do not silently loop for years.
long long default_trials(int k);

// Random bipartition trials, one-sided error: a yes always carries a
// verified witness, a no is wrong with probability <= (1 - 4^-k)^trials.
// The trial-t partition is drawn from SplitMix64(seed + (t+1) * golden),
// bit v = 0 putting vertex v in R, so runs are reproducible everywhere.
// threads > 1 evaluates trials in parallel blocks; the answer is identical
// to the sequential one (lowest successful trial index wins).
SavingAnswer solve_randomized(const SavingInstance& inst, long long trials, std::uint64_t seed,
                              int threads = 1);

// Family of n-bit strings realizing every pattern on every t positions.
struct UniversalFamily {
    int n = 0;
    int t = 0;
    std::vector<std::string> members;  // '0'/'1', position v = character v
};

// Full enumeration when n <= t + 4, otherwise a derandomized greedy cover
// of all (index-set, pattern) constraints; both satisfy the covering
// invariant exactly.
UniversalFamily universal_family(int n, int t);

// Tries the partitions induced by universal_family(n, 2k) ('0' -> R,
// '1' -> B). Deterministically correct in both directions. Falls back to
// solve_exact_dual when 2k > n.
SavingAnswer solve_derandomized(const SavingInstance& inst);

// Oracle route: metric_dimension_exact and the comparison md <= n - k.
// Witness is the full complement of the minimum resolving set.
SavingAnswer solve_exact_dual(const SavingInstance& inst,
                              Engine engine = Engine::branch_and_bound);

// Kernel-first pipeline: a trivial-yes kernel short-circuits with its
// certificate; otherwise the reduced instance is solved by the
// derandomized algorithm and the witness lifted back to input ids.
SavingAnswer solve_saving_auto(const SavingInstance& inst);

}  // namespace mdim

#endif
