#ifndef MDIM_REDUCTIONS_HPP
#define MDIM_REDUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// Universe 0..n-1, a family of nonempty subsets, and a budget. Families are
// stored deduplicated with sorted members.
struct HittingSetInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> family;
    int budget = 0;
};

// Validates element ranges, rejects empty sets, sorts and deduplicates.
HittingSetInstance make_hitting_set_instance(int universe_size,
                                             std::vector<std::vector<int>> family, int budget);

// Exact solver by subset enumeration with unit-set forcing; meant for
// universes up to ~20 elements. Returns a hitting set of size <= budget or
// nullopt.
std::optional<std::vector<int>> hitting_set_exact(const HittingSetInstance& inst);

enum class Role { U, F, Fp, IU, IUp, IF, IFp, aU, aUp, a, ap, aF, aFp };

const char* role_name(Role r);

struct ReductionOutput {
    Graph g;
    std::vector<int> vertex_cover;  // X = V minus (F union F'), sorted
    int k = 0;                      // budget + t_n + t_m + 3
    std::vector<Role> roles;        // per vertex
    int t_n = 0;                    // 2 * ceil(log2 n)
    int t_m = 0;                    // 2 * ceil(log2 m)
};

// Hard-instance generator: encodes a hitting-set instance as a metric
// dimension question with vertex cover X and budget k. Vertex ids run in
// role order U, F, F', I_U, I'_U, I_F, I'_F, a_U, a'_U, a, a', a_F, a'_F.
// Requires n >= 2 and m >= 2 after deduplication.
ReductionOutput reduce_to_metric_dimension(const HittingSetInstance& inst);

struct ReductionCheck {
    bool hs_yes = false;
    bool md_yes = false;
    bool agree = false;
};

// Runs both exact solvers and compares. Refuses instances beyond the
// documented budget (n <= 3, m <= 3) since the metric side is exponential.
ReductionCheck verify_reduction(const HittingSetInstance& inst);

}  // namespace mdim

#endif
