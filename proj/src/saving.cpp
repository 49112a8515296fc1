#include "mdim/saving.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <future>
#include <string>

#include "mdim/error.hpp"
#include "mdim/rng.hpp"
#include "mdim/twins.hpp"

namespace mdim {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

long long cube8(int k) { return 8LL * k * k * k; }

long long quart8(int k) {
    if (k >= 256) return LLONG_MAX;  // larger than any representable graph anyway
    return 8LL * k * k * k * k;
}

void require_nonnegative_k(int k) {
    if (k < 0) throw Error("parameter k must be nonnegative, got " + std::to_string(k));
}

}  // namespace

int tau(const Graph& g, int u, int v) {
    check_vertex_range(g, u);
    check_vertex_range(g, v);
    const auto& a = g.adj[u];
    const auto& b = g.adj[v];
    std::size_t i = 0, j = 0;
    int diff = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i, ++j;
        } else if (a[i] < b[j]) {
            ++diff, ++i;
        } else {
            ++diff, ++j;
        }
    }
    diff += static_cast<int>((a.size() - i) + (b.size() - j));
    return diff;
}

AuxGraph build_aux_graph(const Graph& g, int k) {
    require_nonnegative_k(k);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (tau(g, u, v) <= k) edges.emplace_back(u, v);
    return AuxGraph{build_graph(g.n, edges), k};
}

namespace {

// Both homogeneous-set branches, reusing an already-built H.
std::optional<HomogeneousSet> find_homogeneous_impl(const Graph& g, const Graph& h, int k) {
    long long deg_threshold = cube8(k);
    int center = -1;
    for (int v = 0; v < h.n; ++v) {
        if (h.degree(v) >= deg_threshold) {
            center = v;
            break;
        }
    }
    if (center < 0) return std::nullopt;

    std::vector<int> s = h.adj[center];
    s.insert(std::lower_bound(s.begin(), s.end(), center), center);
    std::vector<bool> in_s(g.n, false);
    for (int v : s) in_s[v] = true;

    auto degree_in_s = [&](int v) {
        int d = 0;
        for (int w : g.adj[v])
            if (in_s[w]) ++d;
        return d;
    };

    long long dense = 4LL * k * k;
    int heavy = -1;
    for (int v : s) {
        if (degree_in_s(v) >= dense) {
            heavy = v;
            break;
        }
    }

    std::size_t want = 2 * static_cast<std::size_t>(k);
    HomogeneousSet out;
    if (heavy < 0) {
        // sparse case: pack closed neighborhoods, smallest ids first
        out.kind = HomogeneousKind::independent_set;
        std::vector<bool> blocked(g.n, false);
        for (int v : s) {
            if (blocked[v]) continue;
            out.vertices.push_back(v);
            if (out.vertices.size() == want && want > 0) break;
            blocked[v] = true;
            for (int w : g.adj[v])
                if (in_s[w]) blocked[w] = true;
        }
    } else {
        // dense case: repeatedly intersect neighborhoods inside g[S]
        out.kind = HomogeneousKind::clique;
        std::vector<int> common;
        for (int w : g.adj[heavy])
            if (in_s[w]) common.push_back(w);
        out.vertices.push_back(heavy);
        while (!common.empty() && out.vertices.size() < std::max<std::size_t>(want, 1)) {
            int u = common.front();
            out.vertices.push_back(u);
            std::vector<int> next;
            for (int w : common)
                if (w != u && g.has_edge(u, w)) next.push_back(w);
            common = std::move(next);
        }
    }
    if (out.vertices.size() < want)
        throw InternalError("homogeneous set extraction fell short of 2k vertices");
    out.vertices.resize(want);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

bool is_pruned(const Graph& g) {
    for (const auto& c : twin_classes(g))
        if (c.vertices.size() > 2) return false;
    return true;
}

}  // namespace

std::optional<HomogeneousSet> find_homogeneous_2k(const Graph& g, int k) {
    require_nonnegative_k(k);
    return find_homogeneous_impl(g, build_aux_graph(g, k).h, k);
}

std::vector<int> co_resolving_from_homogeneous(const Graph& g, const std::vector<int>& x, int k) {
    require_nonnegative_k(k);
    check_vertex_set(g, x);
    std::vector<int> xs = x;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() != x.size() || static_cast<int>(xs.size()) != 2 * k)
        throw Error("homogeneous set must have exactly 2k = " + std::to_string(2 * k) +
                    " distinct vertices, got " + std::to_string(x.size()));
    if (!is_pruned(g)) throw Error("graph must be pruned (twin classes of size at most 2)");

    bool clique = true, independent = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (g.has_edge(xs[i], xs[j]))
                independent = false;
            else
                clique = false;
        }
    }
    if (!clique && !independent)
        throw Error("set is neither a clique nor an independent set in g");

    std::vector<bool> in_x(g.n, false);
    for (int v : xs) in_x[v] = true;
    std::vector<int> reps;
    for (const auto& cls : twin_classes(g)) {
        for (int v : cls.vertices) {
            if (in_x[v]) {
                reps.push_back(v);  // members are sorted, so this is the smallest
                break;
            }
        }
    }
    std::sort(reps.begin(), reps.end());
    if (static_cast<int>(reps.size()) < k)
        throw InternalError("fewer than k twin classes meet the homogeneous set");

    std::vector<bool> in_reps(g.n, false);
    for (int v : reps) in_reps[v] = true;
    std::vector<int> complement;
    for (int v = 0; v < g.n; ++v)
        if (!in_reps[v]) complement.push_back(v);
    if (!is_resolving(g, complement).resolved)
        throw InternalError("complement of homogeneous representatives fails to resolve");
    return reps;
}

KernelOutcome kernelize(const SavingInstance& inst) {
    require_nonnegative_k(inst.k);
    ensure_connected(inst.g);
    int k = inst.k;

    auto pr = prune(inst.g);
    const Graph& gt = pr.pruned;
    auto aux = build_aux_graph(gt, k);

    auto lift = [&pr](std::vector<int> ids) {
        for (int& v : ids) v = pr.kept_map[v];
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    auto trivial_yes = [&](std::vector<int> cert_pruned_ids) {
        KernelOutcome out;
        out.verdict = KernelVerdict::trivial_yes;
        out.instance = SavingInstance{build_graph(1, {}), 1};
        out.certificate = lift(std::move(cert_pruned_ids));
        return out;
    };

    long long deg_threshold = cube8(k);
    bool high_degree = false;
    for (int v = 0; v < aux.h.n; ++v) {
        if (aux.h.degree(v) >= deg_threshold) {
            high_degree = true;
            break;
        }
    }
    if (high_degree) {
        auto hom = find_homogeneous_impl(gt, aux.h, k);
        if (!hom) throw InternalError("high-degree H vertex vanished between checks");
        return trivial_yes(co_resolving_from_homogeneous(gt, hom->vertices, k));
    }

    if (static_cast<long long>(gt.n) >= quart8(k)) {
        // H has max degree < 8k^3 here, so greedy packing reaches k vertices.
        std::vector<int> indep;
        std::vector<bool> blocked(gt.n, false);
        for (int v = 0; v < gt.n && static_cast<int>(indep.size()) < k; ++v) {
            if (blocked[v]) continue;
            indep.push_back(v);
            blocked[v] = true;
            for (int w : aux.h.adj[v]) blocked[w] = true;
        }
        if (static_cast<int>(indep.size()) < k)
            throw InternalError("greedy independent set in H fell short of k");
        std::vector<bool> in_set(gt.n, false);
        for (int v : indep) in_set[v] = true;
        std::vector<int> complement;
        for (int v = 0; v < gt.n; ++v)
            if (!in_set[v]) complement.push_back(v);
        if (!is_resolving(gt, complement).resolved)
            throw InternalError("complement of H-independent set fails to resolve");
        return trivial_yes(std::move(indep));
    }

    KernelOutcome out;
    out.verdict = KernelVerdict::reduced;
    out.instance = SavingInstance{gt, k};
    return out;
}

std::pair<int, EquidistancePartition> count_partition_classes(const Graph& g, const Partition& p) {
    check_vertex_set(g, p.r);
    check_vertex_set(g, p.b);
    std::vector<bool> seen(g.n, false);
    for (int v : p.r) {
        if (seen[v]) throw Error("partition side R repeats vertex " + std::to_string(v));
        seen[v] = true;
    }
    for (int v : p.b) {
        if (seen[v]) throw Error("vertex " + std::to_string(v) + " appears on both sides");
        seen[v] = true;
    }
    for (int v = 0; v < g.n; ++v)
        if (!seen[v]) throw Error("vertex " + std::to_string(v) + " is on neither side");
    auto part = equidistance_classes(g, p.b, p.r);
    return {part.count(), std::move(part)};
}

const char* method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::exact: return "exact";
        case SolveMethod::randomized: return "randomized";
        case SolveMethod::derandomized: return "derandomized";
        case SolveMethod::kernel_shortcut: return "kernel-shortcut";
    }
    return "?";
}

long long default_trials(int k) {
    require_nonnegative_k(k);
    if (k > 15)
        throw Error("default trial count 4^" + std::to_string(k) +
                    " exceeds the overflow guard (k > 15); pass --trials explicitly");
    return 1LL << (2 * k);
}

namespace {

// R side of the trial-index'th random bipartition.
std::vector<int> trial_partition_r(int n, std::uint64_t seed, long long trial) {
    SplitMix64 rng(seed + (static_cast<std::uint64_t>(trial) + 1) * kGolden);
    std::vector<int> r;
    std::uint64_t word = 0;
    for (int v = 0; v < n; ++v) {
        if (v % 64 == 0) word = rng.next();
        if (((word >> (v % 64)) & 1) == 0) r.push_back(v);
    }
    return r;
}

std::vector<int> complement_of(int n, const std::vector<int>& sorted_set) {
    std::vector<int> out;
    out.reserve(n - sorted_set.size());
    std::size_t i = 0;
    for (int v = 0; v < n; ++v) {
        if (i < sorted_set.size() && sorted_set[i] == v)
            ++i;
        else
            out.push_back(v);
    }
    return out;
}

// Witness = one representative (smallest id) per B-equidistance class in R.
std::optional<std::vector<int>> witness_from_partition(const Graph& g, const DistanceMatrix& dm,
                                                       const std::vector<int>& r, int k) {
    auto part = equidistance_classes(g, dm, complement_of(g.n, r), r);
    if (part.count() < k) return std::nullopt;
    std::vector<int> reps;
    reps.reserve(part.classes.size());
    for (const auto& cls : part.classes) reps.push_back(cls[0]);
    std::sort(reps.begin(), reps.end());
    if (!is_resolving(g, dm, complement_of(g.n, reps)).resolved)
        throw InternalError("partition-class representatives fail verification");
    return reps;
}

}  // namespace

SavingAnswer solve_randomized(const SavingInstance& inst, long long trials, std::uint64_t seed,
                              int threads) {
    require_nonnegative_k(inst.k);
    if (trials < 1) throw Error("trial count must be at least 1, got " + std::to_string(trials));
    ensure_connected(inst.g);
    auto dm = all_pairs_distances(inst.g);
    const Graph& g = inst.g;
    int k = inst.k;

    auto run_trial = [&](long long t) -> std::optional<std::vector<int>> {
        return witness_from_partition(g, dm, trial_partition_r(g.n, seed, t), k);
    };

    SavingAnswer ans;
    ans.method = SolveMethod::randomized;
    if (threads <= 1) {
        for (long long t = 0; t < trials; ++t) {
            auto w = run_trial(t);
            if (w) {
                ans.yes = true;
                ans.witness = std::move(w);
                ans.trials = t + 1;
                return ans;
            }
        }
        ans.trials = trials;
        return ans;
    }

    // Parallel blocks; the lowest successful trial index wins, so the answer
    // matches the sequential order exactly.
    const long long block = static_cast<long long>(threads) * 64;
    for (long long base = 0; base < trials; base += block) {
        long long end = std::min(trials, base + block);
        long long chunk = (end - base + threads - 1) / threads;
        std::vector<std::future<long long>> futs;
        for (int w = 0; w < threads; ++w) {
            long long lo = base + w * chunk, hi = std::min(end, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, [&, lo, hi]() -> long long {
                for (long long t = lo; t < hi; ++t)
                    if (run_trial(t)) return t;
                return -1;
            }));
        }
        long long hit = -1;
        for (auto& f : futs) {
            long long t = f.get();
            if (t >= 0 && (hit < 0 || t < hit)) hit = t;
        }
        if (hit >= 0) {
            ans.yes = true;
            ans.witness = run_trial(hit);
            ans.trials = hit + 1;
            return ans;
        }
    }
    ans.trials = trials;
    return ans;
}

UniversalFamily universal_family(int n, int t) {
    if (n < 0 || t < 0) throw Error("universal family needs nonnegative n and t");
    if (t > n)
        throw Error("strength " + std::to_string(t) + " exceeds ground-set size " +
                    std::to_string(n));
    UniversalFamily fam;
    fam.n = n;
    fam.t = t;

    if (n <= t + 4) {
        if (n > 22) throw Error("full enumeration of 2^" + std::to_string(n) + " strings refused");
        fam.members.reserve(1u << n);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::string s(n, '0');
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) s[v] = '1';
            fam.members.push_back(std::move(s));
        }
        return fam;
    }

    // Greedy cover by the method of conditional expectations: build each
    // string bit by bit, keeping the expected number of newly covered
    // (index-set, pattern) constraints maximal. Every string covers at
    // least a 2^-t fraction of what is uncovered, so the loop terminates.
    struct Constraint {
        std::vector<int> idx;     // sorted positions, |idx| == t
        std::uint32_t pattern;    // bit j = required value at idx[j]
        bool covered = false;
    };

    double combos = 1;
    for (int i = 0; i < t; ++i) combos = combos * (n - i) / (i + 1);
    double total = combos * std::pow(2.0, t);
    if (total > 1u << 26)
        throw Error("universal family constraint table for n=" + std::to_string(n) +
                    ", t=" + std::to_string(t) + " is too large; use the randomized solver");

    std::vector<Constraint> cons;
    std::vector<int> comb(t);
    for (int i = 0; i < t; ++i) comb[i] = i;
    for (;;) {
        for (std::uint32_t p = 0; p < (1u << t); ++p) cons.push_back({comb, p, false});
        int i = t - 1;
        while (i >= 0 && comb[i] == n - t + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < t; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (cons.empty()) cons.push_back({{}, 0, false});  // t == 0

    // constraints touching each position
    std::vector<std::vector<int>> at_pos(n);
    for (std::size_t c = 0; c < cons.size(); ++c)
        for (int p : cons[c].idx) at_pos[p].push_back(static_cast<int>(c));

    std::size_t uncovered = cons.size();
    std::vector<bool> alive(cons.size());
    std::vector<int> undecided(cons.size());
    while (uncovered > 0) {
        for (std::size_t c = 0; c < cons.size(); ++c) {
            alive[c] = !cons[c].covered;
            undecided[c] = t;
        }
        std::string s(n, '0');
        for (int pos = 0; pos < n; ++pos) {
            double gain0 = 0, gain1 = 0;
            for (int c : at_pos[pos]) {
                if (!alive[c]) continue;
                const auto& con = cons[c];
                int j = static_cast<int>(std::lower_bound(con.idx.begin(), con.idx.end(), pos) -
                                         con.idx.begin());
                double score = std::ldexp(1.0, -undecided[c]);
                if ((con.pattern >> j) & 1)
                    gain1 += score;
                else
                    gain0 += score;
            }
            char bit = gain1 > gain0 ? '1' : '0';
            s[pos] = bit;
            for (int c : at_pos[pos]) {
                if (!alive[c]) continue;
                const auto& con = cons[c];
                int j = static_cast<int>(std::lower_bound(con.idx.begin(), con.idx.end(), pos) -
                                         con.idx.begin());
                char want = ((con.pattern >> j) & 1) ? '1' : '0';
                if (want == bit)
                    --undecided[c];
                else
                    alive[c] = false;
            }
        }
        std::size_t newly = 0;
        for (std::size_t c = 0; c < cons.size(); ++c) {
            if (alive[c] && undecided[c] == 0 && !cons[c].covered) {
                cons[c].covered = true;
                ++newly;
            }
        }
        if (newly == 0) throw InternalError("greedy universal-set step covered nothing");
        uncovered -= newly;
        fam.members.push_back(std::move(s));
    }
    return fam;
}

SavingAnswer solve_derandomized(const SavingInstance& inst) {
    require_nonnegative_k(inst.k);
    ensure_connected(inst.g);
    int k = inst.k;
    if (k > 15)
        throw Error("derandomized sweep for k=" + std::to_string(k) +
                    " exceeds the overflow guard (k > 15)");
    if (2 * k > inst.g.n) return solve_exact_dual(inst);

    auto dm = all_pairs_distances(inst.g);
    auto fam = universal_family(inst.g.n, 2 * k);
    SavingAnswer ans;
    ans.method = SolveMethod::derandomized;
    long long tried = 0;
    for (const auto& member : fam.members) {
        ++tried;
        std::vector<int> r;
        for (int v = 0; v < inst.g.n; ++v)
            if (member[v] == '0') r.push_back(v);
        auto w = witness_from_partition(inst.g, dm, r, k);
        if (w) {
            ans.yes = true;
            ans.witness = std::move(w);
            ans.trials = tried;
            return ans;
        }
    }
    ans.trials = tried;
    return ans;
}

SavingAnswer solve_exact_dual(const SavingInstance& inst, Engine engine) {
    require_nonnegative_k(inst.k);
    ensure_connected(inst.g);
    auto md = metric_dimension_exact(inst.g, engine);
    SavingAnswer ans;
    ans.method = SolveMethod::exact;
    ans.yes = md.md <= inst.g.n - inst.k;
    if (ans.yes) {
        std::vector<int> sorted_witness = md.witness;
        std::sort(sorted_witness.begin(), sorted_witness.end());
        ans.witness = complement_of(inst.g.n, sorted_witness);
    }
    return ans;
}

SavingAnswer solve_saving_auto(const SavingInstance& inst) {
    require_nonnegative_k(inst.k);
    ensure_connected(inst.g);
    auto outcome = kernelize(inst);
    if (outcome.verdict == KernelVerdict::trivial_yes) {
        SavingAnswer ans;
        ans.method = SolveMethod::kernel_shortcut;
        ans.yes = true;
        ans.witness = *outcome.certificate;
        if (!is_resolving(inst.g, complement_of(inst.g.n, *ans.witness)).resolved)
            throw InternalError("kernel certificate fails verification on the input graph");
        return ans;
    }

    auto pr = prune(inst.g);
    auto ans = solve_derandomized(SavingInstance{pr.pruned, inst.k});
    if (ans.yes) {
        for (int& v : *ans.witness) v = pr.kept_map[v];
        std::sort(ans.witness->begin(), ans.witness->end());
        if (!is_resolving(inst.g, complement_of(inst.g.n, *ans.witness)).resolved)
            throw InternalError("lifted witness fails verification on the input graph");
    }
    return ans;
}

}  // namespace mdim
