#include "mdim/resolving.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "mdim/error.hpp"
#include "mdim/twins.hpp"

namespace mdim {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Orders u before v by comparing distance vectors over probes.
struct SignatureLess {
    const DistanceMatrix& dm;
    const std::vector<int>& probes;

    int compare(int u, int v) const {
        for (int w : probes) {
            int a = dm.at(u, w), b = dm.at(v, w);
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }
    bool operator()(int u, int v) const {
        int c = compare(u, v);
        if (c != 0) return c < 0;
        return u < v;
    }
};

}  // namespace

ResolutionCheck is_resolving(const Graph& g, const DistanceMatrix& dm, const std::vector<int>& s) {
    check_vertex_set(g, s);
    ResolutionCheck out;
    if (g.n <= 1) {
        out.resolved = true;
        return out;
    }
    std::vector<int> probes = sorted_unique(s);
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    SignatureLess less{dm, probes};
    std::sort(order.begin(), order.end(), less);

    std::optional<std::pair<int, int>> worst;
    for (int i = 0; i + 1 < g.n;) {
        int j = i + 1;
        while (j < g.n && less.compare(order[i], order[j]) == 0) ++j;
        if (j - i >= 2) {
            int a = *std::min_element(order.begin() + i, order.begin() + j);
            int b = g.n;  // second smallest in the group
            for (int t = i; t < j; ++t)
                if (order[t] != a) b = std::min(b, order[t]);
            std::pair<int, int> cand{a, b};
            if (!worst || cand < *worst) worst = cand;
        }
        i = j;
    }
    out.resolved = !worst.has_value();
    out.unresolved_pair = worst;
    return out;
}

ResolutionCheck is_resolving(const Graph& g, const std::vector<int>& s) {
    check_vertex_set(g, s);
    if (g.n <= 1) return {true, std::nullopt};
    return is_resolving(g, all_pairs_distances(g), s);
}

EquidistancePartition equidistance_classes(const Graph& g, const DistanceMatrix& dm,
                                           const std::vector<int>& probe,
                                           const std::vector<int>& target) {
    check_vertex_set(g, probe);
    check_vertex_set(g, target);
    EquidistancePartition part;
    part.probe = sorted_unique(probe);
    part.target = sorted_unique(target);
    if (part.target.empty()) return part;

    std::vector<int> order = part.target;
    SignatureLess less{dm, part.probe};
    std::sort(order.begin(), order.end(), less);
    int sz = static_cast<int>(order.size());
    for (int i = 0; i < sz;) {
        int j = i + 1;
        while (j < sz && less.compare(order[i], order[j]) == 0) ++j;
        std::vector<int> cls(order.begin() + i, order.begin() + j);
        std::sort(cls.begin(), cls.end());
        part.classes.push_back(std::move(cls));
        i = j;
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    return part;
}

EquidistancePartition equidistance_classes(const Graph& g, const std::vector<int>& probe,
                                           const std::vector<int>& target) {
    check_vertex_set(g, probe);
    check_vertex_set(g, target);
    EquidistancePartition part;
    part.probe = sorted_unique(probe);
    part.target = sorted_unique(target);
    if (part.target.empty()) return part;
    return equidistance_classes(g, all_pairs_distances(g), probe, target);
}

namespace {

// ---- branch and bound ----

using Classes = std::vector<std::vector<int>>;  // only classes of size >= 2

// Splits every class by distance to w; singleton fragments disappear.
Classes refine(const Classes& classes, const DistanceMatrix& dm, int w) {
    Classes next;
    std::vector<std::pair<int, int>> keyed;
    for (const auto& cls : classes) {
        keyed.clear();
        for (int v : cls) keyed.emplace_back(dm.at(v, w), v);
        std::sort(keyed.begin(), keyed.end());
        std::size_t i = 0;
        while (i < keyed.size()) {
            std::size_t j = i + 1;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
            if (j - i >= 2) {
                std::vector<int> part;
                part.reserve(j - i);
                for (std::size_t t = i; t < j; ++t) part.push_back(keyed[t].second);
                next.push_back(std::move(part));
            }
            i = j;
        }
    }
    return next;
}

// Number of currently-unresolved pairs that w would resolve.
long long split_gain(const Classes& classes, const DistanceMatrix& dm, int w) {
    long long gain = 0;
    std::vector<int> buckets;
    for (const auto& cls : classes) {
        buckets.clear();
        for (int v : cls) buckets.push_back(dm.at(v, w));
        std::sort(buckets.begin(), buckets.end());
        long long c = static_cast<long long>(cls.size());
        long long same = 0;
        std::size_t i = 0;
        while (i < buckets.size()) {
            std::size_t j = i + 1;
            while (j < buckets.size() && buckets[j] == buckets[i]) ++j;
            long long p = static_cast<long long>(j - i);
            same += p * (p - 1) / 2;
            i = j;
        }
        gain += c * (c - 1) / 2 - same;
    }
    return gain;
}

std::size_t max_class_size(const Classes& classes) {
    std::size_t mx = 0;
    for (const auto& c : classes) mx = std::max(mx, c.size());
    return mx;
}

// Can `budget` more probes split a class of size mx? Each probe separates a
// class into at most diameter+1 buckets.
bool budget_sufficient(std::size_t mx, int budget, int diameter) {
    long double cap = 1;
    for (int i = 0; i < budget; ++i) {
        cap *= diameter + 1;
        if (cap >= static_cast<long double>(mx)) return true;
    }
    return cap >= static_cast<long double>(mx);
}

struct BnbSearch {
    const DistanceMatrix& dm;
    int diameter;
    SearchStats* stats;

    std::optional<std::vector<int>> run(std::vector<int>& chosen, const Classes& classes,
                                        const std::vector<int>& candidates, int budget) {
        if (stats) ++stats->nodes;
        if (classes.empty()) return chosen;
        if (budget == 0) return std::nullopt;
        if (!budget_sufficient(max_class_size(classes), budget, diameter)) return std::nullopt;

        // Rank candidates by how many unresolved pairs they split, dropping
        // the useless ones for the whole subtree (a vertex that splits no
        // current class can never split a subclass later).
        std::vector<std::pair<long long, int>> ranked;
        ranked.reserve(candidates.size());
        for (int w : candidates) {
            long long gain = split_gain(classes, dm, w);
            if (gain > 0) ranked.emplace_back(gain, w);
        }
        if (ranked.empty()) return std::nullopt;
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });

        std::vector<int> rest;
        rest.reserve(ranked.size());
        for (std::size_t i = 1; i < ranked.size(); ++i) rest.push_back(ranked[i].second);

        for (std::size_t i = 0; i < ranked.size(); ++i) {
            int w = ranked[i].second;
            chosen.push_back(w);
            auto hit = run(chosen, refine(classes, dm, w), rest, budget - 1);
            if (hit) return hit;
            chosen.pop_back();
            // exclude w below: any solution through w was reachable above
            if (i + 1 < ranked.size()) rest.erase(rest.begin());
        }
        return std::nullopt;
    }
};

std::optional<std::vector<int>> solve_bnb(const Graph& g, int k, SearchStats* stats) {
    auto dm = all_pairs_distances(g);

    // From every twin class of size s >= 2, s-1 members are mandatory in any
    // resolving set; keep the lowest-numbered one out. Twin symmetry makes
    // this restriction lossless.
    std::vector<int> forced;
    for (const auto& cls : twin_classes(g)) {
        for (std::size_t i = 1; i < cls.vertices.size(); ++i) forced.push_back(cls.vertices[i]);
    }
    std::sort(forced.begin(), forced.end());
    if (static_cast<int>(forced.size()) > k) return std::nullopt;

    Classes classes;
    {
        std::vector<int> all(g.n);
        for (int v = 0; v < g.n; ++v) all[v] = v;
        classes.push_back(std::move(all));
    }
    for (int w : forced) classes = refine(classes, dm, w);

    std::vector<int> candidates;
    {
        std::vector<bool> in_forced(g.n, false);
        for (int w : forced) in_forced[w] = true;
        for (int v = 0; v < g.n; ++v)
            if (!in_forced[v]) candidates.push_back(v);
    }

    BnbSearch search{dm, dm.diameter(), stats};
    std::vector<int> chosen = forced;
    auto hit = search.run(chosen, classes, candidates, k - static_cast<int>(forced.size()));
    if (!hit) return std::nullopt;
    std::sort(hit->begin(), hit->end());
    return hit;
}

// ---- enumeration oracle ----

// Tests subsets by size, combinations in lexicographic order; entirely
// independent of the twin-forced search above.
std::optional<std::vector<int>> solve_enumerate(const Graph& g, int k, SearchStats* stats) {
    auto dm = all_pairs_distances(g);
    int n = g.n;

    auto resolves = [&](const std::vector<int>& subset) {
        if (stats) ++stats->nodes;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                bool split = false;
                for (int w : subset) {
                    if (dm.at(u, w) != dm.at(v, w)) {
                        split = true;
                        break;
                    }
                }
                if (!split) return false;
            }
        }
        return true;
    };

    for (int size = 0; size <= std::min(k, n); ++size) {
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        for (;;) {
            if (resolves(comb)) return comb;
            // next combination
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> has_resolving_set_of_size(const Graph& g, int k, Engine engine,
                                                          SearchStats* stats) {
    if (k < 0) throw Error("resolving-set budget must be nonnegative, got " + std::to_string(k));
    if (g.n <= 1) return std::vector<int>{};  // the empty set resolves vacuously
    if (engine == Engine::enumerate) return solve_enumerate(g, k, stats);
    return solve_bnb(g, k, stats);
}

MdResult metric_dimension_exact(const Graph& g, Engine engine, SearchStats* stats) {
    MdResult r;
    if (g.n <= 1) return r;
    auto dm = all_pairs_distances(g);  // rejects disconnected inputs up front
    (void)dm;
    for (int k = 1; k < g.n; ++k) {
        auto hit = has_resolving_set_of_size(g, k, engine, stats);
        if (hit) {
            r.md = static_cast<int>(hit->size());
            r.witness = std::move(*hit);
            return r;
        }
    }
    // V minus any single vertex always resolves a connected graph, so the
    // loop cannot fall through.
    throw InternalError("no resolving set of size n-1 found; solver is broken");
}

std::vector<int> resolve_witness(const Graph& g, const std::vector<int>& t) {
    check_vertex_set(g, t);
    std::vector<int> target = sorted_unique(t);
    if (g.n == 0) return {};
    auto dm = all_pairs_distances(g);

    std::vector<bool> in_t(g.n, false);
    for (int v : target) in_t[v] = true;
    std::vector<int> complement;
    for (int v = 0; v < g.n; ++v)
        if (!in_t[v]) complement.push_back(v);

    auto pre = is_resolving(g, dm, complement);
    if (!pre.resolved) {
        auto [a, b] = *pre.unresolved_pair;
        throw Error("set is not co-resolving: complement leaves pair (" + std::to_string(a) +
                    ", " + std::to_string(b) + ") unresolved");
    }

    if (target.size() < 2) return {};
    std::vector<int> s;
    Classes classes{target};
    for (;;) {
        // lexicographically smallest unresolved pair
        const std::vector<int>* best = nullptr;
        for (const auto& cls : classes) {
            if (cls.size() >= 2 && (!best || cls[0] < (*best)[0])) best = &cls;
        }
        if (!best) break;
        int u = (*best)[0], v = (*best)[1];
        int w = -1;
        for (int cand : complement) {
            if (dm.at(u, cand) != dm.at(v, cand)) {
                w = cand;
                break;
            }
        }
        if (w < 0)
            throw InternalError("no distinguishing vertex for a pair despite co-resolving check");
        s.push_back(w);
        classes = refine(classes, dm, w);
    }
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace mdim
