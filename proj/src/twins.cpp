#include "mdim/twins.hpp"

#include <algorithm>
#include <numeric>

namespace mdim {

namespace {

// Groups vertices by fingerprint, keeps groups of size >= 2, marks their
// members in used. fp(v) must already be sorted.
void collect_groups(int n, const std::vector<std::vector<int>>& fp, TwinKind kind,
                    std::vector<bool>& used, std::vector<TwinClass>& out) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (fp[a] != fp[b]) return fp[a] < fp[b];
        return a < b;
    });
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && fp[order[j]] == fp[order[i]]) ++j;
        if (j - i >= 2) {
            TwinClass c;
            c.kind = kind;
            for (int t = i; t < j; ++t) {
                c.vertices.push_back(order[t]);
                used[order[t]] = true;
            }
            std::sort(c.vertices.begin(), c.vertices.end());
            out.push_back(std::move(c));
        }
        i = j;
    }
}

}  // namespace

std::vector<TwinClass> twin_classes(const Graph& g) {
    int n = g.n;
    std::vector<TwinClass> classes;
    std::vector<bool> used(n, false);

    // False twins: equal open neighborhoods (such vertices are nonadjacent,
    // so the groups never overlap with true-twin groups).
    collect_groups(n, g.adj, TwinKind::false_twin, used, classes);

    std::vector<std::vector<int>> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = g.adj[v];
        closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
    }
    collect_groups(n, closed, TwinKind::true_twin, used, classes);

    for (int v = 0; v < n; ++v) {
        if (!used[v]) {
            TwinClass c;
            c.kind = TwinKind::singleton;
            c.vertices = {v};
            classes.push_back(std::move(c));
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const TwinClass& a, const TwinClass& b) { return a.vertices[0] < b.vertices[0]; });
    return classes;
}

PruneResult prune(const Graph& g) {
    Graph cur = g;
    std::vector<int> to_orig(cur.n);
    std::iota(to_orig.begin(), to_orig.end(), 0);

    for (;;) {
        auto classes = twin_classes(cur);
        std::vector<bool> drop(cur.n, false);
        bool any = false;
        for (const auto& c : classes) {
            if (c.vertices.size() >= 3) {
                any = true;
                // keep the two lowest-numbered members
                for (std::size_t i = 2; i < c.vertices.size(); ++i) drop[c.vertices[i]] = true;
            }
        }
        if (!any) break;

        std::vector<int> remap(cur.n, -1);
        std::vector<int> next_to_orig;
        int next_n = 0;
        for (int v = 0; v < cur.n; ++v) {
            if (!drop[v]) {
                remap[v] = next_n++;
                next_to_orig.push_back(to_orig[v]);
            }
        }
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < cur.n; ++u) {
            if (drop[u]) continue;
            for (int v : cur.adj[u])
                if (u < v && !drop[v]) edges.emplace_back(remap[u], remap[v]);
        }
        cur = build_graph(next_n, edges);
        to_orig = std::move(next_to_orig);
    }

    PruneResult r;
    r.removed = g.n - cur.n;
    r.pruned = std::move(cur);
    r.kept_map = std::move(to_orig);
    return r;
}

}  // namespace mdim
