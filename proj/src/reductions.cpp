#include "mdim/reductions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mdim/error.hpp"
#include "mdim/resolving.hpp"

namespace mdim {

HittingSetInstance make_hitting_set_instance(int universe_size,
                                             std::vector<std::vector<int>> family, int budget) {
    if (universe_size < 0)
        throw Error("universe size must be nonnegative, got " + std::to_string(universe_size));
    if (budget < 0) throw Error("budget must be nonnegative, got " + std::to_string(budget));
    if (family.empty()) throw Error("family must contain at least one set");

    HittingSetInstance inst;
    inst.universe_size = universe_size;
    inst.budget = budget;
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto s = family[i];
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty())
            throw Error("set " + std::to_string(i) + " is empty (unhittable)");
        for (int e : s) {
            if (e < 0 || e >= universe_size)
                throw Error("set " + std::to_string(i) + " contains element " + std::to_string(e) +
                            " outside 0.." + std::to_string(universe_size - 1));
        }
        if (seen.insert(s).second) inst.family.push_back(std::move(s));
    }
    return inst;
}

std::optional<std::vector<int>> hitting_set_exact(const HittingSetInstance& inst) {
    // unit sets force their element
    std::set<int> forced;
    for (const auto& s : inst.family)
        if (s.size() == 1) forced.insert(s[0]);
    if (static_cast<int>(forced.size()) > inst.budget) return std::nullopt;

    std::vector<std::vector<int>> open;  // sets not hit by the forced picks
    for (const auto& s : inst.family) {
        bool hit = false;
        for (int e : s)
            if (forced.count(e)) {
                hit = true;
                break;
            }
        if (!hit) open.push_back(s);
    }

    std::vector<int> result(forced.begin(), forced.end());
    if (open.empty()) return result;

    std::vector<int> candidates;
    {
        std::set<int> cs;
        for (const auto& s : open) cs.insert(s.begin(), s.end());
        candidates.assign(cs.begin(), cs.end());
    }
    int room = inst.budget - static_cast<int>(forced.size());
    int cn = static_cast<int>(candidates.size());

    auto hits_all = [&](const std::vector<int>& picks) {
        for (const auto& s : open) {
            bool hit = false;
            for (int e : s) {
                if (std::binary_search(picks.begin(), picks.end(), e)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    };

    for (int size = 1; size <= std::min(room, cn); ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            std::vector<int> picks(size);
            for (int i = 0; i < size; ++i) picks[i] = candidates[idx[i]];
            if (hits_all(picks)) {
                result.insert(result.end(), picks.begin(), picks.end());
                std::sort(result.begin(), result.end());
                return result;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == cn - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

const char* role_name(Role r) {
    switch (r) {
        case Role::U: return "U";
        case Role::F: return "F";
        case Role::Fp: return "F'";
        case Role::IU: return "I_U";
        case Role::IUp: return "I'_U";
        case Role::IF: return "I_F";
        case Role::IFp: return "I'_F";
        case Role::aU: return "a_U";
        case Role::aUp: return "a'_U";
        case Role::a: return "a";
        case Role::ap: return "a'";
        case Role::aF: return "a_F";
        case Role::aFp: return "a'_F";
    }
    return "?";
}

namespace {

int ceil_log2(int x) {
    int p = 0;
    while ((1 << p) < x) ++p;
    return p;
}

// count distinct half-size subsets of [t] needed: the first one is the low
// half, the second the high half (so together they cover every index), the
// rest follow colexicographic order from its second element.
std::vector<std::vector<int>> coverage_codes(int count, int t) {
    int p = t / 2;
    std::vector<std::vector<int>> codes;
    codes.reserve(count);

    std::vector<int> low(p), high(p);
    for (int i = 0; i < p; ++i) low[i] = i, high[i] = p + i;
    codes.push_back(low);
    if (count >= 2) codes.push_back(high);

    std::vector<int> cur = low;
    auto advance = [&]() {
        int j = 0;
        while (j < p) {
            int limit = (j + 1 < p) ? cur[j + 1] : t;
            if (cur[j] + 1 < limit) break;
            ++j;
        }
        if (j == p) throw InternalError("colex enumeration exhausted early");
        ++cur[j];
        for (int i = 0; i < j; ++i) cur[i] = i;
    };
    for (int i = 2; i < count; ++i) {
        advance();
        codes.push_back(cur);
    }
    return codes;
}

}  // namespace

ReductionOutput reduce_to_metric_dimension(const HittingSetInstance& inst) {
    int n = inst.universe_size;
    int m = static_cast<int>(inst.family.size());
    if (n < 2 || m < 2)
        throw Error("reduction needs a universe and family of size at least 2, got n=" +
                    std::to_string(n) + ", m=" + std::to_string(m) +
                    "; solve degenerate instances directly");

    ReductionOutput out;
    out.t_n = 2 * ceil_log2(n);
    out.t_m = 2 * ceil_log2(m);
    out.k = inst.budget + out.t_n + out.t_m + 3;

    const int base_f = n;
    const int base_fp = n + m;
    const int base_iu = n + 2 * m;
    const int base_iup = base_iu + out.t_n;
    const int base_if = base_iup + out.t_n;
    const int base_ifp = base_if + out.t_m;
    const int apex = base_ifp + out.t_m;  // a_U, a'_U, a, a', a_F, a'_F
    const int a_u = apex, a_up = apex + 1, a_mid = apex + 2, a_midp = apex + 3, a_f = apex + 4,
              a_fp = apex + 5;
    const int total = apex + 6;

    // The doubled vertices (I_U, I_F and the three apices) are built as
    // two-vertex modules: primed copy adjacent to its original and to every
    // neighbor, originals and copies alike. That keeps closed neighborhoods
    // equal even where doubled vertices are adjacent to each other.
    auto prime = [&](int v) -> int {
        if (v >= base_iu && v < base_iup) return v + out.t_n;
        if (v >= base_if && v < base_ifp) return v + out.t_m;
        if (v == a_u || v == a_mid || v == a_f) return v + 1;
        return -1;  // not doubled
    };

    std::vector<std::pair<int, int>> edges;
    auto add_base_edge = [&](int x, int y) {
        int xp = prime(x), yp = prime(y);
        edges.emplace_back(x, y);
        if (xp >= 0) edges.emplace_back(xp, y);
        if (yp >= 0) edges.emplace_back(x, yp);
        if (xp >= 0 && yp >= 0) edges.emplace_back(xp, yp);
    };

    // bipartite incidence between U and F
    for (int j = 0; j < m; ++j)
        for (int e : inst.family[j]) add_base_edge(e, base_f + j);

    // identification codes: distinct half-size neighborhoods in I_U / I_F;
    // F' keeps exactly the non-U part of F's neighborhood, so it shares the
    // codes but not the elements
    auto u_codes = coverage_codes(n, out.t_n);
    for (int u = 0; u < n; ++u)
        for (int idx : u_codes[u]) add_base_edge(u, base_iu + idx);
    auto f_codes = coverage_codes(m, out.t_m);
    for (int j = 0; j < m; ++j)
        for (int idx : f_codes[j]) {
            add_base_edge(base_f + j, base_if + idx);
            add_base_edge(base_fp + j, base_if + idx);
        }

    // apices: a_U over U, a_F over F and F', and a over U, F, F', I_U and
    // a_U. The I_U and a_U edges put all of F and F' at distance exactly two
    // from every vertex of I_U, I'_U, a_U, a'_U (through a or a'), so those
    // vertices cannot tell R from R'; only hitting-set elements can.
    for (int u = 0; u < n; ++u) {
        add_base_edge(u, a_u);
        add_base_edge(u, a_mid);
    }
    for (int j = 0; j < m; ++j) {
        add_base_edge(base_f + j, a_mid);
        add_base_edge(base_fp + j, a_mid);
        add_base_edge(base_f + j, a_f);
        add_base_edge(base_fp + j, a_f);
    }
    for (int i = 0; i < out.t_n; ++i) add_base_edge(base_iu + i, a_mid);
    add_base_edge(a_u, a_mid);

    // twin edges inside each module
    for (int v = 0; v < total; ++v)
        if (prime(v) >= 0) edges.emplace_back(v, prime(v));

    out.g = build_graph(total, edges);

    out.roles.assign(total, Role::U);
    for (int j = 0; j < m; ++j) out.roles[base_f + j] = Role::F;
    for (int j = 0; j < m; ++j) out.roles[base_fp + j] = Role::Fp;
    for (int i = 0; i < out.t_n; ++i) out.roles[base_iu + i] = Role::IU;
    for (int i = 0; i < out.t_n; ++i) out.roles[base_iup + i] = Role::IUp;
    for (int i = 0; i < out.t_m; ++i) out.roles[base_if + i] = Role::IF;
    for (int i = 0; i < out.t_m; ++i) out.roles[base_ifp + i] = Role::IFp;
    out.roles[a_u] = Role::aU;
    out.roles[a_up] = Role::aUp;
    out.roles[a_mid] = Role::a;
    out.roles[a_midp] = Role::ap;
    out.roles[a_f] = Role::aF;
    out.roles[a_fp] = Role::aFp;

    for (int v = 0; v < total; ++v)
        if (out.roles[v] != Role::F && out.roles[v] != Role::Fp) out.vertex_cover.push_back(v);
    return out;
}

ReductionCheck verify_reduction(const HittingSetInstance& inst) {
    int n = inst.universe_size;
    int m = static_cast<int>(inst.family.size());
    if (n > 3 || m > 3)
        throw Error("verification budget is n <= 3 and m <= 3; got n=" + std::to_string(n) +
                    ", m=" + std::to_string(m));
    ReductionCheck check;
    check.hs_yes = hitting_set_exact(inst).has_value();
    auto red = reduce_to_metric_dimension(inst);
    check.md_yes = has_resolving_set_of_size(red.g, red.k).has_value();
    check.agree = check.hs_yes == check.md_yes;
    return check;
}

}  // namespace mdim
