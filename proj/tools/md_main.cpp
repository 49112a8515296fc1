// md: metric dimension toolkit. Subcommands cover the exact solvers, twin
// pruning, the dual-parameter kernel and solvers, the hitting-set instance
// generator, and verification sweeps. Results go to stdout as stable
// key:value lines (or one JSON object with --json); timings and diagnostics
// go to stderr.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdim/error.hpp"
#include "mdim/gen.hpp"
#include "mdim/io.hpp"
#include "mdim/reductions.hpp"
#include "mdim/resolving.hpp"
#include "mdim/rng.hpp"
#include "mdim/saving.hpp"
#include "mdim/twins.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    bool json = false;
    std::uint64_t seed = 0;
    int threads = 1;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json graph_json(const mdim::Graph& g) {
    ordered_json j;
    j["n"] = g.n;
    j["m"] = g.m;
    auto edges = ordered_json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

void emit(const GlobalOpts& opts, const std::vector<std::string>& text_lines,
          const ordered_json& j) {
    if (opts.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& line : text_lines) std::cout << line << '\n';
    }
}

mdim::Graph load_graph(const std::string& path) {
    return mdim::parse_graph(mdim::read_text_file(path));
}

std::string kind_name(mdim::TwinKind k) {
    switch (k) {
        case mdim::TwinKind::true_twin: return "true-twin";
        case mdim::TwinKind::false_twin: return "false-twin";
        case mdim::TwinKind::singleton: return "singleton";
    }
    return "?";
}

// ---- subcommand bodies ----

int cmd_solve(const GlobalOpts& opts, const std::string& path) {
    auto g = load_graph(path);
    mdim::SearchStats stats;
    auto r = mdim::metric_dimension_exact(g, mdim::Engine::branch_and_bound, &stats);
    ordered_json j;
    j["n"] = g.n;
    j["m"] = g.m;
    j["md"] = r.md;
    j["witness"] = r.witness;
    j["method"] = "bnb";
    j["nodes"] = stats.nodes;
    emit(opts,
         {"n: " + std::to_string(g.n), "m: " + std::to_string(g.m),
          "md: " + std::to_string(r.md), "witness: " + mdim::format_id_list(r.witness),
          "method: bnb", "nodes: " + std::to_string(stats.nodes)},
         j);
    return 0;
}

int cmd_check(const GlobalOpts& opts, const std::string& path, const std::vector<int>& set) {
    auto g = load_graph(path);
    auto check = mdim::is_resolving(g, set);
    ordered_json j;
    j["n"] = g.n;
    j["m"] = g.m;
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    j["set"] = sorted;
    j["resolved"] = check.resolved;
    std::vector<std::string> lines{"n: " + std::to_string(g.n), "m: " + std::to_string(g.m),
                                   "set: " + mdim::format_id_list(sorted),
                                   "resolved: " + yes_no(check.resolved)};
    if (check.unresolved_pair) {
        auto [a, b] = *check.unresolved_pair;
        j["unresolved_pair"] = {a, b};
        lines.push_back("unresolved_pair: " + std::to_string(a) + " " + std::to_string(b));
    }
    emit(opts, lines, j);
    return check.resolved ? 0 : 1;
}

int cmd_twins(const GlobalOpts& opts, const std::string& path) {
    auto g = load_graph(path);
    auto classes = mdim::twin_classes(g);
    ordered_json j;
    j["n"] = g.n;
    j["m"] = g.m;
    j["classes"] = classes.size();
    auto arr = ordered_json::array();
    std::vector<std::string> lines{"n: " + std::to_string(g.n), "m: " + std::to_string(g.m),
                                   "classes: " + std::to_string(classes.size())};
    for (const auto& c : classes) {
        ordered_json cj;
        cj["kind"] = kind_name(c.kind);
        cj["vertices"] = c.vertices;
        arr.push_back(std::move(cj));
        lines.push_back("class: " + std::string(kind_name(c.kind)) + " " +
                        mdim::format_id_list(c.vertices));
    }
    j["class_list"] = std::move(arr);
    emit(opts, lines, j);
    return 0;
}

int cmd_prune(const GlobalOpts& opts, const std::string& path) {
    auto g = load_graph(path);
    auto pr = mdim::prune(g);
    if (opts.json) {
        ordered_json j = graph_json(pr.pruned);
        j["removed"] = pr.removed;
        j["kept_map"] = pr.kept_map;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "# removed: " << pr.removed << '\n';
        std::cout << "# kept_map: " << mdim::format_id_list(pr.kept_map) << '\n';
        std::cout << mdim::format_graph(pr.pruned);
    }
    return 0;
}

int cmd_saving_solve(const GlobalOpts& opts, const std::string& path, int k,
                     const std::string& method, std::optional<long long> trials) {
    auto g = load_graph(path);
    mdim::SavingInstance inst{g, k};
    mdim::SavingAnswer ans;
    if (method == "exact") {
        ans = mdim::solve_exact_dual(inst);
    } else if (method == "randomized") {
        long long t = trials ? *trials : mdim::default_trials(k);
        ans = mdim::solve_randomized(inst, t, opts.seed, opts.threads);
    } else if (method == "derandomized") {
        ans = mdim::solve_derandomized(inst);
    } else if (method == "auto") {
        ans = mdim::solve_saving_auto(inst);
    } else {
        throw mdim::Error("unknown method '" + method +
                          "' (expected exact, randomized, derandomized, or auto)");
    }
    ordered_json j;
    j["n"] = g.n;
    j["m"] = g.m;
    j["k"] = k;
    j["answer"] = ans.yes;
    std::vector<std::string> lines{"n: " + std::to_string(g.n), "m: " + std::to_string(g.m),
                                   "k: " + std::to_string(k), "answer: " + yes_no(ans.yes)};
    if (ans.witness) {
        j["witness"] = *ans.witness;
        lines.push_back("witness: " + mdim::format_id_list(*ans.witness));
    }
    j["method"] = mdim::method_name(ans.method);
    lines.push_back("method: " + std::string(mdim::method_name(ans.method)));
    if (ans.trials > 0) {
        j["trials"] = ans.trials;
        lines.push_back("trials: " + std::to_string(ans.trials));
    }
    emit(opts, lines, j);
    return ans.yes ? 0 : 1;
}

int cmd_saving_kernel(const GlobalOpts& opts, const std::string& path, int k) {
    auto g = load_graph(path);
    auto outcome = mdim::kernelize(mdim::SavingInstance{g, k});
    if (opts.json) {
        ordered_json j;
        j["verdict"] = outcome.verdict == mdim::KernelVerdict::trivial_yes ? "trivial-yes"
                                                                           : "reduced";
        ordered_json gj = graph_json(outcome.instance.g);
        j["n"] = gj["n"];
        j["m"] = gj["m"];
        j["edges"] = gj["edges"];
        j["k"] = outcome.instance.k;
        if (outcome.certificate) j["certificate"] = *outcome.certificate;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << mdim::format_kernel_outcome(outcome);
    }
    return 0;
}

int cmd_reduce(const GlobalOpts& opts, const std::string& path, const std::string& out_path) {
    auto inst = mdim::parse_hitting_set(mdim::read_text_file(path));
    auto red = mdim::reduce_to_metric_dimension(inst);
    std::string serialized = mdim::format_reduction_output(red);
    if (opts.json) {
        ordered_json j = graph_json(red.g);
        j["k"] = red.k;
        j["t_n"] = red.t_n;
        j["t_m"] = red.t_m;
        j["vc"] = red.vertex_cover;
        auto roles = ordered_json::array();
        for (auto r : red.roles) roles.push_back(mdim::role_name(r));
        j["roles"] = std::move(roles);
        if (!out_path.empty()) {
            mdim::write_text_file(out_path, serialized);
            j["output"] = out_path;
        }
        std::cout << j.dump(2) << '\n';
    } else if (!out_path.empty()) {
        mdim::write_text_file(out_path, serialized);
        std::cout << "output: " << out_path << '\n';
        std::cout << "n: " << red.g.n << '\n';
        std::cout << "k: " << red.k << '\n';
    } else {
        std::cout << serialized;
    }
    return 0;
}

int cmd_verify_reduction(const GlobalOpts& opts, const std::string& path) {
    auto inst = mdim::parse_hitting_set(mdim::read_text_file(path));
    auto check = mdim::verify_reduction(inst);
    ordered_json j;
    j["n"] = inst.universe_size;
    j["m"] = inst.family.size();
    j["l"] = inst.budget;
    j["hs_yes"] = check.hs_yes;
    j["md_yes"] = check.md_yes;
    j["agree"] = check.agree;
    emit(opts,
         {"n: " + std::to_string(inst.universe_size), "m: " + std::to_string(inst.family.size()),
          "l: " + std::to_string(inst.budget), "hs_yes: " + yes_no(check.hs_yes),
          "md_yes: " + yes_no(check.md_yes), "agree: " + yes_no(check.agree)},
         j);
    return check.agree ? 0 : 1;
}

int cmd_verify_sweep(const GlobalOpts& opts, int max_n, int max_k) {
    if (max_n < 1 || max_n > 7)
        throw mdim::Error("--max-n must be in 1..7 (the sweep is exhaustive)");
    if (max_k < 1) throw mdim::Error("--max-k must be at least 1");
    bool all_ok = true;
    std::vector<std::string> lines;
    auto rows = ordered_json::array();
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= max_k; ++k) {
            long long graphs = 0, mismatches = 0;
            mdim::for_each_connected_graph(n, [&](const mdim::Graph& g) {
                ++graphs;
                mdim::SavingInstance inst{g, k};
                bool oracle = mdim::solve_exact_dual(inst, mdim::Engine::enumerate).yes;
                bool derand = mdim::solve_derandomized(inst).yes;
                auto ko = mdim::kernelize(inst);
                bool kernel = ko.verdict == mdim::KernelVerdict::trivial_yes
                                  ? true
                                  : mdim::solve_exact_dual(ko.instance, mdim::Engine::enumerate)
                                        .yes;
                if (derand != oracle || kernel != oracle) {
                    ++mismatches;
                    std::cerr << "mismatch at n=" << n << " k=" << k
                              << " oracle=" << yes_no(oracle) << " derandomized="
                              << yes_no(derand) << " kernel=" << yes_no(kernel) << "\n"
                              << mdim::format_graph(g);
                }
            });
            bool ok = mismatches == 0;
            all_ok = all_ok && ok;
            lines.push_back("sweep: n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            " graphs=" + std::to_string(graphs) + " " + (ok ? "ok" : "FAIL"));
            ordered_json row;
            row["n"] = n;
            row["k"] = k;
            row["graphs"] = graphs;
            row["ok"] = ok;
            rows.push_back(std::move(row));
        }
    }
    lines.push_back(std::string("sweep_result: ") + (all_ok ? "ok" : "FAIL"));
    ordered_json j;
    j["rows"] = std::move(rows);
    j["ok"] = all_ok;
    emit(opts, lines, j);
    return all_ok ? 0 : 1;
}

// Timed workloads mirroring the acceptance suite. Timing output is the
// point here, so this subcommand's stdout is not byte-stable.
int cmd_bench(const GlobalOpts& opts, const std::string& suite) {
    bool quick = suite == "quick";
    if (!quick && suite != "acceptance")
        throw mdim::Error("unknown suite '" + suite + "' (expected acceptance or quick)");

    struct Row {
        std::string name;
        long long items;
        double ms;
    };
    std::vector<Row> rows;
    auto timed = [&](const std::string& name, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        long long items = fn();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        rows.push_back({name, items, ms});
    };

    int top_n = quick ? 4 : 5;

    timed("observation-identity", [&] {
        long long items = 0;
        for (int n = 1; n <= top_n; ++n) {
            mdim::for_each_connected_graph(n, [&](const mdim::Graph& g) {
                ++items;
                auto pr = mdim::prune(g);
                auto left = mdim::metric_dimension_exact(g, mdim::Engine::enumerate).md;
                auto right =
                    mdim::metric_dimension_exact(pr.pruned, mdim::Engine::enumerate).md +
                    pr.removed;
                if (left != right) throw mdim::InternalError("observation identity failed");
            });
        }
        return items;
    });

    timed("kernel-sweep", [&] {
        long long items = 0;
        for (int n = 1; n <= top_n; ++n) {
            mdim::for_each_connected_graph(n, [&](const mdim::Graph& g) {
                for (int k = 1; k <= 3; ++k) {
                    ++items;
                    mdim::SavingInstance inst{g, k};
                    auto ko = mdim::kernelize(inst);
                    bool kernel = ko.verdict == mdim::KernelVerdict::trivial_yes
                                      ? true
                                      : mdim::solve_exact_dual(ko.instance).yes;
                    if (kernel != mdim::solve_exact_dual(inst).yes)
                        throw mdim::InternalError("kernel mismatch");
                }
            });
        }
        return items;
    });

    timed("derandomized-sweep", [&] {
        long long items = 0;
        for (int n = 1; n <= top_n; ++n) {
            mdim::for_each_connected_graph(n, [&](const mdim::Graph& g) {
                for (int k = 1; k <= 3; ++k) {
                    ++items;
                    mdim::SavingInstance inst{g, k};
                    if (mdim::solve_derandomized(inst).yes != mdim::solve_exact_dual(inst).yes)
                        throw mdim::InternalError("derandomized mismatch");
                }
            });
        }
        return items;
    });

    timed("randomized-success", [&] {
        int seeds = quick ? 50 : 200;
        mdim::SavingInstance inst{mdim::cycle_graph(4), 2};
        long long hits = 0;
        for (int s = 0; s < seeds; ++s)
            if (mdim::solve_randomized(inst, 16, s, opts.threads).yes) ++hits;
        return hits;
    });

    timed("universal-families", [&] {
        long long items = 0;
        int max_n = quick ? 8 : 12, max_t = quick ? 3 : 4;
        for (int n = 1; n <= max_n; ++n)
            for (int t = 0; t <= std::min(n, max_t); ++t) {
                items += mdim::universal_family(n, t).members.size();
            }
        return items;
    });

    timed("reduction-equivalence", [&] {
        long long items = 0;
        std::vector<std::vector<std::vector<int>>> families = {
            {{0}, {1}}, {{0}, {0, 1}}, {{1}, {0, 1}}};
        for (const auto& fam : families) {
            for (int l = 0; l <= 2; ++l) {
                ++items;
                auto inst = mdim::make_hitting_set_instance(2, fam, l);
                if (!mdim::verify_reduction(inst).agree)
                    throw mdim::InternalError("reduction mismatch");
            }
        }
        return items;
    });

    timed("known-values", [&] {
        long long items = 0;
        for (int n = 2; n <= (quick ? 6 : 9); ++n) {
            ++items;
            if (mdim::metric_dimension_exact(mdim::path_graph(n)).md != 1)
                throw mdim::InternalError("path md mismatch");
        }
        for (int n = 3; n <= (quick ? 6 : 9); ++n) {
            ++items;
            if (mdim::metric_dimension_exact(mdim::cycle_graph(n)).md != 2)
                throw mdim::InternalError("cycle md mismatch");
        }
        for (int n = 2; n <= 6; ++n) {
            ++items;
            if (mdim::metric_dimension_exact(mdim::complete_graph(n)).md != n - 1)
                throw mdim::InternalError("clique md mismatch");
        }
        ++items;
        if (mdim::metric_dimension_exact(mdim::petersen_graph()).md != 3)
            throw mdim::InternalError("petersen md mismatch");
        ++items;
        if (mdim::metric_dimension_exact(mdim::hypercube_graph(3)).md != 3)
            throw mdim::InternalError("hypercube md mismatch");
        return items;
    });

    if (opts.json) {
        ordered_json j;
        auto arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["name"] = r.name;
            row["items"] = r.items;
            row["time_ms"] = r.ms;
            arr.push_back(std::move(row));
        }
        j["suite"] = suite;
        j["bench"] = std::move(arr);
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& r : rows) {
            std::cout << "bench: name=" << r.name << " items=" << r.items << " time_ms=" << r.ms
                      << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric dimension toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit one JSON object instead of key:value lines");
    app.add_option("--seed", opts.seed, "PRNG seed for randomized solving (default 0)");
    app.add_option("--threads", opts.threads, "worker cap for randomized trials (default 1)")
        ->check(CLI::Range(1, 256));

    std::string graph_path, hs_path, out_path, method = "auto", suite = "acceptance";
    std::vector<int> check_set;
    int k = 0, max_n = 5, max_k = 3;
    std::optional<long long> trials;

    auto* solve = app.add_subcommand("solve", "exact metric dimension");
    solve->add_option("graph", graph_path, "graph file")->required();

    auto* check = app.add_subcommand("check", "is the given set resolving?");
    check->add_option("graph", graph_path, "graph file")->required();
    check->add_option("--set", check_set, "vertex ids")->required()->expected(-1);

    auto* twins = app.add_subcommand("twins", "twin classes");
    twins->add_option("graph", graph_path, "graph file")->required();

    auto* prune = app.add_subcommand("prune", "shrink twin classes to size two");
    prune->add_option("graph", graph_path, "graph file")->required();

    auto* saving = app.add_subcommand("saving", "dual parameterization: save k landmarks");
    saving->require_subcommand(1);
    saving->fallthrough();
    auto* ssolve = saving->add_subcommand("solve", "decide the instance");
    ssolve->add_option("-k", k, "number of landmarks to save")->required();
    ssolve->add_option("--method", method, "exact | randomized | derandomized | auto (default)");
    long long trials_raw = -1;
    ssolve->add_option("--trials", trials_raw, "trial count for randomized (default 4^k)");
    ssolve->add_option("graph", graph_path, "graph file")->required();
    auto* skernel = saving->add_subcommand("kernel", "polynomial kernel");
    skernel->add_option("-k", k, "number of landmarks to save")->required();
    skernel->add_option("graph", graph_path, "graph file")->required();

    auto* reduce = app.add_subcommand("reduce", "hitting set -> metric dimension generator");
    reduce->add_option("hitting-set", hs_path, "hitting-set file")->required();
    reduce->add_option("-o,--output", out_path, "write serialization to a file");

    auto* verify = app.add_subcommand("verify", "cross-check solvers and reductions");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* vred = verify->add_subcommand("reduction", "hitting-set equivalence on one instance");
    vred->add_option("hitting-set", hs_path, "hitting-set file")->required();
    auto* vsweep = verify->add_subcommand("sweep", "kernel/derandomized vs oracle, exhaustive");
    vsweep->add_option("--max-n", max_n, "largest vertex count (<= 7)")->required();
    vsweep->add_option("--max-k", max_k, "largest k")->required();

    auto* bench = app.add_subcommand("bench", "timing tables");
    bench->add_option("suite", suite, "acceptance | quick")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (*solve) code = cmd_solve(opts, graph_path);
        else if (*check) code = cmd_check(opts, graph_path, check_set);
        else if (*twins) code = cmd_twins(opts, graph_path);
        else if (*prune) code = cmd_prune(opts, graph_path);
        else if (*ssolve) {
            if (trials_raw >= 0) trials = trials_raw;
            code = cmd_saving_solve(opts, graph_path, k, method, trials);
        } else if (*skernel) code = cmd_saving_kernel(opts, graph_path, k);
        else if (*reduce) code = cmd_reduce(opts, hs_path, out_path);
        else if (*vred) code = cmd_verify_reduction(opts, hs_path);
        else if (*vsweep) code = cmd_verify_sweep(opts, max_n, max_k);
        else if (*bench) code = cmd_bench(opts, suite);
    } catch (const mdim::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const mdim::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    std::cerr << "time_ms: " << ms << '\n';
    return code;
}
