#include "mdim/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "mdim/error.hpp"

namespace mdim {

namespace {

struct Line {
    int number = 0;  // 1-based
    std::string text;
};

// Data lines only: comments dropped, line numbers preserved.
std::vector<Line> data_lines(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++number;
        if (nl == std::string::npos && line.empty()) break;  // no trailing empty pseudo-line
        if (!line.empty() && line[0] == '#') continue;
        out.push_back({number, line});
    }
    return out;
}

// Whitespace-separated integer fields; trailing whitespace is fine.
std::vector<long long> parse_ints(const Line& line, const char* what) {
    std::vector<long long> out;
    std::istringstream in(line.text);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw Error("expected " + std::string(what) + ", found '" + tok + "' (line " +
                        std::to_string(line.number) + ")");
        out.push_back(value);
    }
    return out;
}

std::vector<long long> parse_exactly(const Line& line, std::size_t count, const char* what) {
    auto vals = parse_ints(line, what);
    if (vals.size() != count)
        throw Error("expected " + std::string(what) + " (line " + std::to_string(line.number) +
                    ")");
    return vals;
}

// Parses "n m" + m edge lines starting at lines[start]; returns the index
// one past the consumed lines.
std::size_t parse_graph_lines(const std::vector<Line>& lines, std::size_t start, Graph& out) {
    if (start >= lines.size()) throw Error("missing graph header line 'n m'");
    auto header = parse_exactly(lines[start], 2, "graph header 'n m'");
    long long n = header[0], m = header[1];
    if (n < 0 || n > kMaxVertices)
        throw Error("vertex count " + std::to_string(n) + " out of range (line " +
                    std::to_string(lines[start].number) + ")");
    if (m < 0) throw Error("negative edge count (line " + std::to_string(lines[start].number) + ")");

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        std::size_t at = start + 1 + i;
        if (at >= lines.size())
            throw Error("edge count mismatch: header says " + std::to_string(m) + " edges, file has " +
                        std::to_string(i));
        auto uv = parse_exactly(lines[at], 2, "edge line 'u v'");
        for (long long v : uv) {
            if (v < 0 || v >= n)
                throw Error("vertex " + std::to_string(v) + " out of range (line " +
                            std::to_string(lines[at].number) + ")");
        }
        if (uv[0] == uv[1])
            throw Error("self-loop " + std::to_string(uv[0]) + " " + std::to_string(uv[1]) +
                        " (line " + std::to_string(lines[at].number) + ")");
        edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    out = build_graph(static_cast<int>(n), edges);
    return start + 1 + m;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = data_lines(text);
    Graph g;
    std::size_t next = parse_graph_lines(lines, 0, g);
    if (next < lines.size())
        throw Error("unexpected data after the edge list (line " +
                    std::to_string(lines[next].number) + ")");
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m << '\n';
    for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
    return out.str();
}

HittingSetInstance parse_hitting_set(const std::string& text) {
    auto lines = data_lines(text);
    if (lines.empty()) throw Error("missing hitting-set header line 'n m l'");
    auto header = parse_exactly(lines[0], 3, "hitting-set header 'n m l'");
    long long n = header[0], m = header[1], l = header[2];
    if (m < 1) throw Error("family must contain at least one set (line " +
                           std::to_string(lines[0].number) + ")");
    std::vector<std::vector<int>> family;
    for (long long j = 0; j < m; ++j) {
        std::size_t at = 1 + j;
        if (at >= lines.size())
            throw Error("set count mismatch: header says " + std::to_string(m) + " sets, file has " +
                        std::to_string(j));
        auto vals = parse_ints(lines[at], "element ids");
        if (vals.empty())
            throw Error("set " + std::to_string(j) + " is empty (line " +
                        std::to_string(lines[at].number) + ")");
        std::vector<int> s;
        for (long long e : vals) {
            if (e < 0 || e >= n)
                throw Error("element " + std::to_string(e) + " out of range (line " +
                            std::to_string(lines[at].number) + ")");
            s.push_back(static_cast<int>(e));
        }
        family.push_back(std::move(s));
    }
    if (1 + m < static_cast<long long>(lines.size()))
        throw Error("unexpected data after the set list (line " +
                    std::to_string(lines[1 + m].number) + ")");
    return make_hitting_set_instance(static_cast<int>(n), std::move(family),
                                     static_cast<int>(l));
}

std::string format_hitting_set(const HittingSetInstance& inst) {
    std::ostringstream out;
    out << inst.universe_size << ' ' << inst.family.size() << ' ' << inst.budget << '\n';
    for (const auto& s : inst.family) out << format_id_list(s) << '\n';
    return out.str();
}

std::string format_id_list(const std::vector<int>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out << ' ';
        out << ids[i];
    }
    return out.str();
}

std::string format_kernel_outcome(const KernelOutcome& outcome) {
    std::ostringstream out;
    out << "# verdict: "
        << (outcome.verdict == KernelVerdict::trivial_yes ? "trivial-yes" : "reduced") << '\n';
    out << format_graph(outcome.instance.g);
    out << "k=" << outcome.instance.k << '\n';
    if (outcome.certificate) out << "certificate: " << format_id_list(*outcome.certificate) << '\n';
    return out.str();
}

KernelOutcome parse_kernel_outcome(const std::string& text) {
    auto lines = data_lines(text);
    KernelOutcome outcome;
    std::size_t next = parse_graph_lines(lines, 0, outcome.instance.g);
    if (next >= lines.size()) throw Error("missing 'k=<int>' trailer after the graph");
    const Line& kline = lines[next];
    if (kline.text.rfind("k=", 0) != 0)
        throw Error("expected 'k=<int>' (line " + std::to_string(kline.number) + ")");
    try {
        outcome.instance.k = std::stoi(kline.text.substr(2));
    } catch (const std::exception&) {
        throw Error("expected 'k=<int>' (line " + std::to_string(kline.number) + ")");
    }
    ++next;
    if (next < lines.size()) {
        const Line& cline = lines[next];
        const std::string prefix = "certificate:";
        if (cline.text.rfind(prefix, 0) != 0)
            throw Error("unexpected data after the kernel trailer (line " +
                        std::to_string(cline.number) + ")");
        auto vals = parse_ints({cline.number, cline.text.substr(prefix.size())}, "certificate ids");
        std::vector<int> cert;
        for (long long v : vals) cert.push_back(static_cast<int>(v));
        outcome.certificate = std::move(cert);
        ++next;
    }
    if (next < lines.size())
        throw Error("unexpected data after the kernel trailer (line " +
                    std::to_string(lines[next].number) + ")");
    outcome.verdict =
        outcome.certificate ? KernelVerdict::trivial_yes : KernelVerdict::reduced;
    return outcome;
}

std::string format_reduction_output(const ReductionOutput& red) {
    std::ostringstream out;
    out << "# hitting-set reduction: t_n=" << red.t_n << " t_m=" << red.t_m << '\n';
    out << format_graph(red.g);
    out << "k=" << red.k << '\n';
    out << "vc=" << format_id_list(red.vertex_cover) << '\n';
    for (int v = 0; v < red.g.n; ++v) out << "role " << v << ' ' << role_name(red.roles[v]) << '\n';
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace mdim
