#ifndef MDIM_IO_HPP
#define MDIM_IO_HPP

#include <string>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/reductions.hpp"
#include "mdim/saving.hpp"

namespace mdim {

// Canonical graph text: '#' lines are comments, first data line is "n m",
// then exactly m lines "u v" (0-based, one space). Trailing whitespace is
// tolerated, anything else is rejected with its line number.
Graph parse_graph(const std::string& text);

// Writer counterpart: header plus edges sorted with u < v, no comments.
std::string format_graph(const Graph& g);

// Hitting-set text: '#' comments, first data line "n m l", then m lines of
// space-separated element ids.
HittingSetInstance parse_hitting_set(const std::string& text);
std::string format_hitting_set(const HittingSetInstance& inst);

// Canonical graph format plus a "k=<int>" trailer and, for trivial-yes
// outcomes, a "certificate: <sorted ids>" line.
std::string format_kernel_outcome(const KernelOutcome& outcome);
KernelOutcome parse_kernel_outcome(const std::string& text);

// Canonical graph format plus "k=<int>", "vc=<sorted ids>" and one
// "role <id> <tag>" line per vertex.
std::string format_reduction_output(const ReductionOutput& red);

std::string format_id_list(const std::vector<int>& ids);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mdim

#endif
