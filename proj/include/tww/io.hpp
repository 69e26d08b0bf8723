#ifndef TWW_IO_HPP
#define TWW_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/sequence.hpp"

namespace tww {

// Text formats, all line-oriented, 1-based vertex ids, '#' starts a comment.
//
//   graph:    "g <n> <m>" header, then m lines "e <u> <v>"
//   sequence: "seq <n>" header, then lines "c <u> <v> <w>"; the i-th step
//             (1-based) must have w = n + i
//   order:    one line "o <v1> <v2> ... <vn>"
//   matrix:   "m <rows> <cols>" header, then one 0/1 string per row

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

std::vector<ContractionStep> read_steps(std::istream& in, int expect_n = -1);
void write_steps(std::ostream& out, int n, const std::vector<ContractionStep>& steps);

std::vector<int> read_order(std::istream& in, int expect_n = -1);
void write_order(std::ostream& out, const std::vector<int>& vertex_at);

Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
std::vector<ContractionStep> load_steps(const std::string& path, int expect_n = -1);
void save_steps(const std::string& path, int n, const std::vector<ContractionStep>& steps);
std::vector<int> load_order(const std::string& path, int expect_n = -1);
void save_order(const std::string& path, const std::vector<int>& vertex_at);

/// DOT rendering of a trigraph snapshot. Black edges solid, red edges
/// colored red; node labels list the original vertices merged into each
/// surviving vertex (1-based).
std::string to_dot(const ReplaySnapshot& snap);
std::string to_dot(const OrientedReplaySnapshot& snap);

} // namespace tww

#endif
