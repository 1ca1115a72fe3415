#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "univ/graph.hpp"
#include "univ/host.hpp"
#include "univ/tree_decomposition.hpp"

namespace univ {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// PACE-style graph: "p tw <n> <m>" header, then one "u v" line per edge,
// vertices 1..n. "c" lines are comments.
Graph read_pace_graph(std::istream& in);
void write_pace_graph(std::ostream& out, const Graph& g);

// PACE-style decomposition: "s td <#bags> <width+1> <n>", "b <id> <v...>"
// lines, then tree edges between bag ids.
TreeDecomposition read_pace_td(std::istream& in, int* graph_n = nullptr);
void write_pace_td(std::ostream& out, const TreeDecomposition& td, int graph_n);

// Host export in the graph format, vertices numbered 1..n by eating order.
// With labels, a "c <id> <address>" comment line per vertex is emitted.
void write_host_pace(std::ostream& out, const Host& host, bool address_labels = false);

}  // namespace univ
