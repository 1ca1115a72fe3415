#pragma once

#include <cstdint>
#include <utility>

#include "univ/graph.hpp"
#include "univ/host.hpp"
#include "univ/tree_decomposition.hpp"

namespace univ {

// Exact edge count of U(n,3,w) plus the leading-term report
// (19/(6 ln 3))(w+1) n ln(n/w).
struct TwEdgeReport {
    i64 n = 0;
    int w = 0;
    i64 exact_edges = 0;
    double bound = 0.0;
};
TwEdgeReport count_edges_tw(i64 n, int w, HostOptions opts = {});

// The proven lower bound on edges of any graph universal for treewidth w:
// sum_{1<=j<=floor(n/(2w+1))} w (floor(n/j) - 2w). Empty sum gives 0.
i64 lower_bound_edges(i64 n, int w);

// Random partial k-tree with its width-w decomposition: iterated simplicial
// additions onto a (w+1)-clique, then independent edge deletions with
// probability 1-keep_prob. The decomposition stays valid for the subgraph and
// is normal by construction.
std::pair<Graph, TreeDecomposition> generate_partial_ktree(int n, int w, std::uint64_t seed,
                                                           double keep_prob);

}  // namespace univ
