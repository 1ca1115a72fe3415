#pragma once

#include <span>
#include <vector>

#include "univ/graph.hpp"
#include "univ/tree_decomposition.hpp"

namespace univ {

using i64 = std::int64_t;

// Size bookkeeping for the ternary embedding: X is the live remainder of the
// first partial block, N a full block. Delta(k) is the gap from k to the next
// block boundary X, X+N, X+2N, ...
struct DeltaContext {
    i64 N = 0;
    i64 X = 0;
};
i64 delta(i64 size, const DeltaContext& ctx);

struct BoundedSplit {
    int s = -1;
    std::vector<int> part;  // union of components of F \ s, t <= |part| <= 2t
};

// For some vertex s there is a component union F' with t <= |F'| <= 2t.
// Requires |sub| >= t+1. Ties broken toward the smallest vertex id.
BoundedSplit split_bounded(const Graph& f, std::span<const int> sub, i64 t);

struct ThreeSplit {
    int s = -1;
    std::vector<int> f1, f2, f3;  // m <= |f3| <= M, |f1| <= |F|-1-M, |f2| <= |f1|
};

// Separator vertex plus a three-way partition of F \ s. `require_f3_above_m`
// asks for |f3| > m, needed by the binary embedding at |F| = 3N+X+2.
ThreeSplit split_three(const Graph& f, std::span<const int> sub, i64 m, i64 M,
                       bool require_f3_above_m = false);

// One separating vertex, 2N+X+2 <= |F| <= 5N+X+2, sizes bounded by
// 2N + Delta of the prefix union; f1+f2 cover at least 2N+X.
ThreeSplit split_one_sep(const Graph& f, std::span<const int> sub, const DeltaContext& ctx);

struct TwoSepSplit {
    int s1 = -1, s2 = -1;
    std::vector<int> f1, f2, f3, f4, f5, f6;  // fbar = f3 u f5 u f6 u {s2}
};

// Two separating vertices, 5N+X+3 <= |F| <= 8N+X+3.
TwoSepSplit split_two_sep(const Graph& f, std::span<const int> sub, const DeltaContext& ctx);

// Treewidth analogues. The decomposition must be normal for the induced
// subgraph on `sub`; separators are bags (size w+1).
struct TwBoundedSplit {
    int bag = -1;
    std::vector<int> separator;
    std::vector<int> part;
};
TwBoundedSplit split_bounded_tw(const Graph& g, std::span<const int> sub,
                                const TreeDecomposition& td, i64 t);

struct TwSplit {
    std::vector<int> separator;
    std::vector<int> g1, g2, g3;
};
TwSplit split_three_tw(const Graph& g, std::span<const int> sub, const TreeDecomposition& td,
                       i64 m, i64 M, int w);
TwSplit split_one_sep_tw(const Graph& g, std::span<const int> sub, const TreeDecomposition& td,
                         const DeltaContext& ctx, int w);

struct TwTwoSepSplit {
    std::vector<int> s1, s2;
    std::vector<int> g1, g2, g3, g4, g5, g6;
};
TwTwoSepSplit split_two_sep_tw(const Graph& g, std::span<const int> sub, const TreeDecomposition& td,
                               const DeltaContext& ctx, int w);

// Shared scaffolding: split a plain tree (given by adjacency over 0..n-1)
// into s plus a component union f3 with m <= |f3| <= M and the remainder
// split as (f1 large, f2 small). Exposed for tests.
struct TreeThreeSplit {
    int s = -1;
    std::vector<int> f1, f2, f3;
};
TreeThreeSplit split_tree_three(const std::vector<std::vector<int>>& tree_adj, i64 m, i64 M,
                                bool require_f3_above_m = false);

}  // namespace univ
