#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "univ/graph.hpp"

namespace univ {

// Bags indexed by the vertices of a tree. Bag contents are vertex ids of the
// decomposed graph, kept sorted.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int bag_count() const { return static_cast<int>(bags.size()); }
    int width() const;
    std::vector<std::vector<int>> tree_adjacency() const;
};

// Checks the three axioms for the subgraph induced by `sub`; returns the
// violated axiom's description, or nullopt if valid.
std::optional<std::string> check_decomposition(const Graph& g, std::span<const int> sub,
                                               const TreeDecomposition& td);

// Normal: every bag has size w+1 and adjacent bags share exactly w vertices.
bool is_normal(const TreeDecomposition& td, int w);

// Rebuild td into normal form for the subgraph induced by `sub`.
// Requires |sub| >= w+1 and a valid input of width <= w; throws otherwise,
// naming the violated decomposition axiom.
TreeDecomposition normalize_decomposition(const Graph& g, std::span<const int> sub,
                                          const TreeDecomposition& td, int w);

// Restrict bags to a vertex subset. Valid for the induced subgraph; generally
// not normal.
TreeDecomposition restrict_decomposition(const TreeDecomposition& td, std::span<const int> keep);

}  // namespace univ
