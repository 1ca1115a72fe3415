#pragma once

#include <span>
#include <utility>
#include <vector>

namespace univ {

// Simple undirected guest graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    static Graph path(int n);
    static Graph star(int n);  // vertex 0 is the center
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es);
};

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected(const Graph& g);

// Connected components of the subgraph induced by `sub` (each sorted).
std::vector<std::vector<int>> components_of(const Graph& g, std::span<const int> sub);

// Degree of v within the induced subgraph.
int degree_in(const Graph& g, std::span<const int> sub, int v);

// Edges of g with both endpoints in `sub`.
std::vector<std::pair<int, int>> edges_in(const Graph& g, std::span<const int> sub);

}  // namespace univ
