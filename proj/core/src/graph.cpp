#include "univ/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace univ {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: self loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("add_edge: vertex out of range");
    if (has_edge(u, v)) return;
    adj[u].push_back(v);
    adj[v].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int t = adj[u].size() <= adj[v].size() ? v : u;
    return std::find(a.begin(), a.end(), t) != a.end();
}

int Graph::edge_count() const {
    size_t deg = 0;
    for (auto& a : adj) deg += a.size();
    return static_cast<int>(deg / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::star(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto& [u, v] : es) g.add_edge(u, v);
    return g;
}

bool is_forest(const Graph& g) {
    std::vector<int> parent(g.n, -2);
    for (int s = 0; s < g.n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u]) {
                if (v == parent[u]) continue;
                if (parent[v] != -2) return false;
                parent[v] = u;
                stack.push_back(v);
            }
        }
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == g.n;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.n - 1; }

std::vector<std::vector<int>> components_of(const Graph& g, std::span<const int> sub) {
    std::vector<std::vector<int>> comps;
    std::vector<char> in(g.n, 0), seen(g.n, 0);
    for (int v : sub) in[v] = 1;
    for (int s : sub) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.adj[u])
                if (in[v] && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int degree_in(const Graph& g, std::span<const int> sub, int v) {
    std::vector<char> in(g.n, 0);
    for (int u : sub) in[u] = 1;
    int deg = 0;
    for (int u : g.adj[v]) deg += in[u];
    return deg;
}

std::vector<std::pair<int, int>> edges_in(const Graph& g, std::span<const int> sub) {
    std::vector<char> in(g.n, 0);
    for (int u : sub) in[u] = 1;
    std::vector<std::pair<int, int>> es;
    for (int u : sub)
        for (int v : g.adj[u])
            if (u < v && in[v]) es.emplace_back(u, v);
    return es;
}

}  // namespace univ
