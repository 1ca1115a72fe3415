#include "univ/treewidth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace univ {

TwEdgeReport count_edges_tw(i64 n, int w, HostOptions opts) {
    Host host = Host::universal_tw(n, w, opts);
    TwEdgeReport rep;
    rep.n = n;
    rep.w = w;
    rep.exact_edges = host.count_edges();
    if (n > w)
        rep.bound = 19.0 / (6.0 * std::log(3.0)) * (w + 1) * static_cast<double>(n) *
                    std::log(static_cast<double>(n) / w);
    return rep;
}

i64 lower_bound_edges(i64 n, int w) {
    if (w < 1) throw std::invalid_argument("lower_bound_edges: w must be >= 1");
    i64 total = 0;
    for (i64 j = 1; j <= n / (2 * w + 1); ++j) total += w * (n / j - 2 * w);
    return total;
}

std::pair<Graph, TreeDecomposition> generate_partial_ktree(int n, int w, std::uint64_t seed,
                                                           double keep_prob) {
    if (w < 1 || n < w + 1) throw std::invalid_argument("generate_partial_ktree: need n >= w+1 >= 2");
    if (keep_prob < 0.0 || keep_prob > 1.0)
        throw std::invalid_argument("generate_partial_ktree: keep_prob outside [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    TreeDecomposition td;
    std::vector<int> first_bag;
    for (int v = 0; v <= w; ++v) {
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
        first_bag.push_back(v);
    }
    td.bags.push_back(first_bag);
    for (int v = w + 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick_bag(0, td.bag_count() - 1);
        int b = pick_bag(rng);
        std::uniform_int_distribution<int> pick_out(0, w);
        int out = pick_out(rng);
        std::vector<int> bag;
        for (int i = 0; i <= w; ++i)
            if (i != out) {
                g.add_edge(td.bags[b][i], v);
                bag.push_back(td.bags[b][i]);
            }
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
        td.tree_edges.emplace_back(b, td.bag_count() - 1);
    }
    if (keep_prob < 1.0) {
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        Graph kept(n);
        for (auto& [u, v] : g.edges())
            if (coin(rng) <= keep_prob) kept.add_edge(u, v);
        g = std::move(kept);
    }
    return {std::move(g), std::move(td)};
}

}  // namespace univ
