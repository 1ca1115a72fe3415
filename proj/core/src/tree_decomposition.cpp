#include "univ/tree_decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace univ {

int TreeDecomposition::width() const {
    size_t mx = 0;
    for (auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

std::vector<std::vector<int>> TreeDecomposition::tree_adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto& [x, y] : tree_edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    return adj;
}

std::optional<std::string> check_decomposition(const Graph& g, std::span<const int> sub,
                                               const TreeDecomposition& td) {
    int bn = td.bag_count();
    if (bn == 0) return sub.empty() ? std::nullopt : std::optional<std::string>("no bags");
    // The index tree must be a tree.
    if (static_cast<int>(td.tree_edges.size()) != bn - 1) return "bag tree is not a tree";
    {
        std::vector<int> reach;
        std::vector<char> seen(bn, 0);
        auto adj = td.tree_adjacency();
        reach.push_back(0);
        seen[0] = 1;
        size_t k = 0;
        while (k < reach.size()) {
            for (int y : adj[reach[k]])
                if (!seen[y]) {
                    seen[y] = 1;
                    reach.push_back(y);
                }
            ++k;
        }
        if (static_cast<int>(reach.size()) != bn) return "bag tree is not connected";
    }
    std::vector<char> in(g.n, 0);
    for (int v : sub) in[v] = 1;
    std::vector<std::vector<int>> bags_of(g.n);
    for (int x = 0; x < bn; ++x)
        for (int v : td.bags[x]) {
            if (v < 0 || v >= g.n || !in[v]) return "bag contains a vertex outside the graph";
            bags_of[v].push_back(x);
        }
    for (int v : sub)
        if (bags_of[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
    for (int u : sub)
        for (int v : g.adj[u]) {
            if (u > v || !in[v]) continue;
            bool covered = false;
            for (int x : bags_of[u])
                if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v)) {
                    covered = true;
                    break;
                }
            if (!covered)
                return "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag";
        }
    // Connectivity of each vertex's bag set.
    auto adj = td.tree_adjacency();
    for (int v : sub) {
        std::set<int> want(bags_of[v].begin(), bags_of[v].end());
        std::vector<int> stack{bags_of[v][0]};
        std::set<int> seen{bags_of[v][0]};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (want.count(y) && !seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
        if (seen.size() != want.size())
            return "bags of vertex " + std::to_string(v) + " are not connected";
    }
    return std::nullopt;
}

bool is_normal(const TreeDecomposition& td, int w) {
    for (auto& b : td.bags)
        if (static_cast<int>(b.size()) != w + 1) return false;
    for (auto& [x, y] : td.tree_edges) {
        std::vector<int> inter;
        std::set_intersection(td.bags[x].begin(), td.bags[x].end(), td.bags[y].begin(),
                              td.bags[y].end(), std::back_inserter(inter));
        if (static_cast<int>(inter.size()) != w) return false;
    }
    return true;
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& td, std::span<const int> keep) {
    std::set<int> k(keep.begin(), keep.end());
    TreeDecomposition out;
    out.bags.reserve(td.bags.size());
    for (auto& b : td.bags) {
        std::vector<int> nb;
        for (int v : b)
            if (k.count(v)) nb.push_back(v);
        out.bags.push_back(std::move(nb));
    }
    out.tree_edges = td.tree_edges;
    return out;
}

namespace {

struct MutableTd {
    std::vector<std::vector<int>> bags;  // sorted
    std::vector<std::set<int>> nbrs;
    std::vector<char> dead;

    void link(int x, int y) {
        nbrs[x].insert(y);
        nbrs[y].insert(x);
    }

    // Remove bag x, reattaching its other neighbors to `into`.
    void contract_into(int x, int into) {
        auto ns = nbrs[x];
        for (int y : ns) {
            nbrs[y].erase(x);
            if (y != into) link(y, into);
        }
        nbrs[x].clear();
        dead[x] = 1;
    }

    // Drop live bags contained in a live neighbor, to fixpoint.
    void containment_sweep() {
        bool dropped = true;
        while (dropped) {
            dropped = false;
            for (size_t x = 0; x < bags.size() && !dropped; ++x) {
                if (dead[x] || nbrs[x].empty()) continue;
                for (int y : nbrs[x]) {
                    if (std::includes(bags[y].begin(), bags[y].end(), bags[x].begin(),
                                      bags[x].end())) {
                        contract_into(static_cast<int>(x), y);
                        dropped = true;
                        break;
                    }
                }
            }
        }
    }

    TreeDecomposition compact() const {
        TreeDecomposition out;
        std::vector<int> remap(bags.size(), -1);
        for (size_t x = 0; x < bags.size(); ++x)
            if (!dead[x]) {
                remap[x] = out.bag_count();
                out.bags.push_back(bags[x]);
            }
        for (size_t x = 0; x < bags.size(); ++x)
            for (int y : nbrs[x])
                if (remap[x] >= 0 && remap[y] >= 0 && remap[x] < remap[y])
                    out.tree_edges.emplace_back(remap[x], remap[y]);
        return out;
    }
};

}  // namespace

TreeDecomposition normalize_decomposition(const Graph& g, std::span<const int> sub,
                                          const TreeDecomposition& td, int w) {
    if (static_cast<long long>(sub.size()) < w + 1)
        throw std::invalid_argument("normalize_decomposition: need |G| >= w+1");
    if (auto err = check_decomposition(g, sub, td))
        throw std::invalid_argument("normalize_decomposition: " + *err);
    if (td.width() > w) throw std::invalid_argument("normalize_decomposition: width exceeds w");

    MutableTd t;
    for (auto& b : td.bags) {
        auto s = b;
        std::sort(s.begin(), s.end());
        t.bags.push_back(std::move(s));
        t.nbrs.emplace_back();
        t.dead.push_back(0);
    }
    for (auto& [x, y] : td.tree_edges) t.link(x, y);

    // Alternate dedup and padding until every live bag has w+1 vertices.
    // After a sweep no live bag is contained in a neighbor, so an undersized
    // bag with a neighbor can always borrow a missing vertex from it; a bag
    // alone on the tree pads from anywhere (its vertices' bag sets stay
    // connected trivially).
    for (;;) {
        t.containment_sweep();
        int x = -1;
        for (size_t i = 0; i < t.bags.size(); ++i)
            if (!t.dead[i] && static_cast<int>(t.bags[i].size()) < w + 1) {
                x = static_cast<int>(i);
                break;
            }
        if (x == -1) break;
        int pick = -1;
        for (int y : t.nbrs[x]) {
            for (int v : t.bags[y])
                if (!std::binary_search(t.bags[x].begin(), t.bags[x].end(), v)) {
                    pick = v;
                    break;
                }
            if (pick != -1) break;
        }
        if (pick == -1 && t.nbrs[x].empty()) {
            for (int v : sub)
                if (!std::binary_search(t.bags[x].begin(), t.bags[x].end(), v)) {
                    pick = v;
                    break;
                }
        }
        if (pick == -1) throw std::logic_error("normalize_decomposition: cannot pad bag");
        t.bags[x].insert(std::upper_bound(t.bags[x].begin(), t.bags[x].end(), pick), pick);
    }

    TreeDecomposition mid = t.compact();

    // Subdivide edges whose bags differ in more than one vertex, swapping one
    // vertex per step.
    TreeDecomposition out;
    out.bags = mid.bags;
    for (auto& [x, y] : mid.tree_edges) {
        std::vector<int> only_x, only_y;
        std::set_difference(mid.bags[x].begin(), mid.bags[x].end(), mid.bags[y].begin(),
                            mid.bags[y].end(), std::back_inserter(only_x));
        std::set_difference(mid.bags[y].begin(), mid.bags[y].end(), mid.bags[x].begin(),
                            mid.bags[x].end(), std::back_inserter(only_y));
        int k = static_cast<int>(only_x.size());
        if (k <= 1) {
            out.tree_edges.emplace_back(x, y);
            continue;
        }
        int prev = x;
        std::vector<int> cur = mid.bags[x];
        for (int i = 0; i + 1 < k; ++i) {
            cur.erase(std::find(cur.begin(), cur.end(), only_x[i]));
            cur.insert(std::upper_bound(cur.begin(), cur.end(), only_y[i]), only_y[i]);
            out.bags.push_back(cur);
            int id = out.bag_count() - 1;
            out.tree_edges.emplace_back(prev, id);
            prev = id;
        }
        out.tree_edges.emplace_back(prev, y);
    }

    if (auto err = check_decomposition(g, sub, out))
        throw std::logic_error("normalize_decomposition: output invalid: " + *err);
    if (!is_normal(out, w)) throw std::logic_error("normalize_decomposition: output not normal");
    return out;
}

}  // namespace univ
