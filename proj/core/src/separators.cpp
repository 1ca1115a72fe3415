#include "univ/separators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace univ {

i64 delta(i64 size, const DeltaContext& ctx) {
    if (ctx.X < 1 || ctx.N < ctx.X) throw std::invalid_argument("delta: need N >= X >= 1");
    if (size < 0) throw std::invalid_argument("delta: negative size");
    if (size < ctx.X) return ctx.X - size;
    return ctx.N - (size - ctx.X) % ctx.N;
}

namespace {

struct RootedTree {
    int n = 0;
    const std::vector<std::vector<int>>* adj = nullptr;
    std::vector<int> parent, order, size;

    explicit RootedTree(const std::vector<std::vector<int>>& a) : n(static_cast<int>(a.size())), adj(&a) {
        parent.assign(n, -1);
        size.assign(n, 1);
        order.reserve(n);
        std::vector<int> stack{0};
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (int v : (*adj)[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    stack.push_back(v);
                }
        }
        for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
    }

    // Size of the component of tree \ s lying toward neighbor u.
    i64 piece(int s, int u) const { return parent[u] == s ? size[u] : n - size[s]; }

    // Nodes of the component toward u from s; `blocked` is shared scratch.
    void collect(int s, int u, std::vector<int>& out, std::vector<char>& blocked) const {
        std::vector<int> stack{u};
        blocked[s] = 1;
        blocked[u] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.push_back(x);
            for (int y : (*adj)[x])
                if (!blocked[y]) {
                    blocked[y] = 1;
                    stack.push_back(y);
                }
        }
    }
};

}  // namespace

TreeThreeSplit split_tree_three(const std::vector<std::vector<int>>& tree_adj, i64 m, i64 M,
                                bool require_f3_above_m) {
    int n = static_cast<int>(tree_adj.size());
    if (m < 0 || 2 * m > M) throw std::invalid_argument("split_tree_three: need 0 <= 2m <= M");
    if (n < M + 1) throw std::invalid_argument("split_tree_three: forest too small");

    RootedTree t(tree_adj);

    // Deepest vertex whose subtree still has size >= M+1.
    int s = 0;
    for (;;) {
        int next = -1;
        for (int v : tree_adj[s])
            if (t.parent[v] == s && t.size[v] >= M + 1 && (next == -1 || v < next)) next = v;
        if (next == -1) break;
        s = next;
    }

    std::set<int> f3_dirs;  // neighbors of s whose component belongs to f3
    i64 f3_size = 0;

    auto finalize = [&](const std::vector<int>& rest, int f2_dir) {
        TreeThreeSplit out;
        out.s = s;
        std::vector<char> blocked(n, 0);
        for (int v : f3_dirs) t.collect(s, v, out.f3, blocked);
        if (f2_dir != -1) t.collect(s, f2_dir, out.f2, blocked);
        for (int v : rest)
            if (v != f2_dir) t.collect(s, v, out.f1, blocked);
        std::sort(out.f1.begin(), out.f1.end());
        std::sort(out.f2.begin(), out.f2.end());
        std::sort(out.f3.begin(), out.f3.end());
        return out;
    };

    for (int guard = 0;; ++guard) {
        if (guard > 2 * n + 4) throw std::logic_error("split_tree_three: no progress");

        // Greedy largest-first packing of component unions up to M.
        std::vector<int> dirs;
        for (int v : tree_adj[s])
            if (t.piece(s, v) > 0 && !f3_dirs.count(v)) dirs.push_back(v);
        std::sort(dirs.begin(), dirs.end(), [&](int a, int b) {
            i64 pa = t.piece(s, a), pb = t.piece(s, b);
            return pa != pb ? pa > pb : a < b;
        });
        std::vector<int> rest;
        for (int v : dirs) {
            i64 p = t.piece(s, v);
            if (f3_size + p <= M) {
                f3_dirs.insert(v);
                f3_size += p;
            } else {
                rest.push_back(v);
            }
        }
        if (f3_size < m) throw std::logic_error("split_tree_three: packing below m");

        if (f3_size == M) return finalize(rest, -1);
        if (rest.empty()) throw std::logic_error("split_tree_three: exhausted below M");

        if (rest.size() == 1) {
            // One remaining tree: slide s into it; the old s joins f3.
            int old_s = s;
            s = rest[0];
            f3_dirs.clear();
            f3_dirs.insert(old_s);
            f3_size = t.piece(s, old_s);
            continue;
        }

        if (require_f3_above_m && f3_size <= m) {
            // Swap f3 for the largest single component that fits and is bigger.
            int best = -1;
            for (int v : rest) {
                i64 p = t.piece(s, v);
                if (p <= M && p > f3_size && (best == -1 || p > t.piece(s, best))) best = v;
            }
            if (best == -1) throw std::logic_error("split_tree_three: cannot exceed m");
            f3_dirs.clear();
            f3_dirs.insert(best);
            f3_size = t.piece(s, best);
            continue;
        }

        // At least two remaining trees; the smallest becomes f2.
        int u_min = rest[0];
        for (int v : rest)
            if (t.piece(s, v) < t.piece(s, u_min) || (t.piece(s, v) == t.piece(s, u_min) && v < u_min))
                u_min = v;
        if (t.piece(s, u_min) + f3_size <= M)
            throw std::logic_error("split_tree_three: f2 merge missed");
        return finalize(rest, u_min);
    }
}

namespace {

// Connect the components of the induced forest into one tree by chaining
// smallest-id representatives; returns compact adjacency + id maps.
struct VirtualTree {
    std::vector<std::vector<int>> adj;
    std::vector<int> to_orig;

    VirtualTree(const Graph& f, std::span<const int> sub) {
        std::vector<int> idx(f.n, -1);
        to_orig.assign(sub.begin(), sub.end());
        std::sort(to_orig.begin(), to_orig.end());
        for (size_t i = 0; i < to_orig.size(); ++i) idx[to_orig[i]] = static_cast<int>(i);
        adj.assign(to_orig.size(), {});
        for (int u : to_orig)
            for (int v : f.adj[u])
                if (idx[v] >= 0 && u < v) {
                    adj[idx[u]].push_back(idx[v]);
                    adj[idx[v]].push_back(idx[u]);
                }
        auto comps = components_of(f, to_orig);
        for (size_t c = 1; c < comps.size(); ++c) {
            int a = idx[comps[c - 1][0]], b = idx[comps[c][0]];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
};

std::vector<int> map_back(const std::vector<int>& nodes, const std::vector<int>& to_orig) {
    std::vector<int> out;
    out.reserve(nodes.size());
    for (int v : nodes) out.push_back(to_orig[v]);
    std::sort(out.begin(), out.end());
    return out;
}

void check_no_cross_edges(const Graph& g, std::initializer_list<const std::vector<int>*> parts,
                          const char* who) {
    std::vector<int> part_of(g.n, -1);
    int id = 0;
    for (auto* p : parts) {
        for (int v : *p) part_of[v] = id;
        ++id;
    }
    id = 0;
    for (auto* p : parts) {
        for (int u : *p)
            for (int v : g.adj[u])
                if (part_of[v] != -1 && part_of[v] != id)
                    throw std::logic_error(std::string(who) + ": edge crosses parts");
        ++id;
    }
}

}  // namespace

BoundedSplit split_bounded(const Graph& f, std::span<const int> sub, i64 t) {
    i64 n = static_cast<i64>(sub.size());
    if (n < t + 1) throw std::invalid_argument("split_bounded: forest too small");
    std::vector<int> ids(sub.begin(), sub.end());
    std::sort(ids.begin(), ids.end());
    if (t == 0) return BoundedSplit{ids[0], {}};
    for (int s : ids) {
        std::vector<int> rest;
        rest.reserve(ids.size() - 1);
        for (int v : ids)
            if (v != s) rest.push_back(v);
        auto comps = components_of(f, rest);
        std::sort(comps.begin(), comps.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        std::vector<int> part;
        i64 sz = 0;
        for (auto& c : comps)
            if (sz + static_cast<i64>(c.size()) <= 2 * t) {
                sz += static_cast<i64>(c.size());
                part.insert(part.end(), c.begin(), c.end());
            }
        if (sz >= t) {
            std::sort(part.begin(), part.end());
            return BoundedSplit{s, std::move(part)};
        }
    }
    throw std::logic_error("split_bounded: no separator found");
}

ThreeSplit split_three(const Graph& f, std::span<const int> sub, i64 m, i64 M,
                       bool require_f3_above_m) {
    VirtualTree vt(f, sub);
    TreeThreeSplit ts = split_tree_three(vt.adj, m, M, require_f3_above_m);
    ThreeSplit out;
    out.s = vt.to_orig[ts.s];
    out.f1 = map_back(ts.f1, vt.to_orig);
    out.f2 = map_back(ts.f2, vt.to_orig);
    out.f3 = map_back(ts.f3, vt.to_orig);
    i64 n = static_cast<i64>(sub.size());
    i64 s1 = out.f1.size(), s2 = out.f2.size(), s3 = out.f3.size();
    if (s3 < m || s3 > M) throw std::logic_error("split_three: f3 out of [m, M]");
    if (s1 > n - 1 - M) throw std::logic_error("split_three: f1 too large");
    if (s2 > s1) throw std::logic_error("split_three: f2 larger than f1");
    if (s3 < M && s2 == 0 && s1 > 0) throw std::logic_error("split_three: f2 empty below M");
    if (require_f3_above_m && s3 <= m) throw std::logic_error("split_three: f3 not above m");
    check_no_cross_edges(f, {&out.f1, &out.f2, &out.f3}, "split_three");
    return out;
}

ThreeSplit split_one_sep(const Graph& f, std::span<const int> sub, const DeltaContext& ctx) {
    i64 n = static_cast<i64>(sub.size());
    i64 N = ctx.N, X = ctx.X;
    if (X < 1 || N < X) throw std::invalid_argument("split_one_sep: need N >= X >= 1");
    if (n < 2 * N + X + 2 || n > 5 * N + X + 2)
        throw std::invalid_argument("split_one_sep: size out of range");
    i64 m = std::max<i64>(0, n - 1 - 4 * N - X);
    i64 M = n - 1 - (2 * N + X);
    ThreeSplit out = split_three(f, sub, m, M);
    i64 s1 = out.f1.size(), s2 = out.f2.size(), s3 = out.f3.size();
    if (s1 > 2 * N + X) throw std::logic_error("split_one_sep: |f1| > 2N+X");
    if (s2 > 2 * N + delta(s1, ctx)) throw std::logic_error("split_one_sep: |f2| bound");
    if (s3 > 2 * N + delta(s1 + s2, ctx) + 1) throw std::logic_error("split_one_sep: |f3| bound");
    if (s1 + s2 < 2 * N + X) throw std::logic_error("split_one_sep: |f1|+|f2| < 2N+X");
    return out;
}

namespace {

std::vector<int> without(std::span<const int> sub, int drop) {
    std::vector<int> out;
    out.reserve(sub.size() - 1);
    for (int v : sub)
        if (v != drop) out.push_back(v);
    return out;
}

std::vector<int> concat_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TwoSepSplit split_two_sep(const Graph& f, std::span<const int> sub, const DeltaContext& ctx) {
    i64 n = static_cast<i64>(sub.size());
    i64 N = ctx.N, X = ctx.X;
    if (X < 1 || N < X) throw std::invalid_argument("split_two_sep: need N >= X >= 1");
    if (n < 5 * N + X + 3 || n > 8 * N + X + 3)
        throw std::invalid_argument("split_two_sep: size out of range");

    i64 m1 = n - (5 * N + X + 2);
    i64 M1 = n - (2 * N + X + 1);
    ThreeSplit first = split_three(f, sub, m1, M1);

    TwoSepSplit out;
    out.s1 = first.s;
    out.f1 = std::move(first.f1);
    const std::vector<int>& f2p = first.f2;
    const std::vector<int>& f3p = first.f3;
    i64 a1 = out.f1.size();

    auto run_cor1 = [&](const std::vector<int>& fbar, i64 subX) {
        ThreeSplit inner = split_one_sep(f, fbar, DeltaContext{N, subX});
        out.s2 = inner.s;
        out.f3 = std::move(inner.f1);
        out.f5 = std::move(inner.f2);
        out.f6 = std::move(inner.f3);
    };

    if (a1 + static_cast<i64>(f2p.size()) <= 4 * N + X) {
        out.f2 = f2p;
        std::vector<int> fbar = f3p;
        i64 d2 = delta(a1 + out.f2.size(), ctx);
        if (static_cast<i64>(fbar.size()) <= 2 * N + d2 + 1) {
            out.s2 = fbar.front();
            out.f3 = without(fbar, out.s2);
        } else {
            run_cor1(fbar, d2);
        }
    } else {
        i64 d1 = delta(a1, ctx);
        std::vector<int> fbar_big = concat_sorted(f2p, f3p);
        if (a1 == 2 * N + X) {
            run_cor1(fbar_big, N);
        } else if (static_cast<i64>(fbar_big.size()) < 5 * N + d1 + 2) {
            run_cor1(fbar_big, d1);
        } else {
            out.f4 = f2p;
            i64 m2 = d1;
            i64 M2 = delta(a1 + out.f4.size(), ctx);
            if (M2 < 2 * m2) throw std::logic_error("split_two_sep: Delta(f1 u f4) < 2 Delta(f1)");
            ThreeSplit second = split_three(f, f3p, m2, M2);
            out.s2 = second.s;
            out.f6 = std::move(second.f1);
            out.f5 = std::move(second.f2);
            out.f3 = std::move(second.f3);
        }
    }

    // Postconditions of the two-separator procedure.
    i64 i6 = n == 8 * N + X + 3 ? 1 : 0;
    std::vector<i64> sizes{static_cast<i64>(out.f1.size()), static_cast<i64>(out.f2.size()),
                           static_cast<i64>(out.f3.size()), static_cast<i64>(out.f4.size()),
                           static_cast<i64>(out.f5.size()), static_cast<i64>(out.f6.size())};
    if (sizes[0] > 2 * N + X) throw std::logic_error("split_two_sep: |f1| > 2N+X");
    if (2 * (sizes[0] + sizes[1]) < 3 * N + 2 * X)
        throw std::logic_error("split_two_sep: |f1|+|f2| < 3N/2+X");
    i64 prefix = sizes[0];
    for (int i = 2; i <= 6; ++i) {
        i64 bound = 2 * N + delta(prefix, ctx) + (i == 6 ? i6 : 0);
        if (sizes[i - 1] > bound) throw std::logic_error("split_two_sep: |f" + std::to_string(i) + "| bound");
        prefix += sizes[i - 1];
    }
    check_no_cross_edges(f, {&out.f1, &out.f2, &out.f4}, "split_two_sep(s1)");
    std::vector<int> fbar_check = concat_sorted(concat_sorted(out.f3, out.f5), out.f6);
    check_no_cross_edges(f, {&out.f3, &out.f5, &out.f6}, "split_two_sep(s2)");
    (void)fbar_check;
    return out;
}

// ---------------------------------------------------------------------------
// Treewidth versions: the engine runs on the decomposition tree, where (for a
// normal decomposition) a component union of k tree nodes spans exactly k
// graph vertices outside the separator bag.

namespace {

struct TdPieces {
    int z = -1;
    std::vector<int> separator;          // B_z
    std::vector<std::vector<int>> parts; // graph vertex sets
};

std::vector<int> piece_vertices(const TreeDecomposition& td, const std::vector<int>& nodes,
                                const std::vector<int>& bag_z) {
    std::vector<int> verts;
    for (int x : nodes) verts.insert(verts.end(), td.bags[x].begin(), td.bags[x].end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> out;
    std::set_difference(verts.begin(), verts.end(), bag_z.begin(), bag_z.end(), std::back_inserter(out));
    return out;
}

}  // namespace

TwSplit split_three_tw(const Graph& g, std::span<const int> sub, const TreeDecomposition& td,
                       i64 m, i64 M, int w) {
    if (!is_normal(td, w)) throw std::invalid_argument("split_three_tw: decomposition not normal");
    if (static_cast<i64>(sub.size()) < w + 1 + M)
        throw std::invalid_argument("split_three_tw: graph too small");
    TreeThreeSplit ts = split_tree_three(td.tree_adjacency(), m, M);
    TwSplit out;
    out.separator = td.bags[ts.s];
    out.g1 = piece_vertices(td, ts.f1, out.separator);
    out.g2 = piece_vertices(td, ts.f2, out.separator);
    out.g3 = piece_vertices(td, ts.f3, out.separator);
    i64 n = static_cast<i64>(sub.size());
    i64 s1 = out.g1.size(), s2 = out.g2.size(), s3 = out.g3.size();
    if (s3 < m || s3 > M) throw std::logic_error("split_three_tw: g3 out of [m, M]");
    if (s1 > n - w - 1 - M) throw std::logic_error("split_three_tw: g1 too large");
    if (s2 > s1) throw std::logic_error("split_three_tw: g2 larger than g1");
    check_no_cross_edges(g, {&out.g1, &out.g2, &out.g3}, "split_three_tw");
    return out;
}

TwBoundedSplit split_bounded_tw([[maybe_unused]] const Graph& g, std::span<const int> sub,
                                const TreeDecomposition& td, i64 t) {
    // The part sizes live entirely on the decomposition tree: for a normal
    // decomposition, a union of k tree nodes spans exactly k graph vertices
    // outside the separator bag.
    if (!is_normal(td, td.width())) throw std::invalid_argument("split_bounded_tw: not normal");
    int w = td.width();
    i64 n = static_cast<i64>(sub.size());
    if (n < t + w + 1) throw std::invalid_argument("split_bounded_tw: graph too small");
    i64 tn = td.bag_count();
    TwBoundedSplit out;
    if (t == 0) {
        out.bag = 0;
        out.separator = td.bags[0];
        return out;
    }
    if (tn - 1 <= 2 * t) {
        // Remove a leaf bag; everything else is one component union of size tn-1.
        auto adj = td.tree_adjacency();
        int leaf = 0;
        for (int x = 0; x < tn; ++x)
            if (adj[x].size() <= 1) {
                leaf = x;
                break;
            }
        out.bag = leaf;
        out.separator = td.bags[leaf];
        std::vector<int> rest_nodes;
        for (int x = 0; x < tn; ++x)
            if (x != leaf) rest_nodes.push_back(x);
        out.part = piece_vertices(td, rest_nodes, out.separator);
        return out;
    }
    TreeThreeSplit ts = split_tree_three(td.tree_adjacency(), t, 2 * t);
    out.bag = ts.s;
    out.separator = td.bags[ts.s];
    out.part = piece_vertices(td, ts.f3, out.separator);
    return out;
}

TwSplit split_one_sep_tw(const Graph& g, std::span<const int> sub, const TreeDecomposition& td,
                         const DeltaContext& ctx, int w) {
    i64 n = static_cast<i64>(sub.size());
    i64 N = ctx.N, X = ctx.X;
    if (X < 1 || N < std::max<i64>(X, w + 1))
        throw std::invalid_argument("split_one_sep_tw: need N >= max(X, w+1), X >= 1");
    if (n < 2 * N + X + w + 2 || n > 5 * N + X + 2 * w + 2)
        throw std::invalid_argument("split_one_sep_tw: size out of range");
    i64 m = std::max<i64>(0, n - w - 1 - 4 * N - X);
    i64 M = n - w - 1 - 2 * N - X;
    TwSplit out = split_three_tw(g, sub, td, m, M, w);
    i64 s1 = out.g1.size(), s2 = out.g2.size(), s3 = out.g3.size();
    if (s1 > 2 * N + X) throw std::logic_error("split_one_sep_tw: |g1| > 2N+X");
    if (s2 > 2 * N + delta(s1, ctx)) throw std::logic_error("split_one_sep_tw: |g2| bound");
    if (s3 > 2 * N + delta(s1 + s2, ctx) + w + 1) throw std::logic_error("split_one_sep_tw: |g3| bound");
    if (s1 + s2 < 2 * N + X) throw std::logic_error("split_one_sep_tw: |g1|+|g2| < 2N+X");
    return out;
}

TwTwoSepSplit split_two_sep_tw(const Graph& g, std::span<const int> sub, const TreeDecomposition& td,
                               const DeltaContext& ctx, int w) {
    i64 n = static_cast<i64>(sub.size());
    i64 N = ctx.N, X = ctx.X;
    if (X < 1 || N < std::max<i64>(X, w + 1))
        throw std::invalid_argument("split_two_sep_tw: need N >= max(X, w+1), X >= 1");
    if (n < 5 * N + X + 2 * w + 3 || n > 8 * N + X + 3 * w + 3)
        throw std::invalid_argument("split_two_sep_tw: size out of range");

    i64 m1 = n - (5 * N + X + 2 * w + 2);
    i64 M1 = n - (2 * N + X + w + 1);
    TwSplit first = split_three_tw(g, sub, td, m1, M1, w);

    TwTwoSepSplit out;
    out.s1 = std::move(first.separator);
    out.g1 = std::move(first.g1);
    const std::vector<int>& g2p = first.g2;
    const std::vector<int>& g3p = first.g3;
    i64 a1 = out.g1.size();

    auto run_cor1 = [&](const std::vector<int>& gbar, i64 subX) {
        TreeDecomposition sub_td =
            normalize_decomposition(g, gbar, restrict_decomposition(td, gbar), w);
        TwSplit inner = split_one_sep_tw(g, gbar, sub_td, DeltaContext{N, subX}, w);
        out.s2 = std::move(inner.separator);
        out.g3 = std::move(inner.g1);
        out.g5 = std::move(inner.g2);
        out.g6 = std::move(inner.g3);
    };

    if (a1 + static_cast<i64>(g2p.size()) <= 4 * N + X) {
        out.g2 = g2p;
        std::vector<int> gbar = g3p;
        i64 d2 = delta(a1 + out.g2.size(), ctx);
        if (static_cast<i64>(gbar.size()) <= 2 * N + d2 + w + 1) {
            out.s2.assign(gbar.begin(), gbar.begin() + std::min<size_t>(w + 1, gbar.size()));
            if (static_cast<int>(out.s2.size()) != w + 1)
                throw std::logic_error("split_two_sep_tw: gbar smaller than w+1");
            std::vector<int> rest;
            std::set_difference(gbar.begin(), gbar.end(), out.s2.begin(), out.s2.end(),
                                std::back_inserter(rest));
            out.g3 = std::move(rest);
        } else {
            run_cor1(gbar, d2);
        }
    } else {
        i64 d1 = delta(a1, ctx);
        std::vector<int> gbar_big = concat_sorted(g2p, g3p);
        if (a1 == 2 * N + X) {
            run_cor1(gbar_big, N);
        } else if (static_cast<i64>(gbar_big.size()) < 5 * N + d1 + 2 * w + 2) {
            run_cor1(gbar_big, d1);
        } else {
            out.g4 = g2p;
            i64 m2 = d1;
            i64 M2 = delta(a1 + out.g4.size(), ctx);
            if (M2 < 2 * m2) throw std::logic_error("split_two_sep_tw: Delta(g1 u g4) < 2 Delta(g1)");
            TreeDecomposition sub_td =
                normalize_decomposition(g, g3p, restrict_decomposition(td, g3p), w);
            TwSplit second = split_three_tw(g, g3p, sub_td, m2, M2, w);
            out.s2 = std::move(second.separator);
            out.g6 = std::move(second.g1);
            out.g5 = std::move(second.g2);
            out.g3 = std::move(second.g3);
        }
    }

    i64 i6 = std::clamp<i64>(n - (8 * N + X + 2 * w + 2), 0, w + 1);
    std::vector<i64> sizes{static_cast<i64>(out.g1.size()), static_cast<i64>(out.g2.size()),
                           static_cast<i64>(out.g3.size()), static_cast<i64>(out.g4.size()),
                           static_cast<i64>(out.g5.size()), static_cast<i64>(out.g6.size())};
    if (std::getenv("UNIV_SPLIT_DEBUG")) {
        std::fprintf(stderr, "two_sep_tw n=%lld N=%lld X=%lld w=%d sizes=%lld,%lld,%lld,%lld,%lld,%lld i6=%lld\n",
                     (long long)n, (long long)N, (long long)X, w,
                     (long long)sizes[0], (long long)sizes[1], (long long)sizes[2],
                     (long long)sizes[3], (long long)sizes[4], (long long)sizes[5], (long long)i6);
    }
    if (sizes[0] > 2 * N + X) throw std::logic_error("split_two_sep_tw: |g1| > 2N+X");
    if (2 * (sizes[0] + sizes[1]) < 3 * N + 2 * X)
        throw std::logic_error("split_two_sep_tw: |g1|+|g2| < 3N/2+X");
    i64 prefix = sizes[0];
    for (int i = 2; i <= 6; ++i) {
        i64 bound = 2 * N + delta(prefix, ctx) + (i == 6 ? i6 : 0);
        if (sizes[i - 1] > bound)
            throw std::logic_error("split_two_sep_tw: |g" + std::to_string(i) + "| bound");
        prefix += sizes[i - 1];
    }
    check_no_cross_edges(g, {&out.g1, &out.g2, &out.g4}, "split_two_sep_tw(s1)");
    check_no_cross_edges(g, {&out.g3, &out.g5, &out.g6}, "split_two_sep_tw(s2)");
    return out;
}

}  // namespace univ
