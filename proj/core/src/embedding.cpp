#include "univ/embedding.hpp"

#include <algorithm>
#include <stdexcept>

#include "univ/separators.hpp"

namespace univ {

i64 AdmissibleView::size() const {
    i64 s = static_cast<i64>(root_slots.size());
    for (auto& b : blocks) s += b.live;
    return s;
}

i64 AdmissibleView::pos_at(i64 k) const {
    for (auto& b : blocks) {
        if (k <= b.live) {
            EatInterval iv = host->blown_subtree_interval(b.base_root);
            return iv.hi - b.live + k;
        }
        k -= b.live;
    }
    if (k >= 1 && k <= static_cast<i64>(root_slots.size())) return root_slots[k - 1];
    throw std::out_of_range("AdmissibleView::pos_at");
}

namespace {

std::vector<i64> clique_slots(const Host& h, i64 base_root) {
    std::vector<i64> out;
    i64 hi = base_root * h.rmult();
    for (i64 p = hi - h.rmult() + 1; p <= hi; ++p) out.push_back(p);
    return out;
}

// View over the live suffix (of given size) of the subtree rooted at base
// position base_root.
AdmissibleView subtree_view(const Host& h, i64 base_root, i64 live) {
    AdmissibleView v;
    v.host = &h;
    i64 rm = h.rmult();
    EatInterval iv = h.blown_subtree_interval(base_root);
    if (live < 1 || live > iv.length()) throw std::logic_error("subtree_view: bad live size");
    if (live <= rm) {
        for (i64 p = iv.hi - live + 1; p <= iv.hi; ++p) v.root_slots.push_back(p);
        return v;
    }
    v.root_slots = clique_slots(h, base_root);
    Address root_addr = eat_at(base_root, h.shape());
    int child_level = root_addr.level() + 1;
    i64 cb = h.shape().subtree_size(child_level) * rm;
    i64 mass = live - rm;
    i64 full = (mass - 1) / cb;  // mass = full*cb + X, X in [1, cb]
    i64 X = mass - full * cb;
    int top_digit = static_cast<int>(full) + 1;
    if (top_digit > h.d()) throw std::logic_error("subtree_view: live size exceeds subtree");
    for (int digit = top_digit; digit >= 1; --digit) {
        Address c = root_addr.child(digit);
        v.blocks.push_back({eat_index(c, h.shape()), digit == top_digit ? X : cb});
    }
    return v;
}

}  // namespace

AdmissibleView full_view(const Host& host) {
    i64 root_base = host.base_total();
    return subtree_view(host, root_base, host.size());
}

AdmissibleView strip_prefix(const AdmissibleView& view, i64 k) {
    if (k < 0 || k >= view.size()) throw std::invalid_argument("strip_prefix: k out of range");
    AdmissibleView out = view;
    size_t i = 0;
    while (k > 0 && i < out.blocks.size()) {
        if (k >= out.blocks[i].live) {
            k -= out.blocks[i].live;
            ++i;
        } else {
            out.blocks[i].live -= k;
            k = 0;
        }
    }
    out.blocks.erase(out.blocks.begin(), out.blocks.begin() + i);
    if (k > 0) out.root_slots.erase(out.root_slots.begin(), out.root_slots.begin() + k);
    return out;
}

namespace {

// Flat walk of the blocks one level below the view's blocks, in eating
// order. Rungs mark the view blocks' own cliques, which the mass coordinate
// skips.
struct RibbonEntry {
    i64 base_root = 0;
    i64 live = 0;      // blown vertices; 0 marks a rung
    i64 rung_of = 0;   // for rungs: base position of the view block root
};

struct Ribbon {
    std::vector<RibbonEntry> entries;
    i64 total_mass = 0;
};

Ribbon build_ribbon(const Host& h, const AdmissibleView& view) {
    Ribbon r;
    i64 rm = h.rmult();
    for (size_t i = 0; i < view.blocks.size(); ++i) {
        const auto& b = view.blocks[i];
        Address addr = eat_at(b.base_root, h.shape());
        i64 cb = h.shape().subtree_size(addr.level() + 1) * rm;
        i64 mass = b.live - rm;
        if (mass < 0) throw std::logic_error("build_ribbon: block without full clique");
        if (mass > 0) {
            i64 full = (mass - 1) / cb;
            i64 X = mass - full * cb;
            int top_digit = static_cast<int>(full) + 1;
            for (int digit = top_digit; digit >= 1; --digit) {
                Address c = addr.child(digit);
                r.entries.push_back({eat_index(c, h.shape()), digit == top_digit ? X : cb, 0});
                r.total_mass += digit == top_digit ? X : cb;
            }
        }
        r.entries.push_back({b.base_root, 0, b.base_root});
    }
    return r;
}

// The sibling view rooted at `root_base`'s clique whose blocks are the ribbon
// blocks from mass offset `at`, up to `width` of them.
AdmissibleView ribbon_view(const Host& h, const Ribbon& r, i64 root_base, i64 at, int width) {
    AdmissibleView v;
    v.host = &h;
    v.root_slots = clique_slots(h, root_base);
    i64 acc = 0;
    for (auto& e : r.entries) {
        if (e.live == 0) continue;  // rung
        if (static_cast<int>(v.blocks.size()) >= width) break;
        if (v.blocks.empty()) {
            if (at < acc + e.live) v.blocks.push_back({e.base_root, acc + e.live - at});
        } else {
            v.blocks.push_back({e.base_root, e.live});
        }
        acc += e.live;
    }
    if (v.blocks.empty()) throw std::logic_error("ribbon_view: cursor past ribbon end");
    return v;
}

struct Engine {
    const Host& H;
    const Graph& G;
    EmbedOptions opts;
    const TreeDecomposition* top_td = nullptr;  // non-null for treewidth guests
    std::vector<i64> out;
    int rm;
    int d;
    i64 placed = 0;

    Engine(const Host& h, const Graph& g, EmbedOptions o, const TreeDecomposition* td)
        : H(h), G(g), opts(o), top_td(td), out(g.n, -1), rm(h.rmult()), d(h.d()) {}

    void bump(i64 EmbedStats::* f) {
        if (opts.stats) ++(opts.stats->*f);
    }

    void place(int v, i64 pos) {
        if (out[v] != -1) throw std::logic_error("embed: vertex placed twice");
        out[v] = pos;
        ++placed;
    }

    // The first (or last) c ids of the sorted subset.
    std::vector<int> pick(const std::vector<int>& sub, i64 c) {
        std::vector<int> s;
        if (opts.pick_largest)
            s.assign(sub.end() - c, sub.end());
        else
            s.assign(sub.begin(), sub.begin() + c);
        return s;
    }

    static std::vector<int> minus(const std::vector<int>& sub, const std::vector<int>& drop) {
        std::vector<int> out;
        std::set_difference(sub.begin(), sub.end(), drop.begin(), drop.end(),
                            std::back_inserter(out));
        return out;
    }

    TreeDecomposition part_td(const std::vector<int>& sub) {
        return normalize_decomposition(G, sub, restrict_decomposition(*top_td, sub), H.w());
    }

    void place_clique(const std::vector<int>& s, const std::vector<i64>& slots) {
        for (size_t i = 0; i < s.size(); ++i) place(s[i], slots[i]);
    }

    void embed(const std::vector<int>& sub, const AdmissibleView& view, int depth) {
        i64 k = static_cast<i64>(sub.size());
        if (k == 0) return;
        if (opts.stats) opts.stats->max_depth = std::max<i64>(opts.stats->max_depth, depth);
        if (depth > 300) throw std::logic_error("embed: recursion depth runaway");
        i64 vsize = view.size();
        if (k > vsize - rm) throw std::logic_error("embed: guest exceeds view capacity");

        if (view.blocks.empty()) {
            // Root clique remainder: any placement works.
            bump(&EmbedStats::clique_base);
            for (i64 i = 0; i < k; ++i) place(sub[i], view.root_slots[i]);
            return;
        }

        const auto& b1 = view.blocks[0];
        i64 x1 = b1.live;

        if (x1 <= rm) {
            // The first block is down to (part of) its root clique.
            bump(&EmbedStats::root_clique_short);
            EatInterval iv = H.blown_subtree_interval(b1.base_root);
            std::vector<i64> slots;
            for (i64 p = iv.hi - x1 + 1; p <= iv.hi; ++p) slots.push_back(p);
            if (k <= x1) {
                for (i64 i = 0; i < k; ++i) place(sub[i], slots[i]);
                return;
            }
            std::vector<int> s = pick(sub, x1);
            place_clique(s, slots);
            AdmissibleView rest = view;
            rest.blocks.erase(rest.blocks.begin());
            embed(minus(sub, s), rest, depth + 1);
            return;
        }

        if (view.blocks.size() == 1) {
            bump(&EmbedStats::shape_a);
            AdmissibleView sub_view = subtree_view(H, b1.base_root, x1);
            if (k <= x1 - rm) {
                embed(sub, sub_view, depth + 1);
                return;
            }
            std::vector<int> s = pick(sub, k - (x1 - rm));
            embed(minus(sub, s), sub_view, depth + 1);
            place_clique(s, std::vector<i64>(sub_view.root_slots.begin(),
                                             sub_view.root_slots.begin() + s.size()));
            return;
        }

        // Two or three blocks: the separator bookkeeping applies.
        Address b1_addr = eat_at(b1.base_root, H.shape());
        i64 N = H.shape().subtree_size(b1_addr.level() + 1) * rm;
        i64 mass1 = x1 - rm;
        i64 X = mass1 - ((mass1 - 1) / N) * N;
        i64 small_cap = static_cast<i64>(d - 1) * N + X + rm;

        Ribbon ribbon = build_ribbon(H, view);
        i64 theta1 = mass1;
        i64 theta2 = theta1 + static_cast<i64>(d) * N;

        if (k <= small_cap) {
            bump(&EmbedStats::small_case);
            AdmissibleView u = ribbon_view(H, ribbon, b1.base_root, 0, d);
            i64 c = std::clamp<i64>(k - mass1, 0, rm);
            std::vector<int> s = pick(sub, c);
            embed(minus(sub, s), u, depth + 1);
            place_clique(s, std::vector<i64>(u.root_slots.begin(), u.root_slots.begin() + c));
            return;
        }

        // Split the guest and run the ribbon flow.
        std::vector<std::vector<int>> parts;
        std::vector<int> sep1, sep2;
        bool two_sep = false;

        if (d == 2) {
            bump(&EmbedStats::one_sep);
            i64 m = std::max<i64>(0, k - 2 * N - X - 1);
            i64 M = k - N - X - 1;
            bool special = false;
            if (k == 3 * N + X + 2) {
                m = N;
                M = 2 * N + 1;
                special = true;
                bump(&EmbedStats::binary_special);
            }
            ThreeSplit ts = split_three(G, sub, m, M, special);
            sep1 = {ts.s};
            parts = {std::move(ts.f1), std::move(ts.f2), std::move(ts.f3)};
        } else if (k <= 5 * N + X + 2 * rm) {
            bump(&EmbedStats::one_sep);
            if (rm == 1) {
                ThreeSplit ts = split_one_sep(G, sub, DeltaContext{N, X});
                sep1 = {ts.s};
                parts = {std::move(ts.f1), std::move(ts.f2), std::move(ts.f3)};
            } else {
                TreeDecomposition td = part_td(sub);
                TwSplit ts = split_one_sep_tw(G, sub, td, DeltaContext{N, X}, H.w());
                sep1 = std::move(ts.separator);
                parts = {std::move(ts.g1), std::move(ts.g2), std::move(ts.g3)};
            }
        } else {
            bump(&EmbedStats::two_sep);
            two_sep = true;
            if (view.blocks.size() < 3) throw std::logic_error("embed: two-separator case without three blocks");
            if (k > 8 * N + X + 3 * rm) throw std::logic_error("embed: guest exceeds two-separator range");
            if (rm == 1) {
                TwoSepSplit ts = split_two_sep(G, sub, DeltaContext{N, X});
                sep1 = {ts.s1};
                sep2 = {ts.s2};
                parts = {std::move(ts.f1), std::move(ts.f2), std::move(ts.f3),
                         std::move(ts.f4), std::move(ts.f5), std::move(ts.f6)};
            } else {
                TreeDecomposition td = part_td(sub);
                TwTwoSepSplit ts = split_two_sep_tw(G, sub, td, DeltaContext{N, X}, H.w());
                sep1 = std::move(ts.s1);
                sep2 = std::move(ts.s2);
                parts = {std::move(ts.g1), std::move(ts.g2), std::move(ts.g3),
                         std::move(ts.g4), std::move(ts.g5), std::move(ts.g6)};
            }
        }

        const i64 b2_base = view.blocks[1].base_root;
        bool s1_placed = false, s2_placed = !two_sep;
        i64 mass = 0;

        auto place_sep1 = [&] {
            if (mass < theta1) throw std::logic_error("embed: separator 1 before its clique");
            place_clique(sep1, clique_slots(H, b1.base_root));
            s1_placed = true;
        };
        auto place_sep2 = [&] {
            if (mass < theta2) throw std::logic_error("embed: separator 2 before its clique");
            place_clique(sep2, clique_slots(H, b2_base));
            s2_placed = true;
        };

        for (size_t i = 0; i < parts.size(); ++i) {
            if (!s1_placed && mass >= theta1) place_sep1();
            if (s1_placed && !s2_placed && mass >= theta2) place_sep2();
            if (s1_placed && s2_placed) {
                // Everything left goes into the remaining admissible suffix.
                std::vector<int> rest;
                for (size_t j = i; j < parts.size(); ++j) {
                    std::vector<int> merged;
                    std::merge(rest.begin(), rest.end(), parts[j].begin(), parts[j].end(),
                               std::back_inserter(merged));
                    rest = std::move(merged);
                }
                if (!rest.empty()) {
                    bump(&EmbedStats::suffix_tails);
                    i64 consumed = mass + static_cast<i64>(rm) * (two_sep ? 2 : 1);
                    embed(rest, strip_prefix(view, consumed), depth + 1);
                    mass += static_cast<i64>(rest.size());
                }
                break;
            }
            if (parts[i].empty()) continue;
            i64 root_base;
            if (!s1_placed) {
                if (i >= 2) {
                    // Type-3 fallback: the second root covers the remainder of
                    // the first block through type-3 edges.
                    bump(&EmbedStats::t3_views);
                    if (d != 3) throw std::logic_error("embed: type-3 branch requires d = 3");
                    i64 remnant = theta1 - mass;
                    Address b2_addr = eat_at(b2_base, H.shape());
                    EatInterval cover = H.type3_blown_interval(b2_addr);
                    if (H.options().t3_mode != T3Mode::FullBlockHalf)
                        throw std::logic_error("embed: type-3 branch needs the full-block halving");
                    if (!H.t3_enabled() || remnant > cover.length())
                        throw std::logic_error("embed: type-3 cover too small for remainder");
                    root_base = b2_base;
                } else {
                    root_base = b1.base_root;
                }
            } else {
                root_base = b2_base;
            }
            AdmissibleView u = ribbon_view(H, ribbon, root_base, mass, d);
            embed(parts[i], u, depth + 1);
            mass += static_cast<i64>(parts[i].size());
        }
        if (!s1_placed) place_sep1();
        if (!s2_placed) place_sep2();
    }
};

}  // namespace

ValidationReport validate_embedding_with(const std::function<bool(i64, i64)>& adjacent,
                                         const Host& host, const Graph& guest,
                                         const Embedding& emb, bool require_prefix) {
    ValidationReport rep;
    std::vector<i64> image;
    for (int v = 0; v < guest.n; ++v) {
        i64 p = emb.to_host[v];
        if (p == -1) return {false, "vertex " + std::to_string(v) + " unmapped"};
        if (!host.live(p)) return {false, "vertex " + std::to_string(v) + " mapped to a dead position"};
        image.push_back(p);
    }
    std::vector<i64> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return {false, "not injective"};
    for (int u = 0; u < guest.n; ++u)
        for (int v : guest.adj[u]) {
            if (u > v) continue;
            if (!adjacent(emb.to_host[u], emb.to_host[v]))
                return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " not preserved (" + host.vertex_name(emb.to_host[u]) + "," +
                                   host.vertex_name(emb.to_host[v]) + ")"};
        }
    if (require_prefix) {
        for (size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != host.live_lo() + static_cast<i64>(i))
                return {false, "image is not the eating-order prefix"};
    }
    return rep;
}

ValidationReport validate_embedding(const Host& host, const Graph& guest, const Embedding& emb,
                                    bool require_prefix) {
    return validate_embedding_with(
        [&host](i64 p, i64 q) { return host.is_adjacent(p, q); }, host, guest, emb, require_prefix);
}

AdmissibleView sibling_block(const AdmissibleView& view, const Address& r, const Address& r_u,
                             int s3) {
    const Host& h = *view.host;
    if (s3 < 0 || s3 > h.d() - 1) throw std::invalid_argument("sibling_block: s3 out of range");
    Address parent = r_u;
    parent.digits.pop_back();
    if (!(parent == r)) throw std::invalid_argument("sibling_block: r_u is not a child of r");
    if (view.blocks.empty()) throw std::invalid_argument("sibling_block: view has no blocks");
    i64 ru_base = eat_index(r_u, h.shape());
    // The live prefix of the view must lie in r_u's block.
    EatInterval ru_iv = h.blown_subtree_interval(ru_base);
    i64 first = view.pos_at(1);
    if (!ru_iv.contains(first)) throw std::invalid_argument("sibling_block: view prefix not under r_u");
    AdmissibleView out;
    out.host = &h;
    out.root_slots = clique_slots(h, eat_index(r, h.shape()));
    out.blocks.push_back({ru_base, ru_iv.hi - first + 1});
    Address cur = r_u;
    for (int i = 1; i <= s3; ++i) {
        cur = shift(cur, -1, h.shape());
        out.blocks.push_back({eat_index(cur, h.shape()),
                              h.shape().subtree_size(cur.level()) * h.rmult()});
    }
    return out;
}

AdmissibleView type3_block(const AdmissibleView& view, const Address& r, const Address& r_u) {
    const Host& h = *view.host;
    if (h.d() != 3) throw std::invalid_argument("type3_block: requires d = 3");
    Address parent = r_u;
    parent.digits.pop_back();
    if (!(parent == r) || r_u.digits.back() != 1)
        throw std::invalid_argument("type3_block: r_u must be the first child of r");
    i64 ru_base = eat_index(r_u, h.shape());
    EatInterval ru_iv = h.blown_subtree_interval(ru_base);
    i64 first = view.pos_at(1);
    if (!ru_iv.contains(first)) throw std::invalid_argument("type3_block: view prefix not under r_u");
    i64 live = ru_iv.hi - first + 1;
    Address root = shift(r, -1, h.shape());
    EatInterval cover = h.type3_blown_interval(root);
    if (live > cover.length())
        throw std::invalid_argument("type3_block: type-3 block unavailable");
    AdmissibleView out;
    out.host = &h;
    out.root_slots = clique_slots(h, eat_index(root, h.shape()));
    out.blocks.push_back({ru_base, live});
    Address cur = r_u;
    for (int i = 1; i <= 2; ++i) {
        cur = shift(cur, -1, h.shape());
        out.blocks.push_back({eat_index(cur, h.shape()),
                              h.shape().subtree_size(cur.level()) * h.rmult()});
    }
    return out;
}

namespace {

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.n);
    for (int i = 0; i < g.n; ++i) v[i] = i;
    return v;
}

Embedding finish(Engine& e) {
    Embedding emb;
    emb.to_host = std::move(e.out);
    return emb;
}

}  // namespace

Embedding embed_forest(const Host& host, const Graph& forest, EmbedOptions opts) {
    if (host.w() != 0) throw std::invalid_argument("embed_forest: host is a blow-up; use embed_graph_tw");
    if (host.d() > 3) throw std::invalid_argument("embed_forest: embedding supports d in {2,3}");
    if (!is_forest(forest)) throw std::invalid_argument("embed_forest: guest is not a forest");
    if (forest.n >= host.size()) throw std::invalid_argument("embed_forest: guest too large");
    Engine e(host, forest, opts, nullptr);
    e.embed(all_vertices(forest), full_view(host), 0);
    return finish(e);
}

Embedding embed_tree_full(const Host& host, const Graph& tree, EmbedOptions opts) {
    if (host.w() != 0) throw std::invalid_argument("embed_tree_full: host is a blow-up");
    if (host.d() > 3) throw std::invalid_argument("embed_tree_full: embedding supports d in {2,3}");
    if (tree.n != host.size()) throw std::invalid_argument("embed_tree_full: |T| != |U|");
    if (!is_tree(tree) && tree.n > 0) throw std::invalid_argument("embed_tree_full: guest is not a tree");
    Engine e(host, tree, opts, nullptr);
    // Remove a leaf (any vertex of a 1-vertex tree) and give it the root.
    int v = -1;
    for (int u = 0; u < tree.n; ++u) {
        if (tree.adj[u].size() <= 1 && (v == -1 || (opts.pick_largest ? u > v : u < v))) v = u;
    }
    std::vector<int> rest;
    for (int u = 0; u < tree.n; ++u)
        if (u != v) rest.push_back(u);
    e.embed(rest, full_view(host), 0);
    e.place(v, host.blown_total());
    return finish(e);
}

Embedding embed_graph_tw(const Host& host, const Graph& g, const TreeDecomposition& td,
                         EmbedOptions opts) {
    if (host.w() < 1) throw std::invalid_argument("embed_graph_tw: host is not a blow-up");
    if (g.n > host.size() - host.rmult())
        throw std::invalid_argument("embed_graph_tw: guest larger than |A|-w-1");
    auto verts = all_vertices(g);
    if (auto err = check_decomposition(g, verts, td))
        throw std::invalid_argument("embed_graph_tw: " + *err);
    if (td.width() > host.w()) throw std::invalid_argument("embed_graph_tw: width exceeds w");
    Engine e(host, g, opts, &td);
    e.embed(verts, full_view(host), 0);
    return finish(e);
}

Embedding embed_graph_full_tw(const Host& host, const Graph& g, const TreeDecomposition& td,
                              EmbedOptions opts) {
    if (host.w() < 1) throw std::invalid_argument("embed_graph_full_tw: host is not a blow-up");
    if (g.n != host.size()) throw std::invalid_argument("embed_graph_full_tw: |G| != n");
    auto verts = all_vertices(g);
    if (auto err = check_decomposition(g, verts, td))
        throw std::invalid_argument("embed_graph_full_tw: " + *err);
    if (td.width() > host.w()) throw std::invalid_argument("embed_graph_full_tw: width exceeds w");
    Engine e(host, g, opts, &td);
    std::vector<int> s = e.pick(verts, std::min<i64>(host.rmult(), g.n));
    std::vector<int> rest = Engine::minus(verts, s);
    e.embed(rest, full_view(host), 0);
    std::vector<i64> slots;
    for (i64 p = host.blown_total() - static_cast<i64>(s.size()) + 1; p <= host.blown_total(); ++p)
        slots.push_back(p);
    e.place_clique(s, slots);
    return finish(e);
}

}  // namespace univ
