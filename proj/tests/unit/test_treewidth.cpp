#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "univ/embedding.hpp"
#include "univ/harness.hpp"
#include "univ/treewidth.hpp"

using namespace univ;

namespace {
std::vector<int> all(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}
}  // namespace

TEST_CASE("partial k-tree generator") {
    SUBCASE("keep_prob = 1 gives the k-tree edge count") {
        for (int w : {1, 2, 3})
            for (int n : {w + 1, 10, 25}) {
                auto [g, td] = generate_partial_ktree(n, w, 42, 1.0);
                CHECK(g.edge_count() == w * n - w * (w + 1) / 2);
                CHECK(is_normal(td, w));
                CHECK(!check_decomposition(g, all(n), td).has_value());
            }
    }
    SUBCASE("keep_prob = 0, w = 1 degenerates to an edgeless forest") {
        auto [g, td] = generate_partial_ktree(12, 1, 7, 0.0);
        CHECK(g.edge_count() == 0);
        CHECK(is_forest(g));
        CHECK(!check_decomposition(g, all(12), td).has_value());
    }
    SUBCASE("decomposition valid across seeds") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            auto [g, td] = generate_partial_ktree(15, 2, seed, 0.6);
            CHECK(!check_decomposition(g, all(15), td).has_value());
        }
    }
}

TEST_CASE("normalize_decomposition") {
    SUBCASE("natural path decomposition is already normal") {
        Graph p = Graph::path(4);
        TreeDecomposition td;
        td.bags = {{0, 1}, {1, 2}, {2, 3}};
        td.tree_edges = {{0, 1}, {1, 2}};
        CHECK(is_normal(td, 1));
        TreeDecomposition out = normalize_decomposition(p, all(4), td, 1);
        CHECK(is_normal(out, 1));
        CHECK(!check_decomposition(p, all(4), out).has_value());
    }
    SUBCASE("undersized bags get padded") {
        Graph p = Graph::path(4);
        TreeDecomposition td;
        td.bags = {{0, 1}, {1}, {1, 2}, {2, 3}};
        td.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
        TreeDecomposition out = normalize_decomposition(p, all(4), td, 1);
        CHECK(is_normal(out, 1));
        CHECK(!check_decomposition(p, all(4), out).has_value());
    }
    SUBCASE("duplicate adjacent bags are contracted") {
        Graph p = Graph::path(3);
        TreeDecomposition td;
        td.bags = {{0, 1}, {0, 1}, {1, 2}};
        td.tree_edges = {{0, 1}, {1, 2}};
        TreeDecomposition out = normalize_decomposition(p, all(3), td, 1);
        CHECK(is_normal(out, 1));
        CHECK(out.bag_count() == 2);
    }
    SUBCASE("far-apart adjacent bags are interpolated") {
        Graph g(6);
        for (int i = 1; i < 6; ++i) g.add_edge(0, i);  // star, tw 1
        TreeDecomposition td;
        td.bags = {{0, 1, 2}, {0, 4, 5}, {0, 2, 3}};
        td.tree_edges = {{0, 1}, {0, 2}};
        TreeDecomposition out = normalize_decomposition(g, all(6), td, 2);
        CHECK(is_normal(out, 2));
        CHECK(!check_decomposition(g, all(6), out).has_value());
    }
    SUBCASE("property check across random instances") {
        std::mt19937_64 rng(77);
        for (int it = 0; it < 200; ++it) {
            int w = 1 + static_cast<int>(rng() % 3);
            int n = w + 1 + static_cast<int>(rng() % 25);
            auto [g, td] = generate_partial_ktree(n, w, rng(), 0.5);
            // Restriction to a random subset is valid but not normal.
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (rng() % 4 != 0) keep.push_back(v);
            if (static_cast<int>(keep.size()) < w + 1) continue;
            TreeDecomposition r = restrict_decomposition(td, keep);
            REQUIRE(!check_decomposition(g, keep, r).has_value());
            TreeDecomposition out = normalize_decomposition(g, keep, r, w);
            CHECK(is_normal(out, w));
            CHECK(!check_decomposition(g, keep, out).has_value());
        }
    }
    SUBCASE("invalid input is rejected with the axiom name") {
        Graph p = Graph::path(3);
        TreeDecomposition td;
        td.bags = {{0, 1}};  // vertex 2 uncovered
        CHECK_THROWS_WITH_AS(normalize_decomposition(p, all(3), td, 1),
                             doctest::Contains("in no bag"), std::invalid_argument);
    }
}

TEST_CASE("blown host structure") {
    SUBCASE("n = w+1 is a single clique") {
        for (int w : {1, 2, 3}) {
            Host h = Host::universal_tw(w + 1, w);
            CHECK(h.count_edges() == (w + 1) * w / 2);
        }
    }
    SUBCASE("clique columns are complete and joins follow the base graph") {
        Host h = Host::universal_tw(26, 1);  // n* = 13, h = 2
        Host base = Host::universal(13, 3);
        for (i64 p = h.live_lo(); p <= h.blown_total(); ++p)
            for (i64 q = p + 1; q <= h.blown_total(); ++q) {
                i64 bp = h.base_pos(p), bq = h.base_pos(q);
                if (bp == bq) {
                    CHECK(h.is_adjacent(p, q));
                } else if (base.is_adjacent(bp, bq)) {
                    // blow-up consistency: base adjacency forces the join
                    CHECK(h.is_adjacent(p, q));
                }
            }
    }
    SUBCASE("U(n,3,1) is not U(n,3)") {
        Host tw = Host::universal_tw(8, 1);
        Host base = Host::universal(8, 3);
        bool differ = tw.count_edges() != base.count_edges();
        if (!differ) {
            for (i64 p = 1; p <= 8 && !differ; ++p)
                for (i64 q = p + 1; q <= 8; ++q)
                    if (tw.is_adjacent(tw.global_pos(p), tw.global_pos(q)) !=
                        base.is_adjacent(base.global_pos(p), base.global_pos(q))) {
                        differ = true;
                        break;
                    }
        }
        CHECK(differ);
    }
    SUBCASE("blow-up sizes around full levels") {
        for (int w : {1, 2, 4}) {
            Host h1 = Host::universal_tw(5 * (w + 1), w);
            CHECK(h1.size() == 5 * (w + 1));
            Host h2 = Host::universal_tw(13 * (w + 1), w);
            CHECK(h2.size() == 13 * (w + 1));
            CHECK(h2.h() == 2);
        }
    }
}

TEST_CASE("count_edges_tw matches the blow-up accounting") {
    auto rep = check_tw_edge_suite(120, 3);
    CHECK_MESSAGE(rep.passed(), rep.summary());
}

TEST_CASE("lower_bound_edges") {
    CHECK(lower_bound_edges(10, 1) == 12);  // 8 + 3 + 1
    CHECK(lower_bound_edges(3, 1) == 1 * (3 - 2));
    CHECK(lower_bound_edges(2, 1) == 0);  // empty sum, n < 2w+1
    // single term at n = 2w+1: w * (n - 2w) = w
    for (int w : {1, 2, 3}) CHECK(lower_bound_edges(2 * w + 1, w) == w);
    // growth: value / (n w ln(n/w)) stays bounded below for n >> w
    for (int w : {1, 2}) {
        double r = static_cast<double>(lower_bound_edges(4000, w)) /
                   (4000.0 * w * std::log(4000.0 / w));
        CHECK(r > 0.5);
    }
}

TEST_CASE("tw embedding: trivial and boundary cases") {
    SUBCASE("single edge, w = 1") {
        Graph g(2);
        g.add_edge(0, 1);
        TreeDecomposition td;
        td.bags = {{0, 1}};
        Host h = Host::universal_tw(6, 1);
        Embedding e = embed_graph_tw(h, g, td);
        CHECK(validate_embedding(h, g, e).ok);
    }
    SUBCASE("complete graph on w+1 vertices, full embedding") {
        for (int w : {1, 2, 3}) {
            int n = w + 1;
            auto [g, td] = generate_partial_ktree(n, w, 1, 1.0);
            Host h = Host::universal_tw(n, w);
            Embedding e = embed_graph_full_tw(h, g, td);
            CHECK(validate_embedding(h, g, e).ok);
        }
    }
    SUBCASE("boundary |G| = |A| - w - 1") {
        std::mt19937_64 rng(55);
        for (int w : {1, 2}) {
            for (int it = 0; it < 30; ++it) {
                int na = 2 * (w + 1) + static_cast<int>(rng() % 50);
                Host h = Host::universal_tw(na, w);
                int ng = static_cast<int>(h.size()) - w - 1;
                auto [g, td] = generate_partial_ktree(ng, w, rng(), 0.8);
                Embedding e = embed_graph_tw(h, g, td);
                CHECK(validate_embedding(h, g, e).ok);
            }
        }
    }
    SUBCASE("size gap is rejected") {
        Host h = Host::universal_tw(10, 1);
        auto [g, td] = generate_partial_ktree(9, 1, 3, 1.0);
        CHECK_THROWS_AS(embed_graph_tw(h, g, td), std::invalid_argument);
    }
}

TEST_CASE("random partial k-trees embed fully") {
    for (int w : {1, 2, 3}) {
        auto rep = check_tw_embedding_suite(w, 40, 60, 1234 + w);
        CHECK_MESSAGE(rep.passed(), rep.summary());
    }
}

namespace {

// Natural width-1 decomposition of a tree: one bag per edge, bags chained
// along a BFS orientation.
TreeDecomposition edge_bags_of_tree(const Graph& t) {
    TreeDecomposition td;
    std::vector<int> parent(t.n, -2), order{0}, bag_of(t.n, -1);
    parent[0] = -1;
    for (size_t i = 0; i < order.size(); ++i)
        for (int v : t.adj[order[i]])
            if (parent[v] == -2) {
                parent[v] = order[i];
                order.push_back(v);
            }
    for (size_t i = 1; i < order.size(); ++i) {
        int v = order[i];
        td.bags.push_back({std::min(v, parent[v]), std::max(v, parent[v])});
        bag_of[v] = td.bag_count() - 1;
        int attach = parent[v] == 0 ? (bag_of[v] == 0 ? -1 : 0) : bag_of[parent[v]];
        if (attach >= 0) td.tree_edges.emplace_back(attach, bag_of[v]);
    }
    return td;
}

}  // namespace

TEST_CASE("w = 1 full embeddings agree with the d = 3 pipeline on trees") {
    std::mt19937_64 rng(66);
    for (int it = 0; it < 20; ++it) {
        int n = 4 + static_cast<int>(rng() % 40);
        Graph t = random_labeled_tree(n, rng);
        TreeDecomposition td = edge_bags_of_tree(t);
        REQUIRE(!check_decomposition(t, all(n), td).has_value());
        Host htw = Host::universal_tw(n, 1);
        Embedding e = embed_graph_full_tw(htw, t, td);
        CHECK(validate_embedding(htw, t, e).ok);
        Host h3 = Host::universal(n, 3);
        Embedding e3 = embed_tree_full(h3, t);
        CHECK(validate_embedding(h3, t, e3).ok);
    }
}

TEST_CASE("type-3 halving readings are comparable behind one switch") {
    for (int w : {1, 2}) {
        for (i64 n : {26, 52, 80}) {
            Host full = Host::universal_tw(n, w);
            Host base = Host::universal_tw(n, w, HostOptions{.t3_mode = T3Mode::BlownBaseHalf});
            Host dropped = Host::universal_tw(n, w, HostOptions{.t3_mode = T3Mode::DroppedSlotHalf});
            i64 ef = full.count_edges(), eb = base.count_edges(), ep = dropped.count_edges();
            CHECK(eb <= ef);  // blown-base targets are a subset of the full-block half
            CHECK(ep <= ef);
            for (i64 p = full.live_lo(); p <= full.blown_total(); ++p)
                for (i64 q = p + 1; q <= full.blown_total(); ++q) {
                    if (base.is_adjacent(p, q)) CHECK(full.is_adjacent(p, q));
                    if (dropped.is_adjacent(p, q)) CHECK(full.is_adjacent(p, q));
                }
        }
    }
}
