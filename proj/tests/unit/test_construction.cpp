#include "doctest.h"

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "univ/host.hpp"

using namespace univ;

namespace {

std::set<std::pair<std::string, std::string>> host_edges(const Host& h) {
    std::set<std::pair<std::string, std::string>> out;
    for (i64 p = h.live_lo(); p <= h.blown_total(); ++p)
        for (i64 q = p + 1; q <= h.blown_total(); ++q)
            if (h.is_adjacent(p, q)) {
                auto a = h.vertex_name(p), b = h.vertex_name(q);
                out.insert({std::min(a, b), std::max(a, b)});
            }
    return out;
}

}  // namespace

TEST_CASE("vertex_count closed form") {
    CHECK(vertex_count(3, 3) == 40);
    CHECK(vertex_count(0, 5) == 1);
    CHECK(vertex_count(2, 2) == 7);
    CHECK(vertex_count(-1, 3) == 0);
}

TEST_CASE("small hosts against the rule oracle") {
    // triangle and K4
    Host t12 = Host::t_star(1, 2);
    CHECK(t12.count_edges() == 3);
    Host t13 = Host::t_star(1, 3);
    CHECK(t13.count_edges() == 6);
    Host t0 = Host::t_star(0, 3);
    CHECK(t0.count_edges() == 0);

    for (int d : {2, 3})
        for (int h = 1; h <= (d == 2 ? 4 : 3); ++h) {
            TreeShape shape(d, h);
            auto expected = oracle::tstar_edges(shape);
            Host host = Host::t_star(h, d);
            CHECK(host_edges(host) == expected);
        }
}

TEST_CASE("interval edge count agrees with the matrix count") {
    for (int d : {2, 3})
        for (i64 n : {1, 2, 5, 7, 13, 14, 27, 40, 100, 121}) {
            Host mat = Host::universal(n, d);
            Host lazy = Host::universal(n, d, HostOptions{.materialize_cap = 0});
            REQUIRE(mat.materialized());
            REQUIRE(!lazy.materialized());
            CHECK(mat.count_edges() == lazy.count_edges());
        }
}

TEST_CASE("lazy adjacency equals materialized adjacency") {
    for (i64 n : {14, 40, 121}) {
        Host mat = Host::universal(n, 3);
        Host lazy = Host::universal(n, 3, HostOptions{.materialize_cap = 0});
        for (i64 p = mat.live_lo(); p <= mat.blown_total(); ++p)
            for (i64 q = p + 1; q <= mat.blown_total(); ++q)
                CHECK(mat.is_adjacent(p, q) == lazy.is_adjacent(p, q));
    }
}

TEST_CASE("U(14,3) vertex set is the last block plus the root") {
    Host h = Host::universal(14, 3);
    CHECK(h.h() == 3);
    std::set<std::string> names;
    for (i64 p = h.live_lo(); p <= h.blown_total(); ++p) names.insert(h.vertex_name(p));
    std::set<std::string> expected{"e",   "1",   "11",  "12",  "13",  "111", "112",
                                  "113", "121", "122", "123", "131", "132", "133"};
    CHECK(names == expected);
}

TEST_CASE("U(2,3) is a single edge") {
    Host h = Host::universal(2, 3);
    CHECK(h.count_edges() == 1);
    CHECK(h.vertex_name(h.blown_total()) == "e");
    CHECK(h.vertex_name(h.blown_total() - 1) == "1");
}

TEST_CASE("type-3 targets") {
    Host h = Host::universal(40, 3);
    TreeShape t(3, 3);
    auto ts = h.type3_targets(parse_address("2", t));
    std::set<std::string> names;
    for (auto& a : ts) names.insert(a.str());
    CHECK(names == std::set<std::string>{"31", "311"});
    CHECK(h.type3_targets(parse_address("333", t)).empty());
    // |targets| = floor(|T*_{h-l-1}| / 2)
    for (int l = 0; l <= 2; ++l) {
        Address v = l == 0 ? Address::root() : eat_at(vertex_count(3 - l, 3), t);
        CHECK(static_cast<i64>(h.type3_targets(v).size()) == vertex_count(3 - l - 1, 3) / 2);
    }
}

TEST_CASE("per-vertex edge budget") {
    CHECK(per_vertex_edge_budget(1, 1, 3) == 2);       // leaf: d-1
    CHECK(per_vertex_edge_budget(0, 1, 3) == 11);      // 3*4-1+floor(1/2)
    CHECK(per_vertex_edge_budget(0, 2, 2) == 13);      // 2*7-1
    CHECK(per_vertex_edge_budget(2, 2, 2) == 1);
}

TEST_CASE("budget sum minus correction equals the exact count") {
    for (int d : {2, 3})
        for (int h = 0; h <= 4; ++h) {
            Host host = Host::t_star(h, d, HostOptions{.materialize_cap = 1 << 20});
            CHECK(host.count_edges() == budget_sum(h, d) - budget_attribution_correction(h, d));
        }
}

TEST_CASE("suffix monotonicity: U(n,d) induced inside U(n',d)") {
    for (int d : {2, 3})
        for (int h = 1; h <= 3; ++h) {
            i64 total = vertex_count(h, d);
            Host big = Host::with_height(d, h, 0, total);
            for (i64 n = 1; n < total; ++n) {
                Host small = Host::with_height(d, h, 0, n);
                for (i64 p = small.live_lo(); p <= small.blown_total(); ++p)
                    for (i64 q = p + 1; q <= small.blown_total(); ++q)
                        CHECK(small.is_adjacent(p, q) == big.is_adjacent(p, q));
            }
        }
}

TEST_CASE("the admissible root is adjacent to every other vertex") {
    for (int d : {2, 3})
        for (int h = 0; h <= 3; ++h) {
            i64 total = vertex_count(h, d);
            for (i64 n = 2; n <= total; ++n) {
                Host host = Host::with_height(d, h, 0, n);
                i64 root = host.blown_total();
                for (i64 p = host.live_lo(); p < root; ++p) CHECK(host.is_adjacent(root, p));
            }
        }
}

TEST_CASE("decompose_n identity") {
    SUBCASE("full tree") {
        NDecomposition nd = decompose_n(40, 3);
        CHECK(nd.h == 3);
        CHECK(nd.lstar == 3);
        CHECK(nd.alpha == std::vector<int>{2, 2, 2});
        CHECK(nd.reconstruct(3) == 40);
    }
    SUBCASE("n = 1") {
        NDecomposition nd = decompose_n(1, 3);
        CHECK(nd.lstar == 0);
        CHECK(nd.reconstruct(3) == 1);
    }
    SUBCASE("U(14,3)") {
        NDecomposition nd = decompose_n(14, 3);
        CHECK(nd.h == 3);
        CHECK(nd.reconstruct(3) == 14);
        // First live vertex of U(14,3) is 133, at level 3.
        Host h = Host::universal(14, 3);
        CHECK(nd.lstar == h.address_of(h.live_lo()).level());
    }
    SUBCASE("identity across a range") {
        for (int d : {2, 3})
            for (i64 n = 1; n <= 400; ++n) {
                NDecomposition nd = decompose_n(n, d);
                CHECK(nd.reconstruct(d) == n);
                for (int a : nd.alpha) {
                    CHECK(a >= 0);
                    CHECK(a <= d - 1);
                }
            }
    }
}

TEST_CASE("edge count report carries the d-dependent coefficient") {
    EdgeCountReport r3 = edge_count_report(Host::universal(100, 3));
    EdgeCountReport r2 = edge_count_report(Host::universal(100, 2));
    CHECK(r3.n == 100);
    CHECK(r3.bound == doctest::Approx(19.0 / (6 * std::log(3.0)) * 100 * std::log(100.0)));
    CHECK(r2.bound == doctest::Approx(2.0 / std::log(2.0) * 100 * std::log(100.0)));
}
