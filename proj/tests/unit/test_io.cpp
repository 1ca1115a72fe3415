#include "doctest.h"

#include <sstream>

#include "univ/io.hpp"

using namespace univ;

TEST_CASE("graph round trip is byte exact") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 4);
    std::ostringstream out;
    write_pace_graph(out, g);
    std::istringstream in(out.str());
    Graph back = read_pace_graph(in);
    std::ostringstream again;
    write_pace_graph(again, back);
    CHECK(out.str() == again.str());
}

TEST_CASE("graph parse errors name the line") {
    SUBCASE("bad header") {
        std::istringstream in("p xx 3 1\n1 2\n");
        CHECK_THROWS_WITH_AS(read_pace_graph(in), doctest::Contains("line 1"), ParseError);
    }
    SUBCASE("bad edge") {
        std::istringstream in("p tw 3 1\nc comment\n1 9\n");
        CHECK_THROWS_WITH_AS(read_pace_graph(in), doctest::Contains("line 3"), ParseError);
    }
    SUBCASE("wrong edge count") {
        std::istringstream in("p tw 3 2\n1 2\n");
        CHECK_THROWS_AS(read_pace_graph(in), ParseError);
    }
}

TEST_CASE("td round trip") {
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}};
    td.tree_edges = {{0, 1}};
    std::ostringstream out;
    write_pace_td(out, td, 3);
    std::istringstream in(out.str());
    int n = 0;
    TreeDecomposition back = read_pace_td(in, &n);
    CHECK(n == 3);
    CHECK(back.bags == td.bags);
    CHECK(back.tree_edges == td.tree_edges);
}

TEST_CASE("host export matches its edge count and parses back") {
    Host h = Host::universal(14, 3);
    std::ostringstream out;
    write_host_pace(out, h, true);
    std::istringstream in(out.str());
    Graph g = read_pace_graph(in);
    CHECK(g.n == 14);
    CHECK(static_cast<i64>(g.edge_count()) == h.count_edges());
    // 1-indexed by eating order: vertex 1 = first eaten, adjacency matches.
    for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v)
            CHECK(g.has_edge(u - 1, v - 1) == h.is_adjacent(h.global_pos(u), h.global_pos(v)));
}

TEST_CASE("host export round trip is byte exact") {
    for (i64 n : {14, 40, 121}) {
        Host h = Host::universal(n, 3);
        std::ostringstream first;
        write_host_pace(first, h);
        std::istringstream in(first.str());
        Graph g = read_pace_graph(in);
        std::ostringstream second;
        write_pace_graph(second, g);
        CHECK(first.str() == second.str());
    }
}
