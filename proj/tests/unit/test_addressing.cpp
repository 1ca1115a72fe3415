#include "doctest.h"

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "univ/addressing.hpp"

using namespace univ;

namespace {
Address addr(const TreeShape& t, const std::string& s) { return parse_address(s, t); }
}  // namespace

TEST_CASE("children in digit order") {
    TreeShape t(3, 3);
    auto cs = children(Address::root(), t);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].str() == "1");
    CHECK(cs[2].str() == "3");
    auto c33 = children(addr(t, "33"), t);
    REQUIRE(c33.size() == 3);
    CHECK(c33[0].str() == "331");
    CHECK(c33[1].str() == "332");
    CHECK(c33[2].str() == "333");
    CHECK(children(addr(t, "333"), t).empty());
}

TEST_CASE("descendants") {
    TreeShape t32(3, 2);
    auto d3 = descendants(addr(t32, "3"), t32);
    REQUIRE(d3.size() == 3);
    TreeShape t(3, 3);
    CHECK(descendants(addr(t, "333"), t).empty());
    CHECK(descendants(Address::root(), t).size() == 39);
    CHECK(descendant_count(Address::root(), t) == 39);
}

TEST_CASE("shift worked examples") {
    TreeShape t(3, 3);
    CHECK(shift(addr(t, "32"), +2, t).str() == "11");
    CHECK(shift(addr(t, "32"), -2, t).str() == "23");
    CHECK(shift(addr(t, "33"), -3, t).str() == "23");
    CHECK(shift(addr(t, "32"), 0, t).str() == "32");
    // succ(dd) = 11 and pred(11) = dd
    CHECK(shift(addr(t, "33"), +1, t).str() == "11");
    CHECK(shift(addr(t, "11"), -1, t).str() == "33");
    CHECK(shift(Address::root(), 5, t).is_root());
}

TEST_CASE("shift is a cyclic group action") {
    TreeShape t(3, 4);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 10000; ++it) {
        int level = 1 + static_cast<int>(rng() % 4);
        i64 rank = static_cast<i64>(rng() % t.level_size(level));
        i64 a = static_cast<i64>(rng() % 1000) - 500;
        Address v = address_at_rank(level, rank, t);
        CHECK(shift(shift(v, a, t), -a, t) == v);
    }
}

TEST_CASE("eat_cmp basics") {
    CHECK(eat_cmp(Address{{3, 3, 3}}, Address{{3, 3, 2}}) == EatOrder::Before);
    CHECK(eat_cmp(Address{{3}}, Address{{3, 2}}) == EatOrder::After);
    CHECK(eat_cmp(Address{{2, 1}}, Address{{2, 1}}) == EatOrder::Equal);
}

TEST_CASE("eat_cmp is a strict total order and matches eat_index") {
    for (int d = 2; d <= 4; ++d)
        for (int h = 0; h <= (d == 4 ? 3 : 4); ++h) {
            TreeShape t(d, h);
            auto sorted = oracle::eat_sorted(t);
            for (size_t i = 0; i < sorted.size(); ++i) {
                CHECK(eat_index(sorted[i], t) == static_cast<i64>(i) + 1);
                CHECK(eat_at(static_cast<i64>(i) + 1, t) == sorted[i]);
            }
            // Trichotomy on a sample of pairs.
            for (size_t i = 0; i < sorted.size(); ++i)
                for (size_t j = i + 1; j < sorted.size(); ++j)
                    CHECK(eat_cmp(sorted[i], sorted[j]) == EatOrder::Before);
        }
}

TEST_CASE("worked eating positions at d=3, h=3") {
    TreeShape t(3, 3);
    CHECK(eat_index(addr(t, "32"), t) == 8);
    CHECK(eat_index(Address::root(), t) == 40);
    CHECK(eat_index(addr(t, "333"), t) == 1);
    CHECK(eat_index(addr(t, "2"), t) == 26);
    CHECK(eat_index(addr(t, "13"), t) == 30);
    CHECK(eat_at(40, t).is_root());
    CHECK_THROWS_AS(eat_at(41, t), std::out_of_range);
    CHECK_THROWS_AS(eat_at(0, t), std::out_of_range);
}

TEST_CASE("descendants precede their root in the eating order") {
    for (int d : {2, 3})
        for (int h = 1; h <= 4; ++h) {
            TreeShape t(d, h);
            for (auto& v : oracle::all_addresses(t)) {
                i64 pv = eat_index(v, t);
                for (auto& u : descendants(v, t)) CHECK(eat_index(u, t) < pv);
            }
        }
}

TEST_CASE("subtree intervals are eat-contiguous") {
    TreeShape t(3, 3);
    for (auto& v : oracle::all_addresses(t)) {
        EatInterval iv = subtree_interval(v, t);
        CHECK(iv.hi == eat_index(v, t));
        CHECK(iv.length() == descendant_count(v, t) + 1);
        for (auto& u : descendants(v, t)) CHECK(iv.contains(eat_index(u, t)));
    }
}

TEST_CASE("address parsing and rendering") {
    TreeShape t(3, 3);
    CHECK(parse_address("e", t).is_root());
    CHECK(parse_address("132", t).str() == "132");
    CHECK_THROWS_AS(parse_address("140", t), std::invalid_argument);
    CHECK_THROWS_AS(parse_address("1111", t), std::invalid_argument);
}
