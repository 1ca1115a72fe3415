// Test-only oracles, independent of the library's arithmetic paths: a naive
// set-based evaluator of the edge rules, and exhaustive split searches.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "univ/addressing.hpp"
#include "univ/graph.hpp"

namespace oracle {

using univ::Address;
using univ::TreeShape;
using univ::i64;

inline std::vector<Address> all_addresses(const TreeShape& t) {
    std::vector<Address> out{Address::root()};
    for (size_t i = 0; i < out.size(); ++i)
        for (auto& c : children(out[i], t)) out.push_back(c);
    return out;
}

// Eating order by sorting with eat_cmp (pad-with-0 reversed lex), slowest way.
inline std::vector<Address> eat_sorted(const TreeShape& t) {
    auto v = all_addresses(t);
    std::sort(v.begin(), v.end(), [](const Address& a, const Address& b) {
        return eat_cmp(a, b) == univ::EatOrder::Before;
    });
    return v;
}

// Edge set of T*_{h,d} straight from the three rules, as sets of address
// strings.
inline std::set<std::pair<std::string, std::string>> tstar_edges(const TreeShape& t,
                                                                 bool include_t3 = true) {
    auto order = eat_sorted(t);
    std::map<std::string, i64> eat_pos;
    for (size_t i = 0; i < order.size(); ++i) eat_pos[order[i].str()] = static_cast<i64>(i) + 1;

    std::set<std::pair<std::string, std::string>> edges;
    auto add = [&edges](const Address& a, const Address& b) {
        if (a == b) return;
        auto sa = a.str(), sb = b.str();
        edges.insert({std::min(sa, sb), std::max(sa, sb)});
    };
    for (auto& v : all_addresses(t)) {
        for (auto& u : descendants(v, t)) add(v, u);  // T1
        for (int q = 1; q <= t.d - 1; ++q) {          // T2
            Address u = shift(v, -q, t);
            add(v, u);
            for (auto& x : descendants(u, t)) add(v, x);
        }
        if (include_t3 && t.d == 3 && v.level() < t.h) {  // T3
            Address z = shift(v, +1, t).child(1);
            std::vector<Address> block = descendants(z, t);
            block.push_back(z);
            std::sort(block.begin(), block.end(), [&](const Address& a, const Address& b) {
                return eat_pos[a.str()] < eat_pos[b.str()];
            });
            size_t half = block.size() / 2;
            for (size_t i = block.size() - half; i < block.size(); ++i) add(v, block[i]);
        }
    }
    return edges;
}

// Brute-force check that some vertex s and union of components of F \ s has
// size in [lo, hi]; returns true if one exists.
inline bool bounded_split_exists(const univ::Graph& f, i64 lo, i64 hi) {
    std::vector<int> sub(f.n);
    for (int i = 0; i < f.n; ++i) sub[i] = i;
    for (int s = 0; s < f.n; ++s) {
        std::vector<int> rest;
        for (int v : sub)
            if (v != s) rest.push_back(v);
        auto comps = univ::components_of(f, rest);
        size_t k = comps.size();
        if (k > 20) continue;  // oracle only used on small instances
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            i64 total = 0;
            for (size_t i = 0; i < k; ++i)
                if (mask >> i & 1) total += static_cast<i64>(comps[i].size());
            if (total >= lo && total <= hi) return true;
        }
    }
    return false;
}

}  // namespace oracle
