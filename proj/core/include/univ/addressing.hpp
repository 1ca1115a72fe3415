#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace univ {

using i64 = std::int64_t;

// Perfect d-ary tree V_{h,d}: all digit strings over {1..d} of length 0..h.
// The empty string is the root. Only d in [2,9] is supported by address
// arithmetic; the closed-form counting functions accept any d >= 2.
struct TreeShape {
    int d = 0;
    int h = 0;
    std::vector<i64> pow;    // pow[l] = d^l, l = 0..h
    std::vector<i64> tsize;  // tsize[j] = size of a height-j subtree, j = 0..h

    TreeShape() = default;
    TreeShape(int d, int h);

    i64 total() const { return tsize[h]; }
    i64 level_size(int level) const { return pow[level]; }
    // Size of the subtree rooted at a level-`level` vertex; 0 past the leaves.
    i64 subtree_size(int level) const {
        int j = h - level;
        return j < 0 ? 0 : tsize[j];
    }
};

struct Address {
    std::vector<std::uint8_t> digits;  // each in [1, d]

    int level() const { return static_cast<int>(digits.size()); }
    bool is_root() const { return digits.empty(); }
    static Address root() { return Address{}; }
    Address child(int digit) const;

    // Digit string; the root renders as "e".
    std::string str() const;

    friend bool operator==(const Address&, const Address&) = default;
};

enum class EatOrder { Before, Equal, After };

// Children v1..vd in digit order; empty at level h.
std::vector<Address> children(const Address& v, const TreeShape& t);

// Strict prefix test: is `a` a proper ancestor of `v`?
bool is_ancestor(const Address& a, const Address& v);

// Lexicographic rank of v within its level (0-based).
i64 rank_in_level(const Address& v, const TreeShape& t);
Address address_at_rank(int level, i64 rank, const TreeShape& t);

// v +/- a: cyclic within v's level. Total on all addresses; at level 0 the
// level has one element, so the root maps to itself.
Address shift(const Address& v, i64 a, const TreeShape& t);

// Eating order: x is eaten before y iff x is lexicographically larger after
// right-padding with 0 (0 being smaller than every digit).
EatOrder eat_cmp(const Address& x, const Address& y);

// 1-based position of v in the eating order of V_{h,d}; eat_at inverts it.
// eat_at throws std::out_of_range for pos outside [1, total].
i64 eat_index(const Address& v, const TreeShape& t);
Address eat_at(i64 pos, const TreeShape& t);

// All strict extensions of v within V_{h,d}.
std::vector<Address> descendants(const Address& v, const TreeShape& t);
i64 descendant_count(const Address& v, const TreeShape& t);

// Subtrees are contiguous in the eating order; v itself is eaten last, at hi.
struct EatInterval {
    i64 lo = 0, hi = -1;  // empty when hi < lo
    i64 length() const { return hi < lo ? 0 : hi - lo + 1; }
    bool contains(i64 p) const { return lo <= p && p <= hi; }
};
EatInterval subtree_interval(const Address& v, const TreeShape& t);

// Parse "e" or a digit string; throws std::invalid_argument on bad input.
Address parse_address(const std::string& s, const TreeShape& t);

}  // namespace univ
