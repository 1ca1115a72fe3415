#include "univ/addressing.hpp"

#include <algorithm>
#include <stdexcept>

namespace univ {

TreeShape::TreeShape(int d_, int h_) : d(d_), h(h_) {
    if (d < 2 || d > 9) throw std::invalid_argument("TreeShape: d must be in [2,9]");
    if (h < 0) throw std::invalid_argument("TreeShape: h must be >= 0");
    pow.resize(h + 1);
    tsize.resize(h + 1);
    pow[0] = 1;
    for (int l = 1; l <= h; ++l) pow[l] = pow[l - 1] * d;
    tsize[0] = 1;
    for (int j = 1; j <= h; ++j) tsize[j] = tsize[j - 1] * d + 1;
}

Address Address::child(int digit) const {
    Address c = *this;
    c.digits.push_back(static_cast<std::uint8_t>(digit));
    return c;
}

std::string Address::str() const {
    if (digits.empty()) return "e";
    std::string s;
    s.reserve(digits.size());
    for (auto dgt : digits) s.push_back(static_cast<char>('0' + dgt));
    return s;
}

std::vector<Address> children(const Address& v, const TreeShape& t) {
    std::vector<Address> out;
    if (v.level() >= t.h) return out;
    out.reserve(t.d);
    for (int c = 1; c <= t.d; ++c) out.push_back(v.child(c));
    return out;
}

bool is_ancestor(const Address& a, const Address& v) {
    if (a.digits.size() >= v.digits.size()) return false;
    return std::equal(a.digits.begin(), a.digits.end(), v.digits.begin());
}

i64 rank_in_level(const Address& v, const TreeShape& t) {
    i64 r = 0;
    for (auto dgt : v.digits) r = r * t.d + (dgt - 1);
    return r;
}

Address address_at_rank(int level, i64 rank, const TreeShape& t) {
    Address v;
    v.digits.resize(level);
    for (int i = level - 1; i >= 0; --i) {
        v.digits[i] = static_cast<std::uint8_t>(rank % t.d + 1);
        rank /= t.d;
    }
    return v;
}

Address shift(const Address& v, i64 a, const TreeShape& t) {
    int level = v.level();
    i64 size = t.level_size(level);
    i64 r = (rank_in_level(v, t) + a) % size;
    if (r < 0) r += size;
    return address_at_rank(level, r, t);
}

EatOrder eat_cmp(const Address& x, const Address& y) {
    size_t n = std::max(x.digits.size(), y.digits.size());
    for (size_t i = 0; i < n; ++i) {
        int dx = i < x.digits.size() ? x.digits[i] : 0;
        int dy = i < y.digits.size() ? y.digits[i] : 0;
        if (dx != dy) return dx > dy ? EatOrder::Before : EatOrder::After;
    }
    return EatOrder::Equal;
}

i64 eat_index(const Address& v, const TreeShape& t) {
    i64 pos = 0;
    int level = v.level();
    for (int j = 1; j <= level; ++j) pos += (t.d - v.digits[j - 1]) * t.subtree_size(j);
    return pos + t.subtree_size(level);
}

Address eat_at(i64 pos, const TreeShape& t) {
    if (pos < 1 || pos > t.total()) throw std::out_of_range("eat_at: index out of range");
    Address v;
    i64 r = pos;
    for (int level = 1; level <= t.h; ++level) {
        i64 here = t.subtree_size(level - 1);
        if (r == here) return v;  // current prefix is eaten last in its subtree
        i64 block = t.subtree_size(level);
        i64 idx = (r - 1) / block;  // how many later-digit sibling blocks precede
        v.digits.push_back(static_cast<std::uint8_t>(t.d - idx));
        r -= idx * block;
    }
    return v;
}

std::vector<Address> descendants(const Address& v, const TreeShape& t) {
    std::vector<Address> out;
    std::vector<Address> stack{v};
    while (!stack.empty()) {
        Address cur = stack.back();
        stack.pop_back();
        for (int c = 1; c <= t.d; ++c) {
            if (cur.level() >= t.h) break;
            Address ch = cur.child(c);
            out.push_back(ch);
            stack.push_back(ch);
        }
    }
    return out;
}

i64 descendant_count(const Address& v, const TreeShape& t) {
    return t.subtree_size(v.level()) - 1;
}

EatInterval subtree_interval(const Address& v, const TreeShape& t) {
    i64 hi = eat_index(v, t);
    return EatInterval{hi - t.subtree_size(v.level()) + 1, hi};
}

Address parse_address(const std::string& s, const TreeShape& t) {
    if (s == "e") return Address::root();
    Address v;
    if (s.empty() || static_cast<int>(s.size()) > t.h)
        throw std::invalid_argument("parse_address: bad address '" + s + "'");
    for (char c : s) {
        int dgt = c - '0';
        if (dgt < 1 || dgt > t.d)
            throw std::invalid_argument("parse_address: digit out of range in '" + s + "'");
        v.digits.push_back(static_cast<std::uint8_t>(dgt));
    }
    return v;
}

}  // namespace univ
