#include "univ/host.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace univ {

i64 vertex_count(int h, int d) {
    if (d < 2) throw std::invalid_argument("vertex_count: d must be >= 2");
    if (h < 0) return 0;
    i64 total = 0, p = 1;
    for (int l = 0; l <= h; ++l) {
        total += p;
        p *= d;
    }
    return total;
}

i64 per_vertex_edge_budget(int level, int h, int d) {
    if (level < 0 || level > h) throw std::invalid_argument("per_vertex_edge_budget: level out of range");
    i64 e = static_cast<i64>(d) * vertex_count(h - level, d) - 1;
    if (d == 3) e += vertex_count(h - level - 1, 3) / 2;
    return e;
}

i64 budget_sum(int h, int d) {
    i64 sum = 0, p = 1;
    for (int l = 0; l <= h; ++l) {
        sum += per_vertex_edge_budget(l, h, d) * p;
        p *= d;
    }
    return sum;
}

i64 budget_attribution_correction(int h, int d) {
    // Root T2 names {root} u D_root, all covered by T1 already.
    i64 corr = static_cast<i64>(d - 1) * vertex_count(h, d);
    if (h >= 1) {
        // Every level-1 pair is T2-mutual (cyclic distance <= d-1 both ways).
        corr += static_cast<i64>(d) * (d - 1) / 2;
        if (d == 3) {
            corr += vertex_count(h - 1, 3) / 2;  // root T3 inside D_root
            if (h >= 2) corr += 3 * (vertex_count(h - 2, 3) / 2);  // level-1 T3 inside D_{v-2}
        }
    }
    return corr;
}

i64 NDecomposition::reconstruct(int d) const {
    i64 n = 1;
    for (int l = 1; l <= lstar; ++l) n += static_cast<i64>(alpha[l - 1]) * vertex_count(h - l, d) + 1;
    return n;
}

NDecomposition decompose_n(i64 n, int d) {
    if (n < 1) throw std::invalid_argument("decompose_n: n must be >= 1");
    int h = 0;
    while (vertex_count(h, d) < n) ++h;
    NDecomposition out;
    out.h = h;
    i64 x = n;  // live size of the current partial subtree, root at level l-1
    for (int l = 1; l <= h && x > 1; ++l) {
        i64 block = vertex_count(h - l, d);
        i64 rest = x - 1;
        i64 full = (rest - 1) / block;  // rest = full*block + x', x' in [1, block]
        out.alpha.push_back(static_cast<int>(full));
        out.lstar = l;
        x = rest - full * block;
    }
    return out;
}

Host Host::t_star(int h, int d, HostOptions opts) {
    TreeShape shape(d, h);
    return Host(std::move(shape), 0, vertex_count(h, d), opts);
}

Host Host::universal(i64 n, int d, HostOptions opts) {
    if (n < 1) throw std::invalid_argument("universal: n must be >= 1");
    int h = 0;
    while (vertex_count(h, d) < n) ++h;
    return Host(TreeShape(d, h), 0, n, opts);
}

Host Host::universal_tw(i64 n, int w, HostOptions opts) {
    if (n < 1) throw std::invalid_argument("universal_tw: n must be >= 1");
    if (w < 1) throw std::invalid_argument("universal_tw: w must be >= 1");
    i64 nstar = (n + w) / (w + 1);  // ceil(n / (w+1))
    int h = 0;
    while (vertex_count(h, 3) < nstar) ++h;
    return Host(TreeShape(3, h), w, n, opts);
}

Host Host::with_height(int d, int h, int w, i64 n, HostOptions opts) {
    return Host(TreeShape(d, h), w, n, opts);
}

Host::Host(TreeShape shape, int w, i64 n, HostOptions opts)
    : shape_(std::move(shape)), w_(w), n_(n), opts_(opts) {
    if (w_ < 0) throw std::invalid_argument("Host: w must be >= 0");
    if (w_ > 0 && shape_.d != 3) throw std::invalid_argument("Host: blow-up requires d = 3");
    blown_total_ = shape_.total() * rmult();
    if (n_ < 1 || n_ > blown_total_) throw std::invalid_argument("Host: n out of range for this height");
    live_lo_ = blown_total_ - n_ + 1;
    if (n_ <= opts_.materialize_cap) materialize();
}

i64 Host::position(const Address& v, int slot) const {
    i64 bp = eat_index(v, shape_);
    return (bp - 1) * rmult() + (w_ + 1 - slot) + 1;
}

std::string Host::vertex_name(i64 p) const {
    std::string s = address_of(p).str();
    if (w_ > 0) s += ":" + std::to_string(slot(p));
    return s;
}

EatInterval Host::blown_subtree_interval(i64 bp) const {
    Address v = eat_at(bp, shape_);
    EatInterval base = subtree_interval(v, shape_);
    return EatInterval{(base.lo - 1) * rmult() + 1, base.hi * rmult()};
}

EatInterval Host::type3_base_interval(const Address& v) const {
    if (v.level() >= shape_.h) return EatInterval{};  // no children below
    Address z = shift(v, +1, shape_).child(1);
    EatInterval sub = subtree_interval(z, shape_);
    i64 half = sub.length() / 2;
    return EatInterval{sub.hi - half + 1, sub.hi};
}

EatInterval Host::type3_blown_interval(const Address& v) const {
    if (v.level() >= shape_.h) return EatInterval{};
    Address z = shift(v, +1, shape_).child(1);
    EatInterval sub = subtree_interval(z, shape_);
    i64 bhi = sub.hi * rmult();
    i64 half = (sub.length() * rmult()) / 2;
    return EatInterval{bhi - half + 1, bhi};
}

std::vector<EatInterval> Host::type3_blown_parts(const Address& v) const {
    std::vector<EatInterval> out;
    if (v.level() >= shape_.h) return out;
    if (opts_.t3_mode == T3Mode::FullBlockHalf) {
        out.push_back(type3_blown_interval(v));
        return out;
    }
    if (opts_.t3_mode == T3Mode::BlownBaseHalf) {
        EatInterval base = type3_base_interval(v);
        if (base.length() > 0)
            out.push_back(EatInterval{(base.lo - 1) * rmult() + 1, base.hi * rmult()});
        return out;
    }
    // Dropped-slot reading: the slot (z, w+1) is removed from the set before
    // halving; the eaten-last half of what remains can straddle it.
    Address z = shift(v, +1, shape_).child(1);
    EatInterval sub = subtree_interval(z, shape_);
    i64 bhi = sub.hi * rmult();
    i64 dropped = bhi - w_;  // position of (z, w+1)
    i64 half = (sub.length() * rmult() - 1) / 2;
    if (half <= w_) {
        out.push_back(EatInterval{bhi - half + 1, bhi});
    } else {
        out.push_back(EatInterval{bhi - half, dropped - 1});
        out.push_back(EatInterval{dropped + 1, bhi});
    }
    return out;
}

std::vector<Address> Host::type3_targets(const Address& v) const {
    std::vector<Address> out;
    if (shape_.d != 3) return out;
    EatInterval iv = type3_base_interval(v);
    for (i64 bp = iv.lo; bp <= iv.hi; ++bp) out.push_back(eat_at(bp, shape_));
    return out;
}

std::vector<EatInterval> Host::rule_target_intervals(i64 p) const {
    std::vector<EatInterval> out;
    i64 bp = base_pos(p);
    Address v = address_of(p);
    int r = rmult();

    if (w_ > 0) {  // clique: the rest of v's blown column
        i64 lo = (bp - 1) * r + 1;
        if (p > lo) out.push_back(EatInterval{lo, p - 1});
        if (p < bp * r) out.push_back(EatInterval{p + 1, bp * r});
    }

    if (v.is_root()) {
        if (bp > 1) out.push_back(EatInterval{1, (bp - 1) * r});  // T1 joins to all descendants
        return out;
    }

    EatInterval sub = subtree_interval(v, shape_);
    if (sub.lo < bp) out.push_back(EatInterval{(sub.lo - 1) * r + 1, (bp - 1) * r});  // T1

    for (int q = 1; q <= shape_.d - 1; ++q) {  // T2: v-q and its descendants, all slots
        Address u = shift(v, -static_cast<i64>(q), shape_);
        EatInterval us = subtree_interval(u, shape_);
        out.push_back(EatInterval{(us.lo - 1) * r + 1, us.hi * r});
    }

    if (t3_enabled()) {
        for (auto& t3 : type3_blown_parts(v))
            if (t3.length() > 0) out.push_back(t3);
    }
    return out;
}

namespace {
// Merge possibly-overlapping intervals, clip to [lo_clip, +inf).
std::vector<EatInterval> merge_clip(std::vector<EatInterval> ivs, i64 lo_clip) {
    std::vector<EatInterval> kept;
    for (auto& iv : ivs) {
        i64 lo = std::max(iv.lo, lo_clip);
        if (lo <= iv.hi) kept.push_back(EatInterval{lo, iv.hi});
    }
    std::sort(kept.begin(), kept.end(), [](const EatInterval& a, const EatInterval& b) { return a.lo < b.lo; });
    std::vector<EatInterval> out;
    for (auto& iv : kept) {
        if (!out.empty() && iv.lo <= out.back().hi + 1)
            out.back().hi = std::max(out.back().hi, iv.hi);
        else
            out.push_back(iv);
    }
    return out;
}
}  // namespace

void Host::materialize() {
    words_per_row_ = (n_ + 63) / 64;
    rows_.assign(static_cast<size_t>(n_ * words_per_row_), 0);
    for (i64 p = live_lo_; p <= blown_total_; ++p) {
        for (auto& iv : merge_clip(rule_target_intervals(p), live_lo_)) {
            for (i64 q = iv.lo; q <= iv.hi; ++q) {
                if (q == p) continue;
                set_bit(p, q);
                set_bit(q, p);
            }
        }
    }
}

void Host::set_bit(i64 p, i64 q) {
    i64 i = p - live_lo_, j = q - live_lo_;
    rows_[static_cast<size_t>(i * words_per_row_ + j / 64)] |= (std::uint64_t{1} << (j % 64));
}

bool Host::get_bit(i64 p, i64 q) const {
    i64 i = p - live_lo_, j = q - live_lo_;
    return (rows_[static_cast<size_t>(i * words_per_row_ + j / 64)] >> (j % 64)) & 1;
}

bool Host::is_adjacent_rules(i64 p, i64 q) const {
    if (p == q) return false;
    i64 bp = base_pos(p), bq = base_pos(q);
    if (bp == bq) return w_ > 0;  // same clique
    Address a = address_of(p), b = address_of(q);
    const Address* shallow = &a;
    const Address* deep = &b;
    if (a.level() > b.level()) {
        shallow = &b;
        deep = &a;
    }
    if (is_ancestor(*shallow, *deep)) return true;  // T1
    // T2 from either endpoint.
    for (int q2 = 1; q2 <= shape_.d - 1; ++q2) {
        Address ua = shift(a, -static_cast<i64>(q2), shape_);
        if (ua == b || is_ancestor(ua, b)) return true;
        Address ub = shift(b, -static_cast<i64>(q2), shape_);
        if (ub == a || is_ancestor(ub, a)) return true;
    }
    if (t3_enabled()) {
        i64 deep_p = (deep == &a) ? p : q;
        for (auto& t3 : type3_blown_parts(*shallow))
            if (t3.contains(deep_p)) return true;
        if (shallow->level() == deep->level()) {
            for (auto& t3 : type3_blown_parts(*deep))
                if (t3.contains(deep == &a ? q : p)) return true;
        }
    }
    return false;
}

bool Host::is_adjacent(i64 p, i64 q) const {
    if (p == q) return false;
    if (materialized() && live(p) && live(q)) return get_bit(p, q);
    return is_adjacent_rules(p, q);
}

i64 Host::count_edges() const {
    if (materialized()) {
        i64 bits = 0;
        for (auto wrd : rows_) bits += std::popcount(wrd);
        return bits / 2;
    }
    // Each unordered edge is produced by exactly one endpoint's rule list,
    // except mutual level-1 T2 pairs and clique pairs, produced by both.
    i64 total = 0;
    for (i64 p = live_lo_; p <= blown_total_; ++p) {
        for (auto& iv : merge_clip(rule_target_intervals(p), live_lo_)) {
            total += iv.length();
            if (iv.contains(p)) --total;
        }
    }
    i64 doubles = 0;
    if (shape_.h >= 1) {
        std::vector<i64> live_slots;  // per level-1 vertex
        for (int c = 1; c <= shape_.d; ++c) {
            Address v;
            v.digits.push_back(static_cast<std::uint8_t>(c));
            i64 hi = position(v, 1);
            i64 lo = hi - rmult() + 1;
            live_slots.push_back(std::max<i64>(0, hi - std::max(lo, live_lo_) + 1));
        }
        for (size_t i = 0; i < live_slots.size(); ++i)
            for (size_t j = i + 1; j < live_slots.size(); ++j) doubles += live_slots[i] * live_slots[j];
    }
    if (w_ > 0) {
        for (i64 bp = (live_lo_ - 1) / rmult() + 1; bp <= base_total(); ++bp) {
            i64 lo = std::max((bp - 1) * static_cast<i64>(rmult()) + 1, live_lo_);
            i64 k = bp * rmult() - lo + 1;
            doubles += k * (k - 1) / 2;
        }
    }
    return total - doubles;
}

EdgeCountReport edge_count_report(const Host& host) {
    EdgeCountReport rep;
    rep.n = host.size();
    rep.exact_edges = host.count_edges();
    double n = static_cast<double>(rep.n);
    double coeff = host.d() == 3 ? 19.0 / (6.0 * std::log(3.0))
                                 : static_cast<double>(host.d()) / std::log(static_cast<double>(host.d()));
    rep.bound = rep.n >= 2 ? coeff * n * std::log(n) : 0.0;
    rep.residual = static_cast<double>(rep.exact_edges) - rep.bound;
    return rep;
}

}  // namespace univ
