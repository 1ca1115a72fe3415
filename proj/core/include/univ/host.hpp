#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univ/addressing.hpp"

namespace univ {

// Closed-form |T*_{h,d}| = (d^{h+1}-1)/(d-1). Accepts any d >= 2.
i64 vertex_count(int h, int d);

// e_{h,d}(l) = d*|T*_{h-l,d}| - 1 + [d==3]*floor(|T*_{h-(l+1),3}|/2).
i64 per_vertex_edge_budget(int level, int h, int d);

// Sum over levels of e_{h,d}(l)*d^l, and the exact overcount of that sum
// relative to the true edge count of T*_{h,d} (root T2 and T3 redundancy,
// level-1 T3 containment, mutual level-1 T2 pairs).
i64 budget_sum(int h, int d);
i64 budget_attribution_correction(int h, int d);

// n = 1 + sum_{1<=l<=lstar} (alpha_l * |T*_{h-l,d}| + 1), alpha_l in [0,d-1].
struct NDecomposition {
    int h = 0;
    int lstar = 0;
    std::vector<int> alpha;  // alpha[l-1] for l = 1..lstar
    i64 reconstruct(int d) const;
};
NDecomposition decompose_n(i64 n, int d);

// Which reading of the blown type-3 rule's "half" to use. FullBlockHalf
// takes the eaten-last floor(size/2) of the whole blown block (the reading
// the two-separator embedding branch needs); BlownBaseHalf blows up the base
// rule's floor(B/2) targets (the reading under which the blow-up edge
// accounting is exact); DroppedSlotHalf drops the block root's first slot before
// halving.
enum class T3Mode { FullBlockHalf, BlownBaseHalf, DroppedSlotHalf };

struct HostOptions {
    bool include_t3 = true;          // d=3 only; disabling is for mutation tests
    T3Mode t3_mode = T3Mode::FullBlockHalf;
    i64 materialize_cap = 4096;      // adjacency bitsets stored up to this size
};

// A host graph: the last n vertices, in eating order, of the blown tree
// T*_{h,d,w} (w = 0 gives the plain T*_{h,d}). Vertices are identified by
// their global 1-based eating position p in [1, blown_total]; the live ones
// are p >= live_lo. External ids run 1..n by eating order.
class Host {
public:
    static Host t_star(int h, int d, HostOptions opts = {});
    static Host universal(i64 n, int d, HostOptions opts = {});        // minimal h
    static Host universal_tw(i64 n, int w, HostOptions opts = {});     // d = 3 blow-up
    static Host with_height(int d, int h, int w, i64 n, HostOptions opts = {});

    int d() const { return shape_.d; }
    int h() const { return shape_.h; }
    int w() const { return w_; }
    int rmult() const { return w_ + 1; }
    const TreeShape& shape() const { return shape_; }
    i64 size() const { return n_; }
    i64 base_total() const { return shape_.tsize[shape_.h]; }
    i64 blown_total() const { return blown_total_; }
    i64 live_lo() const { return live_lo_; }
    bool live(i64 p) const { return p >= live_lo_ && p <= blown_total_; }
    bool materialized() const { return !rows_.empty(); }
    bool t3_enabled() const { return opts_.include_t3 && shape_.d == 3; }
    const HostOptions& options() const { return opts_; }

    // Vertex naming. Base eating position = (p-1)/rmult + 1; slots within a
    // clique are eaten w+1 first, 1 last.
    i64 base_pos(i64 p) const { return (p - 1) / rmult() + 1; }
    int slot(i64 p) const { return w_ + 1 - static_cast<int>((p - 1) % rmult()); }
    Address address_of(i64 p) const { return eat_at(base_pos(p), shape_); }
    i64 position(const Address& v, int slot = 1) const;
    std::string vertex_name(i64 p) const;  // "132" (w=0) or "132:2"
    i64 external_id(i64 p) const { return p - live_lo_ + 1; }
    i64 global_pos(i64 external_id) const { return external_id + live_lo_ - 1; }

    // Adjacency between global positions; works with or without the bitsets.
    bool is_adjacent(i64 p, i64 q) const;

    // Unordered live edges. Uses popcounts when materialized, otherwise the
    // per-vertex target-interval enumeration.
    i64 count_edges() const;

    // T3 rule support, base coordinates: the eaten-last floor(B/2) vertices of
    // {z} u D_z where z is the lexicographically smallest child of v+1.
    std::vector<Address> type3_targets(const Address& v) const;
    EatInterval type3_base_interval(const Address& v) const;   // empty at level h
    EatInterval type3_blown_interval(const Address& v) const;  // FullBlockHalf reading
    // Targets under the configured reading; DroppedSlotHalf may yield two pieces.
    std::vector<EatInterval> type3_blown_parts(const Address& v) const;

    // Blown eating interval of the subtree rooted at base position bp.
    EatInterval blown_subtree_interval(i64 bp) const;

    // Target intervals (global positions, unclipped) generated by vertex p's
    // own rules; used for counting and materialization.
    std::vector<EatInterval> rule_target_intervals(i64 p) const;

private:
    Host(TreeShape shape, int w, i64 n, HostOptions opts);
    void materialize();
    void set_bit(i64 p, i64 q);
    bool get_bit(i64 p, i64 q) const;
    bool is_adjacent_rules(i64 p, i64 q) const;

    TreeShape shape_;
    int w_ = 0;
    i64 n_ = 0;
    i64 blown_total_ = 0;
    i64 live_lo_ = 1;
    HostOptions opts_;
    std::vector<std::uint64_t> rows_;  // n x n bit matrix over live positions
    i64 words_per_row_ = 0;
};

struct EdgeCountReport {
    i64 n = 0;
    i64 exact_edges = 0;
    double bound = 0.0;     // (19/(6 ln 3)) n ln n for d=3, (d/ln d) n ln n otherwise
    double residual = 0.0;  // exact - bound
};
EdgeCountReport edge_count_report(const Host& host);

}  // namespace univ
