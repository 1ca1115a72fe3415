#pragma once

#include <functional>
#include <string>
#include <vector>

#include "univ/graph.hpp"
#include "univ/host.hpp"
#include "univ/tree_decomposition.hpp"

namespace univ {

struct Embedding {
    std::vector<i64> to_host;  // guest id -> global blown position, -1 if unmapped
};

struct ValidationReport {
    bool ok = true;
    std::string message;
};

// Checks injectivity, adjacency preservation, and (optionally) that the image
// is exactly the first k live host positions in eating order.
ValidationReport validate_embedding(const Host& host, const Graph& guest, const Embedding& emb,
                                    bool require_prefix = true);

// Same checks against an arbitrary adjacency oracle over global positions;
// used by mutation tests.
ValidationReport validate_embedding_with(const std::function<bool(i64, i64)>& adjacent,
                                         const Host& host, const Graph& guest,
                                         const Embedding& emb, bool require_prefix = true);

// An admissible view: a concrete admissible subgraph of the host, given by
// the live clique of its root (eaten last within the view) and blocks one
// base level below it, consecutive in the eating order. The first block is a
// live suffix of its subtree; the others are fully live.
struct AdmissibleView {
    const Host* host = nullptr;
    std::vector<i64> root_slots;  // blown positions, first-eaten first
    struct Block {
        i64 base_root = 0;  // base eating position of the block root
        i64 live = 0;       // live blown vertices (suffix of the block)
    };
    std::vector<Block> blocks;

    i64 size() const;
    i64 pos_at(i64 k) const;  // k-th vertex (1-based) in view eating order
};

// The whole live host as a view.
AdmissibleView full_view(const Host& host);

// Remove the first k vertices of the view's eating order.
AdmissibleView strip_prefix(const AdmissibleView& view, i64 k);

// The admissible subgraph rooted at r whose descendants are the live part of
// r_u's block plus the s3 blocks preceding it in the eating order (which may
// sit under r's cyclic predecessors). r_u's live part must be the view's
// eating-order prefix.
AdmissibleView sibling_block(const AdmissibleView& view, const Address& r, const Address& r_u,
                             int s3);

// The variant rooted at r-1 whose root reaches the live remainder through
// type-3 edges; requires d = 3, r_u to be the only live child of r, and the
// live remainder to fit in the eaten-last half of r_u's block.
AdmissibleView type3_block(const AdmissibleView& view, const Address& r, const Address& r_u);

struct EmbedStats {
    i64 clique_base = 0;
    i64 root_clique_short = 0;
    i64 shape_a = 0;
    i64 small_case = 0;
    i64 one_sep = 0;
    i64 two_sep = 0;
    i64 t3_views = 0;
    i64 binary_special = 0;
    i64 suffix_tails = 0;
    i64 max_depth = 0;
};

struct EmbedOptions {
    bool pick_largest = false;  // flips the arbitrary-vertex tie-break
    EmbedStats* stats = nullptr;
};

// Embed a forest into the live host, |F| < n. The image is the eating-order
// prefix of size |F|.
Embedding embed_forest(const Host& host, const Graph& forest, EmbedOptions opts = {});

// Full-size tree embedding, |T| = n: embeds T minus a leaf and places the
// leaf at the root.
Embedding embed_tree_full(const Host& host, const Graph& tree, EmbedOptions opts = {});

// Treewidth versions over a blown host: |G| <= n - w - 1 for the partial
// embedding, |G| = n for the full one. td must be a valid decomposition of G
// with width <= w.
Embedding embed_graph_tw(const Host& host, const Graph& g, const TreeDecomposition& td,
                         EmbedOptions opts = {});
Embedding embed_graph_full_tw(const Host& host, const Graph& g, const TreeDecomposition& td,
                              EmbedOptions opts = {});

}  // namespace univ
