#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "univ/embedding.hpp"
#include "univ/graph.hpp"
#include "univ/host.hpp"

namespace univ {

struct VerificationReport {
    std::string name;
    i64 instances = 0;
    struct Failure {
        std::string id;
        std::string what;
    };
    std::vector<Failure> failures;
    double seconds = 0.0;
    bool passed() const { return failures.empty(); }
    void fail(std::string id, std::string what) { failures.push_back({std::move(id), std::move(what)}); }
    std::string summary() const;
};

// Every free (unlabeled) tree on n vertices exactly once, n <= 16.
std::vector<Graph> enumerate_free_trees(int n);

// Independent oracle: canonical codes of all labeled trees via Prufer
// sequences, deduplicated. Practical for n <= 9.
std::vector<std::string> free_tree_codes_prufer(int n);

// Centroid-rooted canonical form; equal strings iff isomorphic trees.
std::string canonical_code(const Graph& tree);

Graph random_labeled_tree(int n, std::mt19937_64& rng);
Graph random_forest(int n, std::mt19937_64& rng, double edge_keep = 0.75);

// Exhaustive subgraph-isomorphism check: does the host contain every free
// tree on n vertices? Independent of the embedding algorithm. An adjacency
// override (global positions) supports mutation tests.
VerificationReport brute_universality_check(const Host& host, int n,
                                            const std::function<bool(i64, i64)>& adj = {});

// Suites shared by the CLI, the selftest, and the acceptance tests.
VerificationReport check_universality_range(int d, int n_max, int threads = 1,
                                            EmbedOptions opts = {});
VerificationReport check_brute_oracle_range(int d, int n_max);
VerificationReport check_residual_suite(i64 instances, std::uint64_t seed);
VerificationReport check_separator_suite(i64 per_procedure, std::uint64_t seed);
VerificationReport check_tw_embedding_suite(int w, i64 instances, int n_max, std::uint64_t seed,
                                            EmbedOptions opts = {});
VerificationReport check_edge_count_suite(i64 sweep_max);
VerificationReport check_tw_edge_suite(i64 n_max, int w_max);
VerificationReport check_mutation_sensitivity();
VerificationReport run_selftest(bool full, std::uint64_t seed, int threads);

struct EdgeTableRow {
    i64 n = 0;
    int w = 0;  // 0 for the tree table
    i64 edges = 0;
    double ratio = 0.0;  // edges / (n ln n), or the tw analogue
    i64 lower = 0;       // tw table only
};
std::vector<EdgeTableRow> edge_table_tree(const std::vector<i64>& ns, int d);
std::vector<EdgeTableRow> edge_table_tw(const std::vector<i64>& ns, const std::vector<int>& ws);

}  // namespace univ
