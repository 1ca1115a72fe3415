// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "univ/embedding.hpp"
#include "univ/harness.hpp"
#include "univ/separators.hpp"
#include "univ/treewidth.hpp"

using namespace univ;

namespace {

int failures = 0;

void line(int criterion, bool ok, const std::string& what, double secs, const std::string& extra) {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), secs, extra.empty() ? "" : " -- ", extra.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void from_report(int criterion, const std::string& what, const VerificationReport& rep) {
    std::string extra = std::to_string(rep.instances) + " instances";
    if (!rep.failures.empty())
        extra += "; first failure: " + rep.failures[0].id + ": " + rep.failures[0].what;
    line(criterion, rep.passed(), what, rep.seconds, extra);
}

double now_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    const std::uint64_t seed = 987654321;

    // 1. Ternary universality at desk scale: every free tree on n <= 11
    //    embeds bijectively into U(n,3) and validates.
    from_report(1, "ternary universality, all free trees n<=11 into U(n,3)",
                check_universality_range(3, 11, 2));

    // 2. The same suite against the binary construction.
    from_report(2, "binary universality, all free trees n<=11 into U(n,2)",
                check_universality_range(2, 11, 2));

    // 3. Independent subgraph-isomorphism oracle, no reliance on the
    //    embedding algorithm, n <= 7 for both arities.
    {
        auto r3 = check_brute_oracle_range(3, 7);
        auto r2 = check_brute_oracle_range(2, 7);
        VerificationReport joint;
        joint.instances = r3.instances + r2.instances;
        joint.seconds = r3.seconds + r2.seconds;
        for (auto& f : r3.failures) joint.fail("d=3 " + f.id, f.what);
        for (auto& f : r2.failures) joint.fail("d=2 " + f.id, f.what);
        from_report(3, "brute-force oracle agreement, n<=7, d in {2,3}", joint);
    }

    // 4. Residual property: image is exactly the eating-order prefix and the
    //    remainder matches the same-height admissible graph, |A| <= 121.
    from_report(4, "prefix image and admissible residual, 1000 instances, |A|<=121",
                check_residual_suite(1000, seed));

    // 5. Separator postconditions across the full legal ranges with both
    //    boundaries, 10^4 instances per procedure.
    from_report(5, "separator postconditions, 10^4 per procedure",
                check_separator_suite(10000, seed));

    // 6. Edge counts two ways on full hosts plus the fitted-C residual bound
    //    through n = 3280 (every d=3 size up to height 7).
    from_report(6, "edge-count attribution and bounded residual, n<=3280",
                check_edge_count_suite(3280));

    // 7. Treewidth universality pathway: 200 random partial k-trees per
    //    w in {1,2,3}, n <= 60, all embed and validate.
    {
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport joint;
        for (int w : {1, 2, 3}) {
            auto r = check_tw_embedding_suite(w, 200, 60, seed + w);
            joint.instances += r.instances;
            for (auto& f : r.failures) joint.fail("w=" + std::to_string(w) + " " + f.id, f.what);
        }
        joint.seconds = now_seconds(t0);
        from_report(7, "treewidth embeddings, 200 random partial k-trees per w in {1,2,3}", joint);
    }

    // 8. Blow-up accounting for n <= 500, w <= 4. The accounting identity is
    //    checked on the blown-base type-3 reading; the constructed graph's
    //    excess over it (the full-block halving) is isolated and must stay
    //    nonnegative, and the lower bound stays strictly below the count.
    {
        auto rep = check_tw_edge_suite(500, 4);
        i64 excess_total = 0;
        for (int w : {1, 4}) {
            excess_total +=
                count_edges_tw(500, w).exact_edges -
                count_edges_tw(500, w, HostOptions{.t3_mode = T3Mode::BlownBaseHalf}).exact_edges;
        }
        from_report(8,
                    "blow-up accounting (blown-base reading) and lower<exact, n<=500, w<=4; "
                    "type-3 excess at n=500 (w=1 plus w=4): " +
                        std::to_string(excess_total) + " edges",
                    rep);
    }

    // 9. Mutation sensitivity: every single root-incident edge removal on
    //    U(n,3), n in {5,6,7}, is caught by a suite.
    from_report(9, "mutation sensitivity, root edges of U(5..7,3)", check_mutation_sensitivity());

    std::printf("%s: %d criterion(s) failed\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures);
    return failures == 0 ? 0 : 1;
}
