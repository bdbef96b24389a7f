// Acceptance gate: runs every criterion-level check and prints one line per
// criterion with pass/fail and timing; exits nonzero on any failure.
#include "skein/verify.hpp"

#include <cstdio>
#include <map>

int main() {
    using namespace skein::verify;
    auto t0 = std::chrono::steady_clock::now();
    auto results = run_suite("all");

    // group by leading criterion number "N." in the check name
    std::map<int, std::vector<const CheckResult*>> by_criterion;
    for (const auto& r : results) {
        int n = std::atoi(r.name.c_str());
        by_criterion[n].push_back(&r);
    }
    static const char* labels[] = {
        "",
        "symmetric function identity suite",
        "frobenius trace suite",
        "coordinate-change suite",
        "curved koszul suite",
        "key-shape expansion identity",
        "schur-complement ledger",
        "ideal equality at desk scale",
        "digon complex exactness",
        "series and hilbert cross-checks",
        "transparifer specialization",
    };
    bool all_pass = true;
    for (const auto& [n, rs] : by_criterion) {
        bool pass = true;
        double secs = 0;
        for (const auto* r : rs) {
            pass = pass && r->pass;
            secs += r->seconds;
        }
        all_pass = all_pass && pass;
        std::printf("criterion %2d (%s): %s (%.2fs)\n", n, labels[n], pass ? "PASS" : "FAIL", secs);
        for (const auto* r : rs)
            if (!r->pass) std::printf("   FAILED %s: %s\n", r->name.c_str(), r->detail.c_str());
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("acceptance: %s (wall %.2fs)\n", all_pass ? "PASS" : "FAIL", total);
    return all_pass ? 0 : 1;
}
