// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are fixed here and match the verification checks' defaults.

#include "hkml/verify.hpp"

#include <cstdio>
#include <string>
#include <vector>

using hkml::verify::Status;
using hkml::verify::VerifyOptions;
using hkml::verify::VerifyReport;

namespace {

struct Criterion {
    int number;
    const char* title;
    std::vector<const char*> checks;
    double runtime_limit_ms; // 0 = no stated limit
};

bool acceptable(const VerifyReport& r)
{
    return r.status == Status::pass || r.status == Status::flagged;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "biorthogonality matrix (2^n n! sqrt(pi))", {"hk-biorthogonality"},
         10000},
        {2, "univariate Konhauser biorthogonality",
         {"konhauser-biorthogonality"}, 0},
        {3, "representation equivalence", {"hk2d-representations"}, 5000},
        {4, "Laplace closed forms", {"laplace-thm8", "laplace-thm14"}, 5000},
        {5, "fractional images",
         {"rl-integral-image", "rl-derivative-image", "rl-numeric-agreement"},
         10000},
        {6, "kernel-operator semigroup", {"kernel-semigroup"}, 60000},
        {7, "left inverse", {"kernel-left-inverse"}, 30000},
        {8, "L1 bound", {"kernel-l1-bound"}, 30000},
        {9, "integral-equation round trip", {"integral-equation-roundtrip"}, 0},
        {10, "Jacobi-Konhauser certification", {"jk-biorthogonality"}, 0},
    };

    VerifyOptions opt;
    opt.seed = 42;

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        bool flagged = false;
        double worst = 0.0;
        double total_ms = 0.0;
        std::string note;
        for (const char* id : c.checks) {
            VerifyReport r = hkml::verify::run_check(id, opt);
            ok = ok && acceptable(r);
            flagged = flagged || r.status == Status::flagged;
            worst = worst > r.max_rel_err ? worst : r.max_rel_err;
            total_ms += r.runtime_ms;
            if (!acceptable(r))
                note += std::string(" [") + id + ": " + r.details + "]";
        }
        if (c.runtime_limit_ms > 0 && total_ms > c.runtime_limit_ms) {
            ok = false;
            note += " [runtime limit exceeded]";
        }
        if (!ok)
            failures++;
        std::printf("[%s] criterion %2d: %-42s max_rel_err=%.3e time=%.0fms%s%s\n",
                    ok ? "PASS" : "FAIL", c.number, c.title, worst, total_ms,
                    flagged ? " (flagged)" : "", note.c_str());
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
