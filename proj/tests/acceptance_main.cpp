// Acceptance driver: runs every criterion suite at its pinned parameters and
// prints one pass/fail line per criterion.
#include "kaug/harness.hpp"

#include <cstdio>

int main() {
    kaug::HarnessOptions opt;
    opt.seed = 1;
    opt.out_dir = ".";
    int failures = 0;
    for (const kaug::CheckLine& line : kaug::run_acceptance(opt)) {
        std::printf("[%2d] %s %s — %s\n", line.criterion, line.pass ? "PASS" : "FAIL",
                    line.name.c_str(), line.detail.c_str());
        std::fflush(stdout);
        if (!line.pass) ++failures;
    }
    if (failures == 0)
        std::printf("ACCEPTANCE: all criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
