#ifndef KAUG_HARNESS_HPP
#define KAUG_HARNESS_HPP

#include "kaug/instance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kaug {

struct HarnessOptions {
    std::uint64_t seed = 1;
    int count = 0;  // 0: suite default
    std::string out_dir = ".";
    bool verbose = false;
};

struct CheckLine {
    int criterion;  // acceptance criterion index, 0 for auxiliary checks
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<std::string> suite_names();

/// Runs one named suite; every per-instance failure dumps a reproducer
/// instance file into out_dir.
std::vector<CheckLine> run_suite(const std::string& name, const HarnessOptions& opt);

/// All suites at their pinned acceptance parameters, ordered by criterion.
std::vector<CheckLine> run_acceptance(const HarnessOptions& opt);

/// Feasible k=2 instance with at most max_candidates purchasable edges
/// (a random hamiltonian cycle keeps the candidate set sufficient).
Instance gen_capped_k2(int n, int max_candidates, std::uint64_t seed);

/// Rogue-free, not yet k-connected instance with all non-edges purchasable;
/// certified by enumeration during construction.
Instance gen_rogue_free(int k, std::uint64_t seed);

}  // namespace kaug

#endif
