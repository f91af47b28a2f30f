#ifndef KAUG_ORACLE_HPP
#define KAUG_ORACLE_HPP

#include "kaug/instance.hpp"
#include "kaug/lp.hpp"
#include "kaug/setpairs.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kaug {

struct OracleBudget {
    int max_candidates = 25;
    long max_nodes = 200'000'000;  // search-tree cap
};

struct OracleResult {
    bool feasible;
    Rational cost;
    std::vector<Edge> edges;
    long explored;  // search-tree nodes visited
};

/// Exact minimum-cost augmentation. Dispatches to the pure exhaustive search
/// for <= 20 candidates, otherwise branch-and-bound with cut-LP lower bounds
/// and feasibility pruning. Throws BudgetExceededError beyond the budget.
OracleResult exact_opt(const Instance& inst, const OracleBudget& budget = {});

/// Include/exclude subset search with incumbent cost pruning only;
/// independent of the LP and flow machinery it is used to check.
OracleResult exact_opt_exhaustive(const Instance& inst, const OracleBudget& budget = {});

/// Branch-and-bound mode, callable directly for cross-checks.
OracleResult exact_opt_bnb(const Instance& inst, const OracleBudget& budget = {});

/// All deficient set-pairs of g: pairs (A, B) of deficient sets with
/// B ⊆ A* and p > 0, canonical order. Small n only (SizeLimitError).
std::vector<SetPair> enumerate_deficient_setpairs(const Graph& g, int k,
                                                  std::uint64_t budget = kDefaultEnumerationBudget);

struct ExhaustiveCheck {
    bool feasible;
    std::optional<SetPair> worst;  // most violated (slack, boundary, lex order)
    Rational slack;
};

/// Checks x against every deficient set-pair constraint by enumeration.
ExhaustiveCheck exhaustive_constraint_check(const Graph& g, int k, const FractionalSolution& x);

/// Solves the cut LP with every deficient set-pair row posted up front
/// (no separation); tiny n only.
LpvcResult solve_lpvc_exhaustive(const Graph& g, int k, const CostFunction& c);

/// min{h(X) : v ∈ X} with the unique largest minimizer, by subset scan.
struct HMinExhaustive {
    int value;
    NodeSet largest_minimizer;
};
HMinExhaustive exhaustive_min_h(const Graph& g, int k, int v);

/// Union of all nonempty X with h(X) <= threshold, by subset scan.
NodeSet exhaustive_low_h_union(const Graph& g, int k, int threshold);

/// Minimum u-w vertex cut value by trying every separating node subset.
int brute_force_cut_value(const Graph& g, int u, int w);

}  // namespace kaug

#endif
