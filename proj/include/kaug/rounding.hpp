#ifndef KAUG_ROUNDING_HPP
#define KAUG_ROUNDING_HPP

#include "kaug/costs.hpp"
#include "kaug/graph.hpp"
#include "kaug/lp.hpp"

#include <iosfwd>
#include <vector>

namespace kaug {

struct RoundingOptions {
    bool round_all = true;         // false: one max edge per iteration
    std::ostream* trace = nullptr;  // per-iteration line: iter/obj/rounded/max_x
    LpvcOptions lp;
};

struct RoundingOutcome {
    enum class Kind { Success, Stalled } kind;
    std::vector<Edge> edges;  // F (partial when stalled)
    Rational cost;
    NodeSet rogue;  // meaningful only when stalled
    int iterations;
    Rational first_lp_objective;  // lower bound on the instance optimum
};

/// Solve the cut LP, buy every edge with x_e >= 1/2, repeat; stall with a
/// rogue set when no such edge exists. On independence-free inputs the stall
/// branch is unreachable and c(F) <= 2·opt.
/// Throws InfeasibleError; IterationLimitError guards the |candidates| cap.
RoundingOutcome iterative_round(const Graph& g, int k, const CostFunction& c,
                                const RoundingOptions& opt = {});

}  // namespace kaug

#endif
