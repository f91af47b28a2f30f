#ifndef KAUG_LP_HPP
#define KAUG_LP_HPP

#include "kaug/costs.hpp"
#include "kaug/graph.hpp"
#include "kaug/rational.hpp"
#include "kaug/setpairs.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kaug {

/// Candidate-edge values in [0,1]; a point of the cut LP. Edges of the graph
/// itself never appear.
struct FractionalSolution {
    std::map<Edge, Rational> values;

    const Rational& at(const Edge& e) const;  // 0 for absent edges
    std::vector<Edge> support() const;        // edges with value > 0
    /// Sum over edges covering P.
    Rational weight_on(const SetPair& P) const;
};

/// Edge attaining the maximum value, lexicographically smallest on ties.
/// Throws EmptySupportError when the solution carries no entries at all.
std::pair<Edge, Rational> max_fractional_edge(const FractionalSolution& x);

struct ConstraintRow {
    SetPair pair;
    int rhs;  // p(pair) >= 1
};

struct SeparationResult {
    bool feasible;
    std::optional<SetPair> pair;  // most violated, when infeasible
    Rational slack;               // x(δ(pair)) − p(pair) < 0
};

/// Exact separation for the cut LP: mixed-capacity node-split max-flow per
/// nonadjacent node pair. Returns the most violated deficient set-pair
/// (ties: smaller boundary, then lexicographic) or Feasible.
SeparationResult separate(const Graph& g, int k, const FractionalSolution& x);

struct LpvcOptions {
    int max_rounds = 100000;
    std::ostream* dump = nullptr;  // restricted-LP text dump at termination
};

struct LpvcResult {
    FractionalSolution x;
    Rational objective;
    std::vector<ConstraintRow> rows;  // rows generated, in order
    int rounds;
    int fractional_coordinates;  // strictly between bounds at the vertex
};

/// Row generation over the candidate edges (finite-cost non-edges) with
/// 0 <= x_e <= 1 bounds; returns a basic optimal solution.
/// Throws InfeasibleError when even buying every candidate fails,
/// IterationLimitError past the round budget.
LpvcResult solve_lpvc(const Graph& g, int k, const CostFunction& c, const LpvcOptions& opt = {});

/// Writes the restricted LP, one constraint per line, rationals as p/q.
void dump_restricted_lp(std::ostream& out, const Graph& g, const CostFunction& c,
                        const std::vector<ConstraintRow>& rows);

}  // namespace kaug

#endif
