#ifndef KAUG_OUTCONNECT_HPP
#define KAUG_OUTCONNECT_HPP

#include "kaug/costs.hpp"
#include "kaug/graph.hpp"
#include "kaug/rational.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace kaug {

using Arc = std::pair<int, int>;  // from -> to

/// Simple digraph on {0..n-1}: no self-loops, no repeated arcs.
class Digraph {
public:
    explicit Digraph(int n);
    int node_count() const { return n_; }
    bool has_arc(int a, int b) const { return arcs_.count({a, b}) != 0; }
    bool add_arc(int a, int b);
    const std::set<Arc>& arcs() const { return arcs_; }

private:
    int n_;
    std::set<Arc> arcs_;
};

/// Builds the bidirected digraph of g (both orientations of every edge).
Digraph bidirect(const Graph& g);

/// True iff every v != r has k internally disjoint r->v dipaths.
bool is_k_outconnected(const Digraph& d, int r, int k);

struct DirectedSolveResult {
    std::vector<Arc> arcs;  // purchased candidate arcs
    Rational cost;
    long lp_rounds;
    long bnb_nodes;  // 0 when the cut-LP vertex was already integral
};

/// Minimum-cost candidate-arc set making `committed` + arcs k-outconnected
/// from r. Cut-LP row generation to a vertex; branch-and-bound on fractional
/// arcs if the vertex is not integral. Throws InfeasibleError when even all
/// candidates together fail.
DirectedSolveResult solve_directed_outconnectivity(const Digraph& committed,
                                                   const std::map<Arc, Rational>& arc_costs,
                                                   int r, int k);

struct RootedResult {
    std::vector<Edge> edges;  // F'
    Rational cost;
};

/// ROOTED(R): attach a temporary root by zero-cost edges to the k terminals,
/// bidirect, solve rooted k-outconnectivity exactly, project arcs back to
/// undirected edges (bought once even if both orientations were chosen).
/// Throws BadTerminalCountError when |R| != k, InfeasibleError when no
/// augmentation exists.
RootedResult rooted(const Graph& g, const CostFunction& c, const NodeSet& R, int k);

}  // namespace kaug

#endif
