#ifndef KAUG_ROGUE_HPP
#define KAUG_ROGUE_HPP

#include "kaug/graph.hpp"
#include "kaug/lp.hpp"

#include <optional>
#include <vector>

namespace kaug {

/// h(X) = |X| + (k−1)·γ(X); fully submodular.
int h_value(const Graph& g, int k, const NodeSet& X);

struct HMin {
    int value;
    NodeSet largest_minimizer;  // unique maximal minimizer containing v
};

/// min{h(X) : v ∈ X} by a three-label min-cut (membership in X and in
/// X ∪ Γ(X) as two chained binary labels); the maximal min-cut source side
/// projects to the largest minimizer.
HMin min_h_containing(const Graph& g, int k, int v);

struct BReport {
    NodeSet B;  // union of all X with h(X) <= k(k−1); covers every rogue set
    NodeSet A;  // nodes certified outside every low-h set
};

BReport compute_B(const Graph& g, int k);

/// Scans nonadjacent pairs lexicographically over the fractional graph and
/// returns the first inclusion-minimal tight cut side that is a rogue set of
/// g. Empty when none exists (precondition violation for the caller).
std::optional<NodeSet> find_rogue_from_fractional(const Graph& g, int k,
                                                  const FractionalSolution& x);

/// All deficient sets of size < k.
std::vector<NodeSet> enumerate_rogue_sets(const Graph& g, int k,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

bool is_rogue_free(const Graph& g, int k, std::uint64_t budget = kDefaultEnumerationBudget);

/// True iff no two deficient set-pairs are independent. Exact: a deficient
/// set X disjoint from a deficient pair's union exists iff some deficient W
/// avoiding X leaves p(W, W* − X) positive with W* − X nonempty.
bool is_independence_free(const Graph& g, int k,
                          std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace kaug

#endif
