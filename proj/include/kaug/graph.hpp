#ifndef KAUG_GRAPH_HPP
#define KAUG_GRAPH_HPP

#include "kaug/nodeset.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

namespace kaug {

/// Unordered node pair with u < v.
struct Edge {
    int u;
    int v;
    Edge(int a, int b);
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on {0..n-1}.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::initializer_list<Edge> es);
    Graph(int n, const std::vector<Edge>& es);

    int node_count() const { return n_; }
    bool has_edge(int u, int v) const;
    bool add_edge(int u, int v);     // false if already present
    bool remove_edge(int u, int v);  // false if absent
    const std::set<Edge>& edges() const { return edges_; }

    int degree(int v) const;
    NodeSet neighbors(int v) const;
    /// Γ(U): nodes outside U adjacent to U.
    NodeSet neighbors(const NodeSet& U) const;
    int gamma(const NodeSet& U) const { return neighbors(U).size(); }
    /// U* = V − (U ∪ Γ(U)).
    NodeSet outside(const NodeSet& U) const;

    NodeSet all_nodes() const { return NodeSet::full(n_); }
    std::vector<Edge> non_edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<boost::dynamic_bitset<>> adj_;
    std::set<Edge> edges_;
    void check_node(int v) const;
};

struct VertexCut {
    int value;
    NodeSet cut_nodes;
    NodeSet source_side;  // inclusion-minimal among minimum cuts
};

/// Minimum u-w vertex cut via node-split max-flow (Menger).
/// Throws AdjacentTerminalsError when uw is an edge.
VertexCut min_vertex_cut(const Graph& g, int u, int w);

/// True iff at least one of the k smallest u-w connectivities reaches k:
/// |V| >= k+1 and every nonadjacent pair has >= k internally disjoint paths.
bool is_k_connected(const Graph& g, int k);

constexpr std::uint64_t kDefaultEnumerationBudget = 1u << 24;

/// All deficient U with |U| <= max_size (γ(U) < k, U and U* nonempty),
/// by increasing size, lexicographic within a size. Throws SizeLimitError
/// past the enumeration budget.
std::vector<NodeSet> deficient_sets(const Graph& g, int k, int max_size,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// True iff U is nonempty, γ(U) < k and U* is nonempty.
bool is_deficient_set(const Graph& g, int k, const NodeSet& U);

}  // namespace kaug

#endif
