#include "kaug/graph.hpp"

#include "kaug/errors.hpp"
#include "kaug/maxflow.hpp"

#include <string>

namespace kaug {

Edge::Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw Error("self-loop edge " + std::to_string(a));
    if (a < 0 || b < 0) throw Error("negative node in edge");
}

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), boost::dynamic_bitset<>(static_cast<size_t>(n))) {
    if (n < 1) throw Error("graph needs at least one node");
}

Graph::Graph(int n, std::initializer_list<Edge> es) : Graph(n) {
    for (const Edge& e : es) add_edge(e.u, e.v);
}

Graph::Graph(int n, const std::vector<Edge>& es) : Graph(n) {
    for (const Edge& e : es) add_edge(e.u, e.v);
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= n_) throw Error("node out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    return u != v && adj_[static_cast<size_t>(u)].test(static_cast<size_t>(v));
}

bool Graph::add_edge(int u, int v) {
    Edge e(u, v);
    check_node(e.v);
    if (has_edge(u, v)) return false;
    adj_[static_cast<size_t>(u)].set(static_cast<size_t>(v));
    adj_[static_cast<size_t>(v)].set(static_cast<size_t>(u));
    edges_.insert(e);
    return true;
}

bool Graph::remove_edge(int u, int v) {
    Edge e(u, v);
    check_node(e.v);
    if (!has_edge(u, v)) return false;
    adj_[static_cast<size_t>(u)].reset(static_cast<size_t>(v));
    adj_[static_cast<size_t>(v)].reset(static_cast<size_t>(u));
    edges_.erase(e);
    return true;
}

int Graph::degree(int v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].count());
}

NodeSet Graph::neighbors(int v) const {
    check_node(v);
    NodeSet s(n_);
    const auto& row = adj_[static_cast<size_t>(v)];
    for (size_t w = row.find_first(); w != boost::dynamic_bitset<>::npos; w = row.find_next(w))
        s.add(static_cast<int>(w));
    return s;
}

NodeSet Graph::neighbors(const NodeSet& U) const {
    if (U.universe() != n_) throw Error("node set universe mismatch");
    boost::dynamic_bitset<> acc(static_cast<size_t>(n_));
    const auto& ub = U.bits();
    for (size_t v = ub.find_first(); v != boost::dynamic_bitset<>::npos; v = ub.find_next(v))
        acc |= adj_[v];
    acc -= ub;
    NodeSet s(n_);
    for (size_t v = acc.find_first(); v != boost::dynamic_bitset<>::npos; v = acc.find_next(v))
        s.add(static_cast<int>(v));
    return s;
}

NodeSet Graph::outside(const NodeSet& U) const {
    return (U | neighbors(U)).complement();
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

namespace {

// Split network for internally disjoint u-w paths: node arcs capacity 1,
// edge arcs unbounded (u, w nonadjacent, so every path meets a node arc).
SplitNetwork<long long> unit_split(const Graph& g, int u, int w) {
    SplitNetwork<long long> s(g.node_count(), u, w);
    for (const Edge& e : g.edges()) {
        s.net.add_arc(s.out(e.u), s.in(e.v), 0, true);
        s.net.add_arc(s.out(e.v), s.in(e.u), 0, true);
    }
    return s;
}

}  // namespace

VertexCut min_vertex_cut(const Graph& g, int u, int w) {
    if (u == w) throw Error("min_vertex_cut: identical terminals");
    if (g.has_edge(u, w)) throw AdjacentTerminalsError("min_vertex_cut: terminals are adjacent");
    SplitNetwork<long long> s = unit_split(g, u, w);
    long long value = s.net.max_flow(s.out(u), s.in(w));
    std::vector<char> reach = s.net.source_side_min(s.out(u));

    int n = g.node_count();
    VertexCut cut{static_cast<int>(value), NodeSet(n), NodeSet(n)};
    for (int v = 0; v < n; ++v) {
        bool in_side = reach[static_cast<size_t>(s.in(v))];
        bool out_side = reach[static_cast<size_t>(s.out(v))];
        if (v == u) {
            cut.source_side.add(v);
        } else if (in_side && !out_side) {
            cut.cut_nodes.add(v);
        } else if (in_side && out_side) {
            cut.source_side.add(v);
        }
    }
    return cut;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw Error("is_k_connected: k must be >= 1");
    int n = g.node_count();
    if (n < k + 1) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < k) return false;
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (g.has_edge(u, w)) continue;
            SplitNetwork<long long> s = unit_split(g, u, w);
            long long f = s.net.max_flow(s.out(u), s.in(w), static_cast<long long>(k));
            if (f < k) return false;
        }
    }
    return true;
}

bool is_deficient_set(const Graph& g, int k, const NodeSet& U) {
    if (U.empty()) return false;
    NodeSet nb = g.neighbors(U);
    if (nb.size() >= k) return false;
    return (U | nb).size() < g.node_count();
}

namespace {

std::uint64_t subsets_up_to(int n, int max_size) {
    // sum_{i<=max_size} C(n,i), saturating
    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (int i = 0; i <= max_size && i <= n; ++i) {
        total += binom;
        if (total > (std::uint64_t{1} << 62)) return total;
        binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return total;
}

}  // namespace

std::vector<NodeSet> deficient_sets(const Graph& g, int k, int max_size, std::uint64_t budget) {
    int n = g.node_count();
    if (max_size > n) max_size = n;
    if (max_size < 1) return {};
    if (subsets_up_to(n, max_size) > budget)
        throw SizeLimitError("deficient_sets: enumeration exceeds budget");

    std::vector<NodeSet> out;
    // Enumerate by increasing size, lexicographic combinations within a size.
    std::vector<int> idx;
    auto emit = [&] {
        NodeSet U = NodeSet::from_members(n, idx);
        if (is_deficient_set(g, k, U)) out.push_back(U);
    };
    for (int sz = 1; sz <= max_size; ++sz) {
        idx.assign(static_cast<size_t>(sz), 0);
        for (int i = 0; i < sz; ++i) idx[static_cast<size_t>(i)] = i;
        if (sz > n) break;
        while (true) {
            emit();
            int i = sz - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - sz + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < sz; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

}  // namespace kaug
