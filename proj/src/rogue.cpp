#include "kaug/rogue.hpp"

#include "kaug/errors.hpp"
#include "kaug/maxflow.hpp"

namespace kaug {

int h_value(const Graph& g, int k, const NodeSet& X) {
    return X.size() + (k - 1) * g.gamma(X);
}

HMin min_h_containing(const Graph& g, int k, int v) {
    int n = g.node_count();
    if (v < 0 || v >= n) throw Error("min_h_containing: node out of range");

    // Variables per node u: a_u = [u ∈ X] at index u, b_u = [u ∈ X ∪ Γ(X)]
    // at index n+u; source side = 1. Charges: 1 per a_u, (k−1) per b_u − a_u.
    FlowNetwork<long long> net(2 * n + 2);
    int s = 2 * n, t = 2 * n + 1;
    auto a_of = [&](int u) { return u; };
    auto b_of = [&](int u) { return n + u; };
    net.add_arc(s, a_of(v), 0, true);
    for (int u = 0; u < n; ++u) {
        net.add_arc(a_of(u), t, 1);
        net.add_arc(a_of(u), b_of(u), 0, true);
        if (k >= 2) net.add_arc(b_of(u), a_of(u), k - 1);
    }
    for (const Edge& e : g.edges()) {
        net.add_arc(a_of(e.u), b_of(e.v), 0, true);
        net.add_arc(a_of(e.v), b_of(e.u), 0, true);
    }
    long long value = net.max_flow(s, t);

    std::vector<char> side = net.source_side_max(t);
    NodeSet X(n);
    for (int u = 0; u < n; ++u)
        if (side[static_cast<size_t>(a_of(u))]) X.add(u);
    if (!X.contains(v)) throw Error("min_h_containing: pinned node escaped the cut");
    if (h_value(g, k, X) != static_cast<int>(value))
        throw Error("min_h_containing: cut value does not match h");
    return {static_cast<int>(value), X};
}

BReport compute_B(const Graph& g, int k) {
    int n = g.node_count();
    int threshold = k * (k - 1);
    BReport rep{NodeSet(n), NodeSet(n)};
    for (int v = 0; v < n; ++v) {
        if (rep.A.contains(v) || rep.B.contains(v)) continue;
        HMin m = min_h_containing(g, k, v);
        if (m.value > threshold)
            rep.A.add(v);
        else
            rep.B |= m.largest_minimizer;
    }
    if ((rep.A | rep.B) != NodeSet::full(n) || rep.A.intersects(rep.B))
        throw Error("compute_B: classification left a node unresolved");
    return rep;
}

std::optional<NodeSet> find_rogue_from_fractional(const Graph& g, int k,
                                                  const FractionalSolution& x) {
    int n = g.node_count();
    for (int u = 0; u < n; ++u) {
        for (int w = 0; w < n; ++w) {
            if (u == w || g.has_edge(u, w)) continue;
            SplitNetwork<Rational> s(n, u, w);
            for (const Edge& e : g.edges()) {
                s.net.add_arc(s.out(e.u), s.in(e.v), Rational(0), true);
                s.net.add_arc(s.out(e.v), s.in(e.u), Rational(0), true);
            }
            for (const auto& [e, val] : x.values) {
                if (val <= 0) continue;
                s.net.add_arc(s.out(e.u), s.in(e.v), val);
                s.net.add_arc(s.out(e.v), s.in(e.u), val);
            }
            s.net.max_flow(s.out(u), s.in(w));
            std::vector<char> reach = s.net.source_side_min(s.out(u));
            NodeSet side(n);
            side.add(u);
            for (int a = 0; a < n; ++a)
                if (a != u && reach[static_cast<size_t>(s.in(a))] &&
                    reach[static_cast<size_t>(s.out(a))])
                    side.add(a);
            if (side.size() < k && is_deficient_set(g, k, side)) return side;
        }
    }
    return std::nullopt;
}

std::vector<NodeSet> enumerate_rogue_sets(const Graph& g, int k, std::uint64_t budget) {
    return deficient_sets(g, k, k - 1, budget);
}

bool is_rogue_free(const Graph& g, int k, std::uint64_t budget) {
    return enumerate_rogue_sets(g, k, budget).empty();
}

bool is_independence_free(const Graph& g, int k, std::uint64_t budget) {
    int n = g.node_count();
    std::vector<NodeSet> def = deficient_sets(g, k, n, budget);
    // Two deficient set-pairs are independent iff some deficient X avoids the
    // other pair's union; with W one piece, the other piece can be taken
    // maximal, W1 = W* − X, giving p > 0 iff γ(W) + |X ∩ W*| < k.
    for (const NodeSet& W : def) {
        int gw = g.gamma(W);
        NodeSet star = g.outside(W);
        for (const NodeSet& X : def) {
            if (X.intersects(W)) continue;
            NodeSet rest = star - X;
            if (rest.empty()) continue;
            if (gw + (X & star).size() < k) return false;
        }
    }
    return true;
}

}  // namespace kaug
