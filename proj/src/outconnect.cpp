#include "kaug/outconnect.hpp"

#include "kaug/errors.hpp"
#include "kaug/maxflow.hpp"
#include "kaug/simplex.hpp"

#include <algorithm>
#include <optional>

namespace kaug {

Digraph::Digraph(int n) : n_(n) {
    if (n < 1) throw Error("digraph needs at least one node");
}

bool Digraph::add_arc(int a, int b) {
    if (a == b) throw Error("self-loop arc");
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw Error("arc endpoint out of range");
    return arcs_.insert({a, b}).second;
}

Digraph bidirect(const Graph& g) {
    Digraph d(g.node_count());
    for (const Edge& e : g.edges()) {
        d.add_arc(e.u, e.v);
        d.add_arc(e.v, e.u);
    }
    return d;
}

bool is_k_outconnected(const Digraph& d, int r, int k) {
    if (k < 1) throw Error("is_k_outconnected: k must be >= 1");
    if (r < 0 || r >= d.node_count()) throw Error("root out of range");
    for (int v = 0; v < d.node_count(); ++v) {
        if (v == r) continue;
        SplitNetwork<long long> s(d.node_count(), r, v);
        // All arcs capacity 1: internally disjoint dipaths never share an arc.
        for (const Arc& a : d.arcs()) s.net.add_arc(s.out(a.first), s.in(a.second), 1);
        if (s.net.max_flow(s.out(r), s.in(v), static_cast<long long>(k)) < k) return false;
    }
    return true;
}

namespace {

struct ArcCutRow {
    std::vector<int> vars;  // candidate-arc indices crossing the cut
    int rhs;
};

struct TargetCut {
    Rational value;
    int cut_nodes;
    ArcCutRow row;
};

// Min cut between r and v in the fractional arc graph: committed arcs
// unbounded (the direct r->v committed arc capacity 1), candidate arcs at
// their fractional values, internal nodes capacity 1.
std::optional<TargetCut> violated_cut(const Digraph& committed, const std::vector<Arc>& cand,
                                      const std::vector<Rational>& x, int r, int v, int k) {
    int n = committed.node_count();
    SplitNetwork<Rational> s(n, r, v);
    bool direct_committed = committed.has_arc(r, v);
    for (const Arc& a : committed.arcs()) {
        if (a.first == r && a.second == v)
            s.net.add_arc(s.out(a.first), s.in(a.second), Rational(1));
        else
            s.net.add_arc(s.out(a.first), s.in(a.second), Rational(0), true);
    }
    for (size_t j = 0; j < cand.size(); ++j)
        if (x[j] > 0) s.net.add_arc(s.out(cand[j].first), s.in(cand[j].second), x[j]);

    Rational target(k);
    Rational value = s.net.max_flow(s.out(r), s.in(v), target);
    if (value >= target) return std::nullopt;

    std::vector<char> reach = s.net.source_side_min(s.out(r));
    TargetCut out{value, 0, {{}, 0}};
    for (int u = 0; u < n; ++u)
        if (u != r && u != v && reach[static_cast<size_t>(s.in(u))] &&
            !reach[static_cast<size_t>(s.out(u))])
            ++out.cut_nodes;
    // Candidate arc crosses the cut iff its tail's out-copy is on the source
    // side and its head's in-copy is not.
    for (size_t j = 0; j < cand.size(); ++j)
        if (reach[static_cast<size_t>(s.out(cand[j].first))] &&
            !reach[static_cast<size_t>(s.in(cand[j].second))])
            out.row.vars.push_back(static_cast<int>(j));
    out.row.rhs = k - out.cut_nodes - (direct_committed ? 1 : 0);
    return out;
}

struct DirLpResult {
    std::vector<Rational> x;
    Rational objective;
    long rounds;
    bool integral;
};

DirLpResult solve_cut_lp(const Digraph& committed, const std::vector<Arc>& cand,
                         const std::vector<Rational>& costs, int r, int k) {
    BoundedSimplex simplex(costs, std::vector<Rational>(cand.size(), Rational(1)));
    long rounds = 0;
    while (true) {
        if (++rounds > 100000) throw IterationLimitError("directed cut LP: round budget");
        const std::vector<Rational>& x = simplex.solution();
        std::optional<TargetCut> best;
        int best_target = -1;
        for (int v = 0; v < committed.node_count(); ++v) {
            if (v == r) continue;
            auto cut = violated_cut(committed, cand, x, r, v, k);
            if (!cut) continue;
            if (!best || cut->value < best->value ||
                (cut->value == best->value && cut->cut_nodes < best->cut_nodes)) {
                best = cut;
                best_target = v;
            }
        }
        (void)best_target;
        if (!best) break;
        std::vector<std::pair<int, Rational>> coeffs;
        for (int j : best->row.vars) coeffs.emplace_back(j, Rational(1));
        simplex.add_row(coeffs, Rational(best->row.rhs));
        simplex.reoptimize();
    }
    DirLpResult res{simplex.solution(), simplex.objective(), rounds, true};
    for (const Rational& v : res.x)
        if (v != 0 && v != 1) {
            res.integral = false;
            break;
        }
    return res;
}

struct DirBnb {
    int r;
    int k;
    bool found = false;
    Rational best_cost{0};
    std::vector<Arc> best;
    long nodes = 0;
    long lp_rounds = 0;

    void dfs(const Digraph& committed, std::vector<Arc> cand, std::vector<Rational> costs,
             Rational acc, std::vector<Arc> bought) {
        if (++nodes > 200000) throw IterationLimitError("directed solver: branch budget");
        {
            Digraph full = committed;
            for (const Arc& a : cand) full.add_arc(a.first, a.second);
            if (!is_k_outconnected(full, r, k)) return;
        }
        DirLpResult lp = solve_cut_lp(committed, cand, costs, r, k);
        lp_rounds += lp.rounds;
        if (found && acc + lp.objective >= best_cost) return;
        if (lp.integral) {
            std::vector<Arc> chosen = bought;
            for (size_t j = 0; j < cand.size(); ++j)
                if (lp.x[j] == 1) chosen.push_back(cand[j]);
            Digraph result = committed;
            for (size_t j = 0; j < cand.size(); ++j)
                if (lp.x[j] == 1) result.add_arc(cand[j].first, cand[j].second);
            if (!is_k_outconnected(result, r, k))
                throw Error("directed solver: integral LP vertex not outconnected");
            found = true;
            best_cost = acc + lp.objective;
            best = std::move(chosen);
            return;  // integral vertex is optimal for this subtree
        }
        size_t frac = cand.size();
        for (size_t j = 0; j < cand.size(); ++j)
            if (lp.x[j] != 0 && lp.x[j] != 1) {
                frac = j;
                break;
            }
        Arc a = cand[frac];
        Rational ca = costs[frac];
        std::vector<Arc> rest_cand;
        std::vector<Rational> rest_costs;
        for (size_t j = 0; j < cand.size(); ++j) {
            if (j == frac) continue;
            rest_cand.push_back(cand[j]);
            rest_costs.push_back(costs[j]);
        }
        // commit the arc
        {
            Digraph with = committed;
            with.add_arc(a.first, a.second);
            std::vector<Arc> b2 = bought;
            b2.push_back(a);
            dfs(with, rest_cand, rest_costs, acc + ca, std::move(b2));
        }
        // drop the arc
        dfs(committed, std::move(rest_cand), std::move(rest_costs), acc, std::move(bought));
    }
};

}  // namespace

DirectedSolveResult solve_directed_outconnectivity(const Digraph& committed,
                                                   const std::map<Arc, Rational>& arc_costs,
                                                   int r, int k) {
    std::vector<Arc> cand;
    std::vector<Rational> costs;
    for (const auto& [a, c] : arc_costs) {
        if (committed.has_arc(a.first, a.second)) continue;
        if (c < 0) throw Error("negative arc cost");
        cand.push_back(a);
        costs.push_back(c);
    }
    {
        Digraph full = committed;
        for (const Arc& a : cand) full.add_arc(a.first, a.second);
        if (!is_k_outconnected(full, r, k))
            throw InfeasibleError("directed outconnectivity unreachable with all candidates");
    }
    DirLpResult root = solve_cut_lp(committed, cand, costs, r, k);
    if (root.integral) {
        DirectedSolveResult res{{}, root.objective, root.rounds, 0};
        Digraph check = committed;
        for (size_t j = 0; j < cand.size(); ++j)
            if (root.x[j] == 1) {
                res.arcs.push_back(cand[j]);
                check.add_arc(cand[j].first, cand[j].second);
            }
        if (!is_k_outconnected(check, r, k))
            throw Error("directed solver: integral LP vertex not outconnected");
        return res;
    }
    DirBnb bnb{r, k};
    bnb.lp_rounds = root.rounds;
    bnb.dfs(committed, cand, costs, Rational(0), {});
    if (!bnb.found) throw Error("directed solver: branch-and-bound found no solution");
    std::sort(bnb.best.begin(), bnb.best.end());
    return {bnb.best, bnb.best_cost, bnb.lp_rounds, bnb.nodes};
}

RootedResult rooted(const Graph& g, const CostFunction& c, const NodeSet& R, int k) {
    int n = g.node_count();
    if (R.universe() != n) throw Error("rooted: terminal set universe mismatch");
    if (R.size() != k) throw BadTerminalCountError("rooted: |R| must equal k");
    std::vector<Edge> cand = candidate_edges(g, c);
    {
        Graph full = g;
        for (const Edge& e : cand) full.add_edge(e.u, e.v);
        if (!is_k_connected(full, k))
            throw InfeasibleError("rooted: no candidate set makes the graph k-connected");
    }

    int root = n;
    Digraph committed(n + 1);
    for (const Edge& e : g.edges()) {
        committed.add_arc(e.u, e.v);
        committed.add_arc(e.v, e.u);
    }
    for (int v : R.members()) {
        committed.add_arc(root, v);
        committed.add_arc(v, root);
    }
    std::map<Arc, Rational> arc_costs;
    for (const Edge& e : cand) {
        arc_costs[{e.u, e.v}] = c.at(e);
        arc_costs[{e.v, e.u}] = c.at(e);
    }
    DirectedSolveResult dir = solve_directed_outconnectivity(committed, arc_costs, root, k);

    std::set<Edge> picked;
    for (const Arc& a : dir.arcs) picked.insert(Edge(a.first, a.second));
    RootedResult res{{picked.begin(), picked.end()}, Rational(0)};
    for (const Edge& e : res.edges) res.cost += c.at(e);
    return res;
}

}  // namespace kaug
