#include "kaug/oracle.hpp"

#include "kaug/errors.hpp"
#include "kaug/simplex.hpp"

#include <algorithm>
#include <queue>

namespace kaug {

namespace {

struct SearchState {
    Graph work;
    std::vector<Edge> chosen;
    Rational chosen_cost{0};
    Rational best_cost{0};
    std::vector<Edge> best_edges;
    bool found = false;
    long explored = 0;
    long cap = 0;

    explicit SearchState(const Graph& g) : work(g) {}
};

void exhaustive_dfs(SearchState& st, const Instance& inst, const std::vector<Edge>& cand, size_t i) {
    if (++st.explored > st.cap) throw BudgetExceededError("exact_opt: search budget exceeded");
    if (st.found && st.chosen_cost >= st.best_cost) return;
    if (is_k_connected(st.work, inst.k)) {
        st.found = true;
        st.best_cost = st.chosen_cost;
        st.best_edges = st.chosen;
        return;  // supersets cost at least as much
    }
    if (i == cand.size()) return;
    const Edge& e = cand[i];
    // include
    st.work.add_edge(e.u, e.v);
    st.chosen.push_back(e);
    st.chosen_cost += inst.costs.at(e);
    exhaustive_dfs(st, inst, cand, i + 1);
    st.chosen_cost -= inst.costs.at(e);
    st.chosen.pop_back();
    st.work.remove_edge(e.u, e.v);
    // exclude
    exhaustive_dfs(st, inst, cand, i + 1);
}

struct BnbState : SearchState {
    const Instance* inst = nullptr;
    std::vector<Edge> cand;  // cost-ascending
    int lp_depth_limit = 3;

    using SearchState::SearchState;
};

void bnb_dfs(BnbState& st, size_t i, int depth) {
    if (++st.explored > st.cap) throw BudgetExceededError("exact_opt: search budget exceeded");
    if (st.found && st.chosen_cost >= st.best_cost) return;
    if (is_k_connected(st.work, st.inst->k)) {
        st.found = true;
        st.best_cost = st.chosen_cost;
        st.best_edges = st.chosen;
        return;
    }
    if (i == st.cand.size()) return;

    // Feasibility of this subtree: all undecided edges added.
    {
        Graph full = st.work;
        for (size_t j = i; j < st.cand.size(); ++j) full.add_edge(st.cand[j].u, st.cand[j].v);
        if (!is_k_connected(full, st.inst->k)) return;
    }
    // Cut-LP lower bound on the completion, worth its cost only high in the tree.
    if (st.found && depth <= st.lp_depth_limit) {
        CostFunction rest;
        for (size_t j = i; j < st.cand.size(); ++j) rest.set(st.cand[j], st.inst->costs.at(st.cand[j]));
        Rational bound = st.chosen_cost + solve_lpvc(st.work, st.inst->k, rest).objective;
        if (bound >= st.best_cost) return;
    }

    const Edge& e = st.cand[i];
    st.work.add_edge(e.u, e.v);
    st.chosen.push_back(e);
    st.chosen_cost += st.inst->costs.at(e);
    bnb_dfs(st, i + 1, depth + 1);
    st.chosen_cost -= st.inst->costs.at(e);
    st.chosen.pop_back();
    st.work.remove_edge(e.u, e.v);
    bnb_dfs(st, i + 1, depth + 1);
}

}  // namespace

OracleResult exact_opt_exhaustive(const Instance& inst, const OracleBudget& budget) {
    std::vector<Edge> cand = candidate_edges(inst.graph, inst.costs);
    if (static_cast<int>(cand.size()) > budget.max_candidates)
        throw BudgetExceededError("exact_opt_exhaustive: too many candidates");
    SearchState st(inst.graph);
    st.cap = budget.max_nodes;
    exhaustive_dfs(st, inst, cand, 0);
    if (!st.found) return {false, Rational(0), {}, st.explored};
    std::sort(st.best_edges.begin(), st.best_edges.end());
    return {true, st.best_cost, st.best_edges, st.explored};
}

OracleResult exact_opt_bnb(const Instance& inst, const OracleBudget& budget) {
    std::vector<Edge> cand = candidate_edges(inst.graph, inst.costs);
    if (static_cast<int>(cand.size()) > budget.max_candidates)
        throw BudgetExceededError("exact_opt_bnb: too many candidates");
    std::stable_sort(cand.begin(), cand.end(), [&](const Edge& a, const Edge& b) {
        return inst.costs.at(a) < inst.costs.at(b);
    });
    BnbState st(inst.graph);
    st.cap = budget.max_nodes;
    st.inst = &inst;
    st.cand = cand;

    // Greedy incumbent: cheapest-first until connected.
    {
        Graph greedy = inst.graph;
        std::vector<Edge> picked;
        Rational cost(0);
        for (const Edge& e : cand) {
            if (is_k_connected(greedy, inst.k)) break;
            greedy.add_edge(e.u, e.v);
            picked.push_back(e);
            cost += inst.costs.at(e);
        }
        if (is_k_connected(greedy, inst.k)) {
            st.found = true;
            st.best_cost = cost;
            st.best_edges = picked;
        }
    }
    bnb_dfs(st, 0, 0);
    if (!st.found) return {false, Rational(0), {}, st.explored};
    std::sort(st.best_edges.begin(), st.best_edges.end());
    return {true, st.best_cost, st.best_edges, st.explored};
}

OracleResult exact_opt(const Instance& inst, const OracleBudget& budget) {
    std::vector<Edge> cand = candidate_edges(inst.graph, inst.costs);
    if (static_cast<int>(cand.size()) > budget.max_candidates)
        throw BudgetExceededError("exact_opt: too many candidates");
    if (cand.size() <= 20) return exact_opt_exhaustive(inst, budget);
    return exact_opt_bnb(inst, budget);
}

std::vector<SetPair> enumerate_deficient_setpairs(const Graph& g, int k, std::uint64_t budget) {
    int n = g.node_count();
    std::vector<NodeSet> def = deficient_sets(g, k, n, budget);
    std::vector<SetPair> out;
    for (const NodeSet& a : def) {
        NodeSet star = g.outside(a);
        for (const NodeSet& b : def) {
            if (!NodeSet::lex_less(a, b)) continue;  // unordered pairs once
            if (!b.is_subset_of(star)) continue;
            if (n - (a | b).size() >= k) continue;
            out.push_back(SetPair::make(g, a, b));
        }
    }
    std::sort(out.begin(), out.end(), SetPair::lex_less);
    return out;
}

ExhaustiveCheck exhaustive_constraint_check(const Graph& g, int k, const FractionalSolution& x) {
    ExhaustiveCheck res{true, std::nullopt, Rational(0)};
    int best_boundary = 0;
    for (const SetPair& sp : enumerate_deficient_setpairs(g, k)) {
        Rational slack = x.weight_on(sp) - deficiency(k, sp);
        if (slack >= 0) continue;
        int boundary = g.node_count() - sp.union_pieces().size();
        bool better = false;
        if (res.feasible) {
            better = true;
        } else if (slack != res.slack) {
            better = slack < res.slack;
        } else if (boundary != best_boundary) {
            better = boundary < best_boundary;
        }
        // equal slack+boundary: first in lex enumeration order wins
        if (better) {
            res.feasible = false;
            res.worst = sp;
            res.slack = slack;
            best_boundary = boundary;
        }
    }
    return res;
}

LpvcResult solve_lpvc_exhaustive(const Graph& g, int k, const CostFunction& c) {
    int n = g.node_count();
    if (n < k + 1) throw InfeasibleError("solve_lpvc_exhaustive: fewer than k+1 nodes");
    std::vector<Edge> vars = candidate_edges(g, c);
    std::vector<Rational> costs, upper;
    for (const Edge& e : vars) {
        costs.push_back(c.at(e));
        upper.emplace_back(1);
    }
    BoundedSimplex simplex(std::move(costs), std::move(upper));
    LpvcResult result{{}, Rational(0), {}, 0, 0};
    for (const SetPair& sp : enumerate_deficient_setpairs(g, k)) {
        std::vector<std::pair<int, Rational>> coeffs;
        for (size_t j = 0; j < vars.size(); ++j)
            if (covers(vars[j], sp)) coeffs.emplace_back(static_cast<int>(j), Rational(1));
        result.rows.push_back({sp, deficiency(k, sp)});
        simplex.add_row(coeffs, Rational(deficiency(k, sp)));
    }
    simplex.reoptimize();
    const auto& sol = simplex.solution();
    for (size_t j = 0; j < vars.size(); ++j) result.x.values[vars[j]] = sol[j];
    result.objective = simplex.objective();
    result.fractional_coordinates = simplex.fractional_count();
    return result;
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<size_t>(g.node_count()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    return adj;
}

int h_of_mask(const std::vector<std::uint64_t>& adj, int k, std::uint64_t mask) {
    std::uint64_t nb = 0;
    for (std::uint64_t m = mask; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        nb |= adj[static_cast<size_t>(v)];
    }
    nb &= ~mask;
    return __builtin_popcountll(mask) + (k - 1) * __builtin_popcountll(nb);
}

}  // namespace

HMinExhaustive exhaustive_min_h(const Graph& g, int k, int v) {
    int n = g.node_count();
    if (n > 24) throw SizeLimitError("exhaustive_min_h: n too large");
    std::vector<std::uint64_t> adj = adjacency_masks(g);
    std::uint64_t best_mask = std::uint64_t{1} << v;
    int best_val = h_of_mask(adj, k, best_mask);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask >> v & 1u)) continue;
        int val = h_of_mask(adj, k, mask);
        if (val < best_val ||
            (val == best_val && __builtin_popcountll(mask) > __builtin_popcountll(best_mask))) {
            best_val = val;
            best_mask = mask;
        }
    }
    return {best_val, NodeSet::from_mask(n, best_mask)};
}

NodeSet exhaustive_low_h_union(const Graph& g, int k, int threshold) {
    int n = g.node_count();
    if (n > 24) throw SizeLimitError("exhaustive_low_h_union: n too large");
    std::vector<std::uint64_t> adj = adjacency_masks(g);
    std::uint64_t acc = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        if (h_of_mask(adj, k, mask) <= threshold) acc |= mask;
    return NodeSet::from_mask(n, acc);
}

int brute_force_cut_value(const Graph& g, int u, int w) {
    int n = g.node_count();
    if (n > 20) throw SizeLimitError("brute_force_cut_value: n too large");
    if (g.has_edge(u, w)) throw AdjacentTerminalsError("brute_force_cut_value: adjacent terminals");
    auto separates = [&](std::uint64_t cut_mask) {
        // BFS from u avoiding cut nodes.
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::queue<int> q;
        q.push(u);
        seen[static_cast<size_t>(u)] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            if (a == w) return false;
            for (int b : g.neighbors(a).members()) {
                if (cut_mask >> b & 1u) continue;
                if (!seen[static_cast<size_t>(b)]) {
                    seen[static_cast<size_t>(b)] = 1;
                    q.push(b);
                }
            }
        }
        return true;
    };
    int best = n;  // removing everything else always separates
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if ((mask >> u & 1u) || (mask >> w & 1u)) continue;
        int size = static_cast<int>(__builtin_popcountll(mask));
        if (size >= best) continue;
        if (separates(mask)) best = size;
    }
    return best;
}

}  // namespace kaug
