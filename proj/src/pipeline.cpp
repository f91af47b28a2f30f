#include "kaug/pipeline.hpp"

#include "kaug/errors.hpp"
#include "kaug/lp.hpp"
#include "kaug/oracle.hpp"
#include "kaug/outconnect.hpp"
#include "kaug/rogue.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

namespace kaug {

int small_n_threshold(int k) { return k * k * k * (k - 1) + k; }
int large_n_threshold(int k) { return k * k * k * k * (k - 1) + k; }
int restart_budget(int k) { return k * k * k * (k - 1) - k; }

std::vector<Edge> PipelineReport::all_edges() const {
    std::vector<Edge> out = f0.edges;
    out.insert(out.end(), f1.edges.begin(), f1.edges.end());
    out.insert(out.end(), f2.edges.begin(), f2.edges.end());
    return out;
}

namespace {

std::vector<int> node_order(int n, std::uint64_t seed) {
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

// First k nodes in `order` outside `avoid`.
std::optional<NodeSet> pick_terminals(const std::vector<int>& order, const NodeSet& avoid, int k) {
    NodeSet R(avoid.universe());
    for (int v : order) {
        if (avoid.contains(v)) continue;
        R.add(v);
        if (R.size() == k) return R;
    }
    return std::nullopt;
}

Graph with_edges(const Graph& g, const std::vector<Edge>& es) {
    Graph out = g;
    for (const Edge& e : es) out.add_edge(e.u, e.v);
    return out;
}

void trace_line(const PipelineOptions& opt, const std::string& line) {
    if (opt.trace) *opt.trace << line << "\n";
}

PipelineReport finalize_report(const Graph& g, int k, PipelineReport rep, bool certificates) {
    Graph final_graph = with_edges(g, rep.all_edges());
    rep.connected = is_k_connected(final_graph, k);
    rep.total_cost = rep.f0.cost + rep.f1.cost + rep.f2.cost;
    if (rep.status != PipelineStatus::Failed && !rep.connected)
        throw Error("augment: result failed the final connectivity check");
    if (certificates && rep.connected) {
        for (int u = 0; u < g.node_count(); ++u)
            for (int w = u + 1; w < g.node_count(); ++w) {
                if (final_graph.has_edge(u, w)) continue;
                rep.cut_certificates.emplace_back(u, w, min_vertex_cut(final_graph, u, w).value);
            }
    }
    return rep;
}

// Out-of-regime best-effort exit: solve the original instance exactly when
// the oracle budget allows, otherwise report failure.
PipelineReport best_effort_fallback(const Graph& g, int k, const CostFunction& c,
                                    PipelineReport rep, bool certificates) {
    rep.f0 = {};
    rep.f1 = {};
    rep.f2 = {};
    rep.status = PipelineStatus::Failed;
    try {
        OracleResult opt = exact_opt(Instance{g, k, c, "", 0});
        if (opt.feasible) {
            rep.f2 = {opt.edges, opt.cost};
            rep.status = PipelineStatus::SolvedByOracle;
        }
    } catch (const BudgetExceededError&) {
    }
    return finalize_report(g, k, std::move(rep), certificates);
}

}  // namespace

PipelineReport augment(const Graph& g, int k, const CostFunction& c, const PipelineOptions& opt) {
    int n = g.node_count();
    if (k < 1) throw Error("augment: k must be >= 1");
    PipelineReport rep;
    rep.n = n;
    rep.k = k;
    rep.mode = opt.mode;
    rep.forbidden_final = NodeSet(n);

    bool in_regime = n >= small_n_threshold(k);
    if (opt.mode == PipelineMode::Guaranteed && !in_regime)
        throw RegimeViolationError("augment: guaranteed mode needs n >= k^3(k-1)+k");
    rep.guarantee_applies = opt.mode == PipelineMode::Guaranteed && in_regime;

    if (n < k + 1) throw InfeasibleError("augment: fewer than k+1 nodes");
    {
        Graph full = with_edges(g, candidate_edges(g, c));
        if (!is_k_connected(full, k))
            throw InfeasibleError("augment: no purchasable set reaches k-connectivity");
    }

    auto rounder = opt.rounder;
    if (!rounder)
        rounder = [](const Graph& gg, int kk, const CostFunction& cc, const RoundingOptions& ro) {
            return iterative_round(gg, kk, cc, ro);
        };

    std::vector<int> order = node_order(n, opt.seed);

    if (is_k_connected(g, k)) {
        rep.connected = true;
        rep.status = PipelineStatus::Solved;
        rep.branch = n >= large_n_threshold(k) ? PipelineBranch::LargeN : PipelineBranch::SmallN;
    } else {
        // Phase 0
        NodeSet r0(n);
        if (opt.r0) {
            if (opt.r0->size() != k) throw BadTerminalCountError("augment: |R0| must equal k");
            r0 = *opt.r0;
        } else {
            auto picked = pick_terminals(order, NodeSet(n), k);
            r0 = *picked;  // n >= k+1 guarantees k nodes exist
        }
        RootedResult f0 = rooted(g, c, r0, k);
        rep.f0 = {f0.edges, f0.cost};
        Graph g0 = with_edges(g, f0.edges);
        trace_line(opt, "phase0 terminals=" + r0.to_string() + " cost=" + frac_str(f0.cost));

        RoundingOptions ropt;
        ropt.trace = opt.trace;

        bool large = opt.force_branch ? *opt.force_branch == PipelineBranch::LargeN
                                      : n >= large_n_threshold(k);
        rep.branch = large ? PipelineBranch::LargeN : PipelineBranch::SmallN;

        if (large) {
            BReport breport = compute_B(g0, k);
            rep.forbidden_final = breport.B;
            auto r1 = pick_terminals(order, breport.B, k);
            if (!r1) {
                if (opt.mode == PipelineMode::Guaranteed && n >= large_n_threshold(k))
                    throw Error("augment: V - B too small inside the large-n regime");
                throw RegimeViolationError("augment: V - B leaves no room for k terminals");
            }
            RootedResult f1 = rooted(g0, c, *r1, k);
            rep.f1 = {f1.edges, f1.cost};
            Graph g1 = with_edges(g0, f1.edges);
            trace_line(opt, "phase1 terminals=" + r1->to_string() + " cost=" + frac_str(f1.cost));

            RoundingOutcome round = rounder(g1, k, c, ropt);
            if (round.kind != RoundingOutcome::Kind::Success)
                throw Error("augment: rounding stalled on a rogue-free graph");
            rep.f2 = {round.edges, round.cost};
        } else {
            NodeSet S = r0;
            // In the regime each restart grows S inside the rogue-set union,
            // so more than k^3(k-1)-k restarts indicate a bug. Out of regime
            // (best effort) S <= V still bounds the loop.
            int budget = in_regime ? restart_budget(k) : n;
            while (true) {
                auto r1 = pick_terminals(order, S, k);
                if (!r1) {
                    if (opt.mode == PipelineMode::BestEffort) {
                        rep.forbidden_final = S;
                        return best_effort_fallback(g, k, c, std::move(rep), opt.certificates);
                    }
                    throw Error("augment: forbidden set exhausted the node supply");
                }
                RootedResult f1 = rooted(g0, c, *r1, k);
                Graph g1 = with_edges(g0, f1.edges);
                trace_line(opt, "phase1 terminals=" + r1->to_string() + " cost=" + frac_str(f1.cost) +
                                    " restarts=" + std::to_string(rep.restarts));

                RoundingOutcome round = rounder(g1, k, c, ropt);
                if (round.kind == RoundingOutcome::Kind::Success) {
                    rep.f1 = {f1.edges, f1.cost};
                    rep.f2 = {round.edges, round.cost};
                    break;
                }
                // Stalled: the rogue set must already be rogue in g0.
                const NodeSet& X = round.rogue;
                if (X.size() >= k || !is_deficient_set(g0, k, X))
                    throw Error("augment: stall certificate is not a rogue set of the phase-0 graph");
                if (!X.intersects(*r1) || X.intersects(S))
                    throw Error("augment: stall certificate does not grow the forbidden set");
                S |= X;
                trace_line(opt, "restart rogue=" + X.to_string() + " forbidden=" + S.to_string());
                if (++rep.restarts > budget) {
                    if (in_regime)
                        throw RestartBudgetError("augment: exceeded k^3(k-1)-k restarts");
                    rep.forbidden_final = S;
                    return best_effort_fallback(g, k, c, std::move(rep), opt.certificates);
                }
            }
            rep.forbidden_final = S;
        }
        rep.status = PipelineStatus::Solved;
    }

    return finalize_report(g, k, std::move(rep), opt.certificates);
}

VerifyReport verify(const Graph& g, int k, const std::vector<Edge>& F, const CostFunction& c,
                    int oracle_candidate_budget) {
    VerifyReport rep{false, std::nullopt, Rational(0), {}, std::nullopt, std::nullopt};
    Graph aug = g;
    for (const Edge& e : F) {
        if (g.has_edge(e.u, e.v)) {
            rep.invalid_edges.push_back(e);
            continue;
        }
        if (!c.purchasable(e)) {
            rep.invalid_edges.push_back(e);
            aug.add_edge(e.u, e.v);
            continue;
        }
        rep.cost += c.at(e);
        aug.add_edge(e.u, e.v);
    }
    rep.k_connected = is_k_connected(aug, k);
    if (!rep.k_connected) {
        // Smallest witnessing deficient cut side across nonadjacent pairs.
        for (int u = 0; u < aug.node_count() && !rep.deficient_witness; ++u)
            for (int w = u + 1; w < aug.node_count(); ++w) {
                if (aug.has_edge(u, w)) continue;
                VertexCut cut = min_vertex_cut(aug, u, w);
                if (cut.value < k) {
                    rep.deficient_witness = cut.source_side;
                    break;
                }
            }
        if (!rep.deficient_witness && aug.node_count() < k + 1)
            rep.deficient_witness = NodeSet(aug.node_count());
    }
    try {
        rep.lp_lower_bound = solve_lpvc(g, k, c).objective;
    } catch (const InfeasibleError&) {
    }
    Instance inst{g, k, c, "", 0};
    OracleBudget budget;
    budget.max_candidates = oracle_candidate_budget;
    try {
        OracleResult opt = exact_opt(inst, budget);
        if (opt.feasible) rep.exact_optimum = opt.cost;
    } catch (const BudgetExceededError&) {
    }
    return rep;
}

void serialize_report(std::ostream& out, const PipelineReport& rep) {
    out << "kaug-report 1\n";
    out << "status "
        << (rep.status == PipelineStatus::Solved
                ? "solved"
                : rep.status == PipelineStatus::SolvedByOracle ? "solved-by-oracle" : "failed")
        << "\n";
    out << "mode " << (rep.mode == PipelineMode::Guaranteed ? "guaranteed" : "best-effort") << "\n";
    out << "branch " << (rep.branch == PipelineBranch::LargeN ? "large-n" : "small-n") << "\n";
    out << "n " << rep.n << "\n";
    out << "k " << rep.k << "\n";
    out << "guarantee " << (rep.guarantee_applies ? "yes" : "no") << "\n";
    out << "restarts " << rep.restarts << "\n";
    out << "f0_cost " << frac_str(rep.f0.cost) << "\n";
    out << "f1_cost " << frac_str(rep.f1.cost) << "\n";
    out << "f2_cost " << frac_str(rep.f2.cost) << "\n";
    out << "total_cost " << frac_str(rep.total_cost) << "\n";
    out << "connected " << (rep.connected ? "true" : "false") << "\n";
    out << "forbidden_final";
    for (int v : rep.forbidden_final.members()) out << " " << v;
    out << "\n";
    for (const Edge& e : rep.f0.edges) out << "f0 " << e.u << " " << e.v << "\n";
    for (const Edge& e : rep.f1.edges) out << "f1 " << e.u << " " << e.v << "\n";
    for (const Edge& e : rep.f2.edges) out << "f2 " << e.u << " " << e.v << "\n";
    for (const auto& [u, w, value] : rep.cut_certificates)
        out << "cert " << u << " " << w << " " << value << "\n";
}

}  // namespace kaug
