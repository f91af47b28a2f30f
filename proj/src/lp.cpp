#include "kaug/lp.hpp"

#include "kaug/errors.hpp"
#include "kaug/maxflow.hpp"
#include "kaug/simplex.hpp"

#include <ostream>

namespace kaug {

const Rational& FractionalSolution::at(const Edge& e) const {
    static const Rational zero(0);
    auto it = values.find(e);
    return it == values.end() ? zero : it->second;
}

std::vector<Edge> FractionalSolution::support() const {
    std::vector<Edge> out;
    for (const auto& [e, v] : values)
        if (v > 0) out.push_back(e);
    return out;
}

Rational FractionalSolution::weight_on(const SetPair& P) const {
    Rational t(0);
    for (const auto& [e, v] : values)
        if (v > 0 && covers(e, P)) t += v;
    return t;
}

std::pair<Edge, Rational> max_fractional_edge(const FractionalSolution& x) {
    if (x.values.empty()) throw EmptySupportError("max_fractional_edge: no candidate edges");
    auto best = x.values.begin();
    for (auto it = std::next(best); it != x.values.end(); ++it)
        if (it->second > best->second) best = it;  // map order: first max is lex-smallest
    return {best->first, best->second};
}

namespace {

// Cut structure around one terminal pair of the fractional graph.
struct FractionalCut {
    Rational value;
    NodeSet source_side;  // inclusion-minimal
    NodeSet cut_nodes;
};

// Existing edges get unbounded arcs, candidate edges arcs of capacity x_e,
// internal nodes capacity 1. Terminals are nonadjacent, so every u-w path
// meets finite capacity.
FractionalCut fractional_min_cut(const Graph& g, const FractionalSolution& x, int u, int w,
                                 std::optional<Rational> limit) {
    SplitNetwork<Rational> s(g.node_count(), u, w);
    for (const Edge& e : g.edges()) {
        s.net.add_arc(s.out(e.u), s.in(e.v), Rational(0), true);
        s.net.add_arc(s.out(e.v), s.in(e.u), Rational(0), true);
    }
    for (const auto& [e, v] : x.values) {
        if (v <= 0) continue;
        s.net.add_arc(s.out(e.u), s.in(e.v), v);
        s.net.add_arc(s.out(e.v), s.in(e.u), v);
    }
    Rational value = s.net.max_flow(s.out(u), s.in(w), limit);
    FractionalCut cut{value, NodeSet(g.node_count()), NodeSet(g.node_count())};
    if (limit && value >= *limit) return cut;  // sides irrelevant once non-violated

    std::vector<char> reach = s.net.source_side_min(s.out(u));
    for (int v = 0; v < g.node_count(); ++v) {
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

}  // namespace

SeparationResult separate(const Graph& g, int k, const FractionalSolution& x) {
    for (const auto& [e, v] : x.values) {
        if (v < 0) throw Error("separate: negative fractional value");
        if (g.has_edge(e.u, e.v)) throw Error("separate: fractional value on an existing edge");
    }
    int n = g.node_count();
    Rational target(k);
    std::optional<SetPair> best;
    Rational best_slack(0);
    int best_cut_size = 0;
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (g.has_edge(u, w)) continue;
            FractionalCut cut = fractional_min_cut(g, x, u, w, target);
            if (cut.value >= target) continue;
            NodeSet other = (cut.source_side | cut.cut_nodes).complement();
            SetPair sp = SetPair::make(g, cut.source_side, other);
            Rational slack = cut.value - target;  // = x(δ) − p
            bool better = false;
            if (!best) {
                better = true;
            } else if (slack != best_slack) {
                better = slack < best_slack;
            } else if (cut.cut_nodes.size() != best_cut_size) {
                better = cut.cut_nodes.size() < best_cut_size;
            } else {
                better = SetPair::lex_less(sp, *best);
            }
            if (better) {
                best = sp;
                best_slack = slack;
                best_cut_size = cut.cut_nodes.size();
            }
        }
    }
    if (!best) return {true, std::nullopt, Rational(0)};
    if (best_slack >= 0) throw Error("separate: non-violated candidate survived");
    return {false, best, best_slack};
}

void dump_restricted_lp(std::ostream& out, const Graph& g, const CostFunction& c,
                        const std::vector<ConstraintRow>& rows) {
    std::vector<Edge> vars = candidate_edges(g, c);
    out << "min";
    bool first = true;
    for (const Edge& e : vars) {
        out << (first ? " " : " + ") << frac_str(c.at(e)) << " x_" << e.u << "_" << e.v;
        first = false;
    }
    out << "\n";
    int idx = 0;
    for (const ConstraintRow& row : rows) {
        out << "r" << ++idx << ":";
        first = true;
        for (const Edge& e : vars) {
            if (!covers(e, row.pair)) continue;
            out << (first ? " " : " + ") << "x_" << e.u << "_" << e.v;
            first = false;
        }
        out << " >= " << row.rhs << "/1\n";
    }
    for (const Edge& e : vars) out << "0/1 <= x_" << e.u << "_" << e.v << " <= 1/1\n";
}

LpvcResult solve_lpvc(const Graph& g, int k, const CostFunction& c, const LpvcOptions& opt) {
    int n = g.node_count();
    if (n < k + 1) throw InfeasibleError("solve_lpvc: fewer than k+1 nodes");
    std::vector<Edge> vars = candidate_edges(g, c);

    {
        Graph full = g;
        for (const Edge& e : vars) full.add_edge(e.u, e.v);
        if (!is_k_connected(full, k))
            throw InfeasibleError("solve_lpvc: even buying every candidate edge fails");
    }

    std::vector<Rational> costs, upper;
    costs.reserve(vars.size());
    upper.reserve(vars.size());
    for (const Edge& e : vars) {
        costs.push_back(c.at(e));
        upper.emplace_back(1);
    }
    BoundedSimplex simplex(std::move(costs), std::move(upper));

    LpvcResult result{{}, Rational(0), {}, 0, 0};
    for (int round = 0;; ++round) {
        if (round >= opt.max_rounds) throw IterationLimitError("solve_lpvc: row-generation budget");
        FractionalSolution x;
        const auto& sol = simplex.solution();
        for (size_t j = 0; j < vars.size(); ++j) x.values[vars[j]] = sol[j];

        SeparationResult sep = separate(g, k, x);
        if (sep.feasible) {
            result.x = std::move(x);
            result.objective = simplex.objective();
            result.rounds = round;
            result.fractional_coordinates = simplex.fractional_count();
            if (opt.dump) dump_restricted_lp(*opt.dump, g, c, result.rows);
            return result;
        }
        const SetPair& sp = *sep.pair;
        std::vector<std::pair<int, Rational>> coeffs;
        for (size_t j = 0; j < vars.size(); ++j)
            if (covers(vars[j], sp)) coeffs.emplace_back(static_cast<int>(j), Rational(1));
        result.rows.push_back({sp, deficiency(k, sp)});
        simplex.add_row(coeffs, Rational(deficiency(k, sp)));
        simplex.reoptimize();
    }
}

}  // namespace kaug
