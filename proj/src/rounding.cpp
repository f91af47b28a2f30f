#include "kaug/rounding.hpp"

#include "kaug/errors.hpp"
#include "kaug/rogue.hpp"

#include <ostream>

namespace kaug {

RoundingOutcome iterative_round(const Graph& g, int k, const CostFunction& c,
                                const RoundingOptions& opt) {
    Graph work = g;
    RoundingOutcome out{RoundingOutcome::Kind::Success, {}, Rational(0), NodeSet(g.node_count()),
                        0, Rational(0)};
    const Rational half = make_rational(1, 2);
    int max_iters = static_cast<int>(candidate_edges(g, c).size()) + 1;

    for (int iter = 0;; ++iter) {
        if (iter > max_iters)
            throw IterationLimitError("iterative_round: more iterations than candidate edges");
        if (is_k_connected(work, k)) {
            out.kind = RoundingOutcome::Kind::Success;
            out.iterations = iter;
            return out;
        }
        LpvcResult lp = solve_lpvc(work, k, c, opt.lp);
        if (iter == 0) out.first_lp_objective = lp.objective;

        auto [max_edge, max_val] = max_fractional_edge(lp.x);
        std::vector<Edge> rounded;
        if (max_val >= half) {
            if (opt.round_all) {
                for (const auto& [e, v] : lp.x.values)
                    if (v >= half) rounded.push_back(e);
            } else {
                rounded.push_back(max_edge);
            }
        }
        if (opt.trace)
            *opt.trace << "iter=" << iter << " obj=" << frac_str(lp.objective)
                       << " rounded=" << rounded.size() << " max_x=" << frac_str(max_val) << "\n";

        if (rounded.empty()) {
            std::optional<NodeSet> rogue = find_rogue_from_fractional(work, k, lp.x);
            if (!rogue)
                throw Error("iterative_round: stalled but no rogue set found");
            if (!is_deficient_set(g, k, *rogue) || rogue->size() >= k)
                throw Error("iterative_round: extracted set is not a rogue set of the start graph");
            out.kind = RoundingOutcome::Kind::Stalled;
            out.rogue = *rogue;
            out.iterations = iter + 1;
            return out;
        }
        for (const Edge& e : rounded) {
            work.add_edge(e.u, e.v);
            out.edges.push_back(e);
            out.cost += c.at(e);
        }
    }
}

}  // namespace kaug
