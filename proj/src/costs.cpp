#include "kaug/costs.hpp"

#include "kaug/errors.hpp"

namespace kaug {

void CostFunction::set(const Edge& e, const Rational& c) {
    if (c < 0) throw Error("negative edge cost");
    c_[e] = c;
}

const Rational& CostFunction::at(const Edge& e) const {
    auto it = c_.find(e);
    if (it == c_.end()) throw Error("edge is not purchasable");
    return it->second;
}

Rational CostFunction::total(const std::vector<Edge>& F) const {
    Rational t(0);
    for (const Edge& e : F) t += at(e);
    return t;
}

std::vector<Edge> candidate_edges(const Graph& g, const CostFunction& c) {
    std::vector<Edge> out;
    for (const auto& [e, cost] : c.entries()) {
        (void)cost;
        if (e.v < g.node_count() && !g.has_edge(e.u, e.v)) out.push_back(e);
    }
    return out;
}

}  // namespace kaug
