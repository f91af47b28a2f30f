#ifndef KAUG_COSTS_HPP
#define KAUG_COSTS_HPP

#include "kaug/graph.hpp"
#include "kaug/rational.hpp"

#include <map>
#include <vector>

namespace kaug {

/// Nonnegative exact costs on candidate edges; pairs without an entry are
/// non-purchasable (+∞).
class CostFunction {
public:
    void set(const Edge& e, const Rational& c);
    bool purchasable(const Edge& e) const { return c_.count(e) != 0; }
    const Rational& at(const Edge& e) const;
    const std::map<Edge, Rational>& entries() const { return c_; }
    bool empty() const { return c_.empty(); }

    Rational total(const std::vector<Edge>& F) const;

private:
    std::map<Edge, Rational> c_;
};

/// Finite-cost non-edges of g in lexicographic order: the LP variable universe.
std::vector<Edge> candidate_edges(const Graph& g, const CostFunction& c);

}  // namespace kaug

#endif
