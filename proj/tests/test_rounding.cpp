#include "kaug/errors.hpp"
#include "kaug/generator.hpp"
#include "kaug/oracle.hpp"
#include "kaug/rogue.hpp"
#include "kaug/rounding.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace kaug;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph with_edges(const Graph& g, const std::vector<Edge>& es) {
    Graph out = g;
    for (const Edge& e : es) out.add_edge(e.u, e.v);
    return out;
}

}  // namespace

TEST_CASE("rounding an already k-connected graph") {
    CostFunction c;
    RoundingOutcome res = iterative_round(complete(4), 3, c);
    CHECK(res.kind == RoundingOutcome::Kind::Success);
    CHECK(res.edges.empty());
    CHECK(res.cost == 0);
}

TEST_CASE("rounding the forced single edge") {
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CostFunction c;
    c.set(Edge(0, 2), Rational(5));
    RoundingOutcome res = iterative_round(path, 2, c);
    CHECK(res.kind == RoundingOutcome::Kind::Success);
    REQUIRE(res.edges.size() == 1);
    CHECK(res.edges[0] == Edge(0, 2));
    CHECK(res.cost == 5);
    CHECK(res.cost <= 2 * Rational(5));  // exact optimum is 5
    CHECK(is_k_connected(with_edges(path, res.edges), 2));
}

TEST_CASE("rounding succeeds within twice the optimum on random instances") {
    std::mt19937_64 rng(81);
    int succeeded = 0;
    for (std::uint64_t seed = 1; succeeded < 25; ++seed) {
        int n = 6 + static_cast<int>(rng() % 4);
        int k = 2 + static_cast<int>(rng() % 2);
        Instance inst = gen_random(n, k, 0.35, 1, 9, seed * 17);
        RoundingOutcome res;
        try {
            res = iterative_round(inst.graph, inst.k, inst.costs);
        } catch (const InfeasibleError&) {
            continue;
        }
        if (res.kind != RoundingOutcome::Kind::Success) continue;  // stalls are legitimate here
        ++succeeded;
        CHECK(is_k_connected(with_edges(inst.graph, res.edges), inst.k));
        CHECK(res.cost == inst.costs.total(res.edges));
        // the first LP objective lower-bounds the optimum
        OracleResult opt = exact_opt(inst);
        if (opt.feasible) {
            CHECK(res.first_lp_objective <= opt.cost);
            CHECK(res.cost <= 2 * opt.cost);
        }
        // independence-free inputs stay independence-free under added edges
        if (is_independence_free(inst.graph, inst.k)) {
            Graph work = inst.graph;
            for (const Edge& e : res.edges) {
                work.add_edge(e.u, e.v);
                CHECK(is_independence_free(work, inst.k));
            }
        }
    }
}

TEST_CASE("single-edge mode reaches the same guarantee") {
    Instance inst = gen_random(7, 2, 0.3, 1, 9, 4242);
    RoundingOptions opt;
    opt.round_all = false;
    RoundingOutcome res = iterative_round(inst.graph, inst.k, inst.costs, opt);
    REQUIRE(res.kind == RoundingOutcome::Kind::Success);
    CHECK(is_k_connected(with_edges(inst.graph, res.edges), inst.k));
    OracleResult best = exact_opt(inst);
    REQUIRE(best.feasible);
    CHECK(res.cost <= 2 * best.cost);
}

TEST_CASE("per-iteration trace lines") {
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CostFunction c;
    c.set(Edge(0, 2), Rational(5));
    std::ostringstream trace;
    RoundingOptions opt;
    opt.trace = &trace;
    iterative_round(path, 2, c, opt);
    CHECK(trace.str() == "iter=0 obj=5/1 rounded=1 max_x=1/1\n");
}

TEST_CASE("rounding propagates infeasibility") {
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CostFunction none;
    CHECK_THROWS_AS(iterative_round(path, 2, none), InfeasibleError);
}
