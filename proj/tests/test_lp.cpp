#include "kaug/errors.hpp"
#include "kaug/generator.hpp"
#include "kaug/lp.hpp"
#include "kaug/oracle.hpp"

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

}  // namespace

TEST_CASE("max fractional edge") {
    FractionalSolution x;
    CHECK_THROWS_AS(max_fractional_edge(x), EmptySupportError);

    x.values[Edge(0, 2)] = make_rational(3, 4);
    auto [e1, v1] = max_fractional_edge(x);
    CHECK(e1 == Edge(0, 2));
    CHECK(v1 == make_rational(3, 4));

    x.values[Edge(0, 1)] = make_rational(3, 4);  // tie: lexicographically smaller wins
    auto [e2, v2] = max_fractional_edge(x);
    CHECK(e2 == Edge(0, 1));
    CHECK(v2 == make_rational(3, 4));

    FractionalSolution y;
    y.values[Edge(1, 2)] = make_rational(2, 5);
    y.values[Edge(0, 3)] = make_rational(1, 3);
    CHECK(max_fractional_edge(y).second < make_rational(1, 2));
}

TEST_CASE("separation base cases") {
    Graph g(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
    FractionalSolution zero;
    SeparationResult violated = separate(g, 1, zero);
    REQUIRE_FALSE(violated.feasible);
    CHECK(deficiency(1, *violated.pair) == 1);
    CHECK(violated.slack == -1);

    FractionalSolution ones;
    for (const Edge& e : g.non_edges()) ones.values[e] = Rational(1);
    CHECK(separate(g, 1, ones).feasible);
    CHECK(separate(g, 2, ones).feasible);
}

TEST_CASE("lp on an already connected graph") {
    Graph k4 = complete(4);
    CostFunction c;
    LpvcResult res = solve_lpvc(k4, 3, c);
    CHECK(res.objective == 0);
    CHECK(res.rows.empty());
    for (const auto& [e, v] : res.x.values) CHECK(v == 0);
}

TEST_CASE("lp forces the single available edge") {
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CostFunction c;
    c.set(Edge(0, 2), Rational(5));
    LpvcResult res = solve_lpvc(path, 2, c);
    CHECK(res.objective == 5);
    CHECK(res.x.at(Edge(0, 2)) == 1);
    LpvcResult exh = solve_lpvc_exhaustive(path, 2, c);
    CHECK(exh.objective == 5);
}

TEST_CASE("infeasible instances throw") {
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CostFunction none;
    CHECK_THROWS_AS(solve_lpvc(path, 2, none), InfeasibleError);
    // fewer than k+1 nodes
    CHECK_THROWS_AS(solve_lpvc(complete(3), 3, none), InfeasibleError);
}

TEST_CASE("iteration budget is honored") {
    Graph path(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    CostFunction c;
    for (const Edge& e : path.non_edges()) c.set(e, Rational(1));
    LpvcOptions opt;
    opt.max_rounds = 1;  // needs more than one separation round
    CHECK_THROWS_AS(solve_lpvc(path, 2, c, opt), IterationLimitError);
}

TEST_CASE("row generation matches the exhaustive formulation") {
    std::mt19937_64 rng(91);
    int done = 0;
    for (std::uint64_t seed = 1; done < 60; ++seed) {
        int n = 5 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % 3);
        Instance inst = gen_random(n, k, 0.3, 1, 9, seed * 13);
        LpvcResult a;
        try {
            a = solve_lpvc(inst.graph, inst.k, inst.costs);
        } catch (const InfeasibleError&) {
            continue;
        }
        LpvcResult b = solve_lpvc_exhaustive(inst.graph, inst.k, inst.costs);
        CHECK(a.objective == b.objective);
        CHECK(exhaustive_constraint_check(inst.graph, inst.k, a.x).feasible);
        CHECK(a.fractional_coordinates <= static_cast<int>(a.rows.size()));
        for (const auto& [e, v] : a.x.values) {
            CHECK(v >= 0);
            CHECK(v <= 1);
            CHECK_FALSE(inst.graph.has_edge(e.u, e.v));
        }
        ++done;
    }
}

TEST_CASE("lp objective never exceeds the integer optimum") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Instance inst = gen_random(7, 2, 0.35, 1, 9, seed * 31);
        LpvcResult lp = solve_lpvc(inst.graph, inst.k, inst.costs);
        OracleResult opt = exact_opt(inst);
        REQUIRE(opt.feasible);
        CHECK(lp.objective <= opt.cost);
    }
}

TEST_CASE("restricted lp dump format") {
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CostFunction c;
    c.set(Edge(0, 2), Rational(5));
    std::ostringstream dump;
    LpvcOptions opt;
    opt.dump = &dump;
    solve_lpvc(path, 2, c, opt);
    CHECK(dump.str() ==
          "min 5/1 x_0_2\n"
          "r1: x_0_2 >= 1/1\n"
          "0/1 <= x_0_2 <= 1/1\n");
}
