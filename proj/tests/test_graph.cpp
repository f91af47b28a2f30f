#include "kaug/errors.hpp"
#include "kaug/graph.hpp"
#include "kaug/oracle.hpp"

#include <doctest.h>

#include <queue>
#include <random>

using namespace kaug;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, double density, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < density) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("neighbors and outside") {
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CHECK(path.neighbors(NodeSet(3, {0})) == NodeSet(3, {1}));
    CHECK(path.neighbors(NodeSet::full(3)).empty());

    Graph c4 = cycle(4);
    CHECK(c4.neighbors(NodeSet(4, {0})) == NodeSet(4, {1, 3}));
    CHECK(c4.outside(NodeSet(4, {0})) == NodeSet(4, {2}));
    CHECK(c4.outside(NodeSet::full(4)).empty());
    CHECK(complete(4).outside(NodeSet(4, {0})).empty());
}

TEST_CASE("min vertex cut on small graphs") {
    Graph c4 = cycle(4);
    VertexCut cut = min_vertex_cut(c4, 0, 2);
    CHECK(cut.value == 2);
    CHECK(cut.cut_nodes == NodeSet(4, {1, 3}));
    CHECK(cut.source_side == NodeSet(4, {0}));

    // three internally disjoint length-2 paths between 0 and 1
    Graph theta(5, {Edge(0, 2), Edge(2, 1), Edge(0, 3), Edge(3, 1), Edge(0, 4), Edge(4, 1)});
    CHECK(min_vertex_cut(theta, 0, 1).value == 3);

    Graph star(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    VertexCut s = min_vertex_cut(star, 1, 2);
    CHECK(s.value == 1);
    CHECK(s.cut_nodes == NodeSet(4, {0}));

    CHECK_THROWS_AS(min_vertex_cut(c4, 0, 1), AdjacentTerminalsError);
}

TEST_CASE("k-connectivity") {
    CHECK(is_k_connected(complete(4), 3));
    CHECK(is_k_connected(cycle(5), 2));
    CHECK_FALSE(is_k_connected(cycle(5), 3));
    for (int k = 1; k <= 4; ++k) CHECK(is_k_connected(complete(k + 1), k));
    CHECK_FALSE(is_k_connected(complete(3), 3));  // too few nodes
}

TEST_CASE("deficient set enumeration") {
    for (int k = 1; k <= 3; ++k) CHECK(deficient_sets(complete(k + 1), k, k + 1).empty());

    auto defs = deficient_sets(cycle(4), 3, 2);
    REQUIRE(defs.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(defs[static_cast<size_t>(v)] == NodeSet(4, {v}));

    CHECK(deficient_sets(cycle(4), 2, 3).empty());
    CHECK_THROWS_AS(deficient_sets(Graph(40), 2, 40, 1000), SizeLimitError);
}

TEST_CASE("cut value matches subset brute force") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.4, rng);
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) {
                if (g.has_edge(u, w)) continue;
                CHECK(min_vertex_cut(g, u, w).value == brute_force_cut_value(g, u, w));
            }
    }
}

TEST_CASE("k-connectivity agrees with deficient-set emptiness") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        int k = 1 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.5, rng);
        bool conn = is_k_connected(g, k);
        bool no_deficient = deficient_sets(g, k, n).empty();
        if (n >= k + 1)
            CHECK(conn == no_deficient);
        else
            CHECK_FALSE(conn);
    }
}

TEST_CASE("gamma submodularity") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.35, rng);
        NodeSet u(n), w(n);
        for (int v = 0; v < n; ++v) {
            if (bit(rng)) u.add(v);
            if (bit(rng)) w.add(v);
        }
        CHECK(g.gamma(u) + g.gamma(w) >= g.gamma(u & w) + g.gamma(u | w));
        CHECK(g.gamma(u) + g.gamma(w) >= g.gamma(g.outside(u) & w) + g.gamma(u & g.outside(w)));
    }
}

TEST_CASE("source side is the unique minimal one") {
    std::mt19937_64 rng(74);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);  // n <= 8
        Graph g = random_graph(n, 0.45, rng);
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) {
                if (g.has_edge(u, w)) continue;
                VertexCut cut = min_vertex_cut(g, u, w);
                // Collect the source side of every minimum cut.
                bool minimal = true;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    if ((mask >> u & 1u) || (mask >> w & 1u)) continue;
                    if (__builtin_popcountll(mask) != cut.value) continue;
                    NodeSet cand = NodeSet::from_mask(n, mask);
                    // reachable side of u in g - cand
                    NodeSet side(n);
                    std::queue<int> q;
                    q.push(u);
                    side.add(u);
                    bool hits_w = false;
                    while (!q.empty()) {
                        int a = q.front();
                        q.pop();
                        for (int b : g.neighbors(a).members()) {
                            if (cand.contains(b) || side.contains(b)) continue;
                            side.add(b);
                            if (b == w) hits_w = true;
                            q.push(b);
                        }
                    }
                    if (hits_w) continue;  // not a separating set
                    CHECK(cut.source_side.is_subset_of(side));
                    if (side == cut.source_side) minimal = true;
                }
                CHECK(minimal);
            }
    }
}

TEST_CASE("graph edit guards") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.remove_edge(0, 1));
    CHECK_FALSE(g.remove_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(0, 0), Error);
    CHECK_THROWS_AS(g.add_edge(0, 9), Error);
}
