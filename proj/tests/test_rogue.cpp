#include "kaug/errors.hpp"
#include "kaug/generator.hpp"
#include "kaug/oracle.hpp"
#include "kaug/rogue.hpp"

#include <doctest.h>

#include <random>

using namespace kaug;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
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

// Independence-freeness by classifying every pair of deficient set-pairs.
bool independence_free_brute(const Graph& g, int k) {
    std::vector<SetPair> pairs = enumerate_deficient_setpairs(g, k);
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = a + 1; b < pairs.size(); ++b)
            if (classify(pairs[a], pairs[b]).kind == Relation::Independent) return false;
    return true;
}

}  // namespace

TEST_CASE("h evaluation") {
    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    CHECK(h_value(path, 2, NodeSet(3, {0})) == 2);
    CHECK(h_value(path, 2, NodeSet(3)) == 0);
    CHECK(h_value(path, 2, NodeSet::full(3)) == 3);
    CHECK(h_value(path, 4, NodeSet(3, {1})) == 1 + 3 * 2);
}

TEST_CASE("h minimization on hand cases") {
    Graph lonely(3, {Edge(1, 2)});
    HMin iso = min_h_containing(lonely, 2, 0);
    CHECK(iso.value == 1);
    CHECK(iso.largest_minimizer == NodeSet(3, {0}));

    Graph path(3, {Edge(0, 1), Edge(1, 2)});
    HMin mid = min_h_containing(path, 2, 1);
    CHECK(mid.value == 3);
    CHECK(mid.largest_minimizer == NodeSet::full(3));  // ties resolve to the largest set
}

TEST_CASE("h minimization matches the exhaustive oracle") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        int k = 1 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.3, rng);
        for (int v = 0; v < n; ++v) {
            HMin fast = min_h_containing(g, k, v);
            HMinExhaustive slow = exhaustive_min_h(g, k, v);
            CHECK(fast.value == slow.value);
            CHECK(fast.largest_minimizer == slow.largest_minimizer);
        }
    }
}

TEST_CASE("largest minimizer dominates every other minimizer") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        int k = 2 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, 0.35, rng);
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        HMin m = min_h_containing(g, k, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (!(mask >> v & 1u)) continue;
            NodeSet X = NodeSet::from_mask(n, mask);
            if (h_value(g, k, X) == m.value) CHECK(X.is_subset_of(m.largest_minimizer));
        }
    }
}

TEST_CASE("B computation") {
    // k-connected graphs with n > k(k-1) have no low-h set at all
    BReport k4 = compute_B(complete(4), 2);
    CHECK(k4.B.empty());
    CHECK(k4.A == NodeSet::full(4));
    BReport k7 = compute_B(complete(7), 3);
    CHECK(k7.B.empty());

    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 6 + static_cast<int>(rng() % 5);
        int k = 2 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, 0.3, rng);
        BReport rep = compute_B(g, k);
        CHECK((rep.A | rep.B) == NodeSet::full(n));
        CHECK_FALSE(rep.A.intersects(rep.B));
        CHECK(rep.B == exhaustive_low_h_union(g, k, k * (k - 1)));
        NodeSet rogue_union(n);
        for (const NodeSet& x : enumerate_rogue_sets(g, k)) rogue_union |= x;
        CHECK(rogue_union.is_subset_of(rep.B));
    }
}

TEST_CASE("low-h sets are deficient and small when the graph is large enough") {
    std::mt19937_64 rng(64);
    int threshold_checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + static_cast<int>(rng() % 2);
        int n = k * (k - 1) + 2 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.3, rng);
        int threshold = k * (k - 1);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            NodeSet X = NodeSet::from_mask(n, mask);
            if (h_value(g, k, X) > threshold) continue;
            CHECK(is_deficient_set(g, k, X));
            CHECK(X.size() <= threshold);
            ++threshold_checked;
        }
        // every rogue set scores at most k(k-1)
        for (const NodeSet& x : enumerate_rogue_sets(g, k))
            CHECK(h_value(g, k, x) <= threshold);
    }
    CHECK(threshold_checked > 0);
}

TEST_CASE("rogue enumeration") {
    CHECK(enumerate_rogue_sets(complete(5), 4).empty());
    auto rogues = enumerate_rogue_sets(cycle(4), 3);
    CHECK(rogues.size() == 4);
    CHECK(is_rogue_free(cycle(5), 2));
}

TEST_CASE("independence-freeness matches brute-force pair classification") {
    std::mt19937_64 rng(65);
    int with_rogues = 0, dependent_seen = 0;
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + static_cast<int>(rng() % 3);  // n <= 7 keeps the pair scan honest
        int k = 2 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 4), rng);
        bool fast = is_independence_free(g, k);
        bool slow = independence_free_brute(g, k);
        CHECK(fast == slow);
        if (!slow) ++dependent_seen;
        if (!is_rogue_free(g, k)) ++with_rogues;
        if (is_rogue_free(g, k)) CHECK(fast);
    }
    CHECK(with_rogues > 0);
    CHECK(dependent_seen > 0);
}

TEST_CASE("rogue extraction from an all-below-half fractional point") {
    // 0 hangs off a two-node bridge component; {0} is the planted rogue set.
    Graph g(6, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
    FractionalSolution x;
    const Rational third = make_rational(1, 3);
    for (Edge e : {Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(2, 3), Edge(2, 4), Edge(1, 5), Edge(1, 3)})
        x.values[e] = third;
    REQUIRE(separate(g, 2, x).feasible);
    for (const auto& [e, v] : x.values) CHECK(v < make_rational(1, 2));

    std::optional<NodeSet> rogue = find_rogue_from_fractional(g, 2, x);
    REQUIRE(rogue.has_value());
    CHECK(rogue->size() < 2);
    CHECK(is_deficient_set(g, 2, *rogue));
    CHECK(*rogue == NodeSet(6, {0}));
}

TEST_CASE("rogue extraction returns nothing on a clean graph") {
    Graph k4 = complete(4);
    FractionalSolution x;
    CHECK_FALSE(find_rogue_from_fractional(k4, 2, x).has_value());
}
