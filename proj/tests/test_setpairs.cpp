#include "kaug/errors.hpp"
#include "kaug/oracle.hpp"
#include "kaug/setpairs.hpp"

#include <doctest.h>

#include <random>

using namespace kaug;

namespace {

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

// All nodes that are an endpoint of some complete-graph edge covering both.
NodeSet meeting_points_brute(const SetPair& P, const SetPair& Q) {
    int n = P.universe();
    NodeSet out(n);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w) continue;
            Edge e(u, w);
            if (covers(e, P) && covers(e, Q)) out.add(u);
        }
    return out;
}

}  // namespace

TEST_CASE("deficiency evaluation") {
    Graph c4 = cycle(4);
    SetPair p = SetPair::make(c4, NodeSet(4, {0}), NodeSet(4, {2}));
    CHECK(deficiency(2, p) == 0);
    CHECK(deficiency(3, p) == 1);
    CHECK(deficiency(1, p) == 0);
}

TEST_CASE("covering") {
    Graph g(4);
    SetPair p = SetPair::make(g, NodeSet(4, {0}), NodeSet(4, {2}));
    CHECK(covers(Edge(0, 2), p));
    CHECK_FALSE(covers(Edge(0, 1), p));
    CHECK(coverage_count({}, p) == 0);
    CHECK(coverage_count({Edge(0, 2), Edge(0, 1), Edge(2, 3)}, p) == 1);
}

TEST_CASE("set-pair from a deficient set") {
    Graph c4 = cycle(4);
    SetPair p = from_deficient_set(c4, 3, NodeSet(4, {0}));
    CHECK(p == SetPair::make(c4, NodeSet(4, {0}), NodeSet(4, {2})));
    CHECK(deficiency(3, p) == 1);

    Graph path(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
    SetPair q = from_deficient_set(path, 2, NodeSet(5, {0}));
    CHECK(q == SetPair::make(path, NodeSet(5, {0}), NodeSet(5, {2, 3, 4})));
    CHECK(deficiency(2, q) == 1);

    Graph k4(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
    CHECK_THROWS_AS(from_deficient_set(k4, 3, NodeSet(4, {0})), NotDeficientError);
}

TEST_CASE("classification") {
    Graph g(6);
    SetPair ind_p = SetPair::make(g, NodeSet(6, {0}), NodeSet(6, {1}));
    SetPair ind_q = SetPair::make(g, NodeSet(6, {2}), NodeSet(6, {3}));
    CHECK(classify(ind_p, ind_q).kind == Relation::Independent);

    SetPair nest_p = SetPair::make(g, NodeSet(6, {0}), NodeSet(6, {1, 2, 3}));
    SetPair nest_q = SetPair::make(g, NodeSet(6, {0, 1, 2}), NodeSet(6, {3}));
    PairRelation rel = classify(nest_p, nest_q);
    CHECK(rel.kind == Relation::Nested);
    CHECK(nest_p.piece(rel.dominant_p) == NodeSet(6, {1, 2, 3}));
    CHECK(nest_q.piece(rel.dominant_q) == NodeSet(6, {0, 1, 2}));

    SetPair cr_p = SetPair::make(g, NodeSet(6, {0, 1}), NodeSet(6, {3, 4}));
    SetPair cr_q = SetPair::make(g, NodeSet(6, {1, 2}), NodeSet(6, {4, 5}));
    CHECK(classify(cr_p, cr_q).kind == Relation::Crossing);
}

TEST_CASE("classification is symmetric and matches meeting points") {
    std::mt19937_64 rng(41);
    int tested = 0;
    while (tested < 400) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.25, rng);
        std::vector<SetPair> pairs = enumerate_deficient_setpairs(g, 2 + static_cast<int>(rng() % 2));
        if (pairs.size() < 2) continue;
        const SetPair& p = pairs[rng() % pairs.size()];
        const SetPair& q = pairs[rng() % pairs.size()];
        if (p == q) continue;
        PairRelation a = classify(p, q);
        PairRelation b = classify(q, p);
        CHECK(a.kind == b.kind);
        NodeSet mp = meeting_points(p, q);
        CHECK(mp == meeting_points_brute(p, q));
        CHECK((a.kind == Relation::Independent) == mp.empty());
        ++tested;
    }
}

TEST_CASE("meeting points of nested pairs are the non-dominant pieces") {
    Graph g(6);
    SetPair p = SetPair::make(g, NodeSet(6, {0}), NodeSet(6, {1, 2, 3}));
    SetPair q = SetPair::make(g, NodeSet(6, {0, 1, 2}), NodeSet(6, {3}));
    // Non-dominant pieces: {0} of p and {3} of q.
    CHECK(meeting_points(p, q) == NodeSet(6, {0, 3}));
}

TEST_CASE("uncrossing the worked crossing example") {
    Graph g(6);
    SetPair p = SetPair::make(g, NodeSet(6, {0, 1}), NodeSet(6, {3, 4}));
    SetPair q = SetPair::make(g, NodeSet(6, {1, 2}), NodeSet(6, {4, 5}));
    CHECK(meeting_points(p, q) == NodeSet(6, {1, 4}));

    UncrossResult r = uncross(p, q, 1);
    CHECK(r.tensor.first == NodeSet(6, {0, 1, 2}));
    CHECK(r.tensor.second == NodeSet(6, {4}));
    CHECK(r.oplus.first == NodeSet(6, {1}));
    CHECK(r.oplus.second == NodeSet(6, {3, 4, 5}));
    CHECK_FALSE(r.tensor_degenerate);
    CHECK_FALSE(r.oplus_degenerate);

    CHECK_THROWS_AS(uncross(p, q, 0), NotMeetingPointError);
    CHECK_THROWS_AS(uncross(p, q, 3), NotMeetingPointError);
}

TEST_CASE("uncrossing nested pairs returns the originals") {
    Graph g(6);
    SetPair p = SetPair::make(g, NodeSet(6, {0}), NodeSet(6, {1, 2, 3}));
    SetPair q = SetPair::make(g, NodeSet(6, {0, 1, 2}), NodeSet(6, {3}));
    for (int u : meeting_points(p, q).members()) {
        UncrossResult r = uncross(p, q, u);
        SetPair a = SetPair::make(g, r.tensor.first, r.tensor.second);
        SetPair b = SetPair::make(g, r.oplus.first, r.oplus.second);
        bool same = (a == p && b == q) || (a == q && b == p);
        CHECK(same);
    }
}

TEST_CASE("at most two distinct uncross result pairs") {
    std::mt19937_64 rng(42);
    int tested = 0;
    while (tested < 200) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.2, rng);
        std::vector<SetPair> pairs = enumerate_deficient_setpairs(g, 2);
        if (pairs.size() < 2) continue;
        const SetPair& p = pairs[rng() % pairs.size()];
        const SetPair& q = pairs[rng() % pairs.size()];
        if (p == q) continue;
        NodeSet mp = meeting_points(p, q);
        if (mp.empty()) continue;
        std::vector<std::pair<SetPair, SetPair>> distinct;
        for (int u : mp.members()) {
            UncrossResult r = uncross(p, q, u);
            CHECK_FALSE(r.tensor_degenerate);
            CHECK_FALSE(r.oplus_degenerate);
            SetPair a = SetPair::make(g, r.tensor.first, r.tensor.second);
            SetPair b = SetPair::make(g, r.oplus.first, r.oplus.second);
            bool seen = false;
            for (auto& [x, y] : distinct)
                if (x == a && y == b) seen = true;
            if (!seen) distinct.emplace_back(a, b);
        }
        CHECK(distinct.size() <= 2);
        ++tested;
    }
}

TEST_CASE("tail and head") {
    Graph g(5, {Edge(1, 2)});
    SetPair p = SetPair::make(g, NodeSet(5, {0}), NodeSet(5, {2, 3, 4}));
    auto [tail, head] = tail_head(p);
    CHECK(tail == NodeSet(5, {0}));
    CHECK(head == NodeSet(5, {2, 3, 4}));
    CHECK((tail | head) == p.union_pieces());

    Graph h(4);
    SetPair q = SetPair::make(h, NodeSet(4, {2}), NodeSet(4, {0}));
    auto [t2, h2] = tail_head(q);
    CHECK(t2 == NodeSet(4, {0}));  // lexicographic tie-break
    CHECK(h2 == NodeSet(4, {2}));
}

TEST_CASE("set-pair invariants are enforced") {
    Graph g(4, {Edge(0, 1)});
    CHECK_THROWS_AS(SetPair::make(g, NodeSet(4), NodeSet(4, {1})), Error);
    CHECK_THROWS_AS(SetPair::make(g, NodeSet(4, {0}), NodeSet(4, {0, 2})), Error);
    CHECK_THROWS_AS(SetPair::make(g, NodeSet(4, {0}), NodeSet(4, {1})), Error);
    // unordered equality
    SetPair a = SetPair::make(g, NodeSet(4, {0}), NodeSet(4, {2}));
    SetPair b = SetPair::make(g, NodeSet(4, {2}), NodeSet(4, {0}));
    CHECK(a == b);
}
