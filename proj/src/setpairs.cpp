#include "kaug/setpairs.hpp"

#include "kaug/errors.hpp"

namespace kaug {

SetPair::SetPair(NodeSet a, NodeSet b) : p0_(std::move(a)), p1_(std::move(b)) {
    if (!NodeSet::lex_less(p0_, p1_)) std::swap(p0_, p1_);
}

SetPair SetPair::make(const Graph& g, const NodeSet& a, const NodeSet& b) {
    if (a.universe() != g.node_count() || b.universe() != g.node_count())
        throw Error("set-pair pieces must live on the graph's node set");
    if (a.empty() || b.empty()) throw Error("set-pair pieces must be nonempty");
    if (a.intersects(b)) throw Error("set-pair pieces must be disjoint");
    if (g.neighbors(a).intersects(b)) throw Error("set-pair pieces joined by an edge");
    return SetPair(a, b);
}

bool SetPair::lex_less(const SetPair& a, const SetPair& b) {
    if (a.p0_ != b.p0_) return NodeSet::lex_less(a.p0_, b.p0_);
    return NodeSet::lex_less(a.p1_, b.p1_);
}

std::string SetPair::to_string() const {
    return "(" + p0_.to_string() + "," + p1_.to_string() + ")";
}

int deficiency(int k, const SetPair& P) {
    int outside = P.universe() - P.union_pieces().size();
    return outside >= k ? 0 : k - outside;
}

bool covers(const Edge& e, const SetPair& P) {
    return (P.piece(0).contains(e.u) && P.piece(1).contains(e.v)) ||
           (P.piece(0).contains(e.v) && P.piece(1).contains(e.u));
}

int coverage_count(const std::vector<Edge>& F, const SetPair& P) {
    int c = 0;
    for (const Edge& e : F)
        if (covers(e, P)) ++c;
    return c;
}

SetPair from_deficient_set(const Graph& g, int k, const NodeSet& U) {
    if (!is_deficient_set(g, k, U))
        throw NotDeficientError("from_deficient_set: " + U.to_string() + " is not deficient");
    return SetPair::make(g, U, g.outside(U));
}

PairRelation classify(const SetPair& P, const SetPair& Q) {
    // Independent: some piece of one is disjoint from both pieces of the other.
    NodeSet qu = Q.union_pieces();
    NodeSet pu = P.union_pieces();
    for (int i = 0; i < 2; ++i) {
        if (!P.piece(i).intersects(qu)) return {Relation::Independent};
        if (!Q.piece(i).intersects(pu)) return {Relation::Independent};
    }
    // Nested: Ui ⊇ W(1−j) and Wj ⊇ U(1−i) for some i, j.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (Q.piece(1 - j).is_subset_of(P.piece(i)) && P.piece(1 - i).is_subset_of(Q.piece(j)))
                return {Relation::Nested, i, j};
    return {Relation::Crossing};
}

NodeSet meeting_points(const SetPair& P, const SetPair& Q) {
    NodeSet out(P.universe());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NodeSet cell = P.piece(i) & Q.piece(j);
            if (cell.empty()) continue;
            if (!(P.piece(1 - i) & Q.piece(1 - j)).empty()) out |= cell;
        }
    return out;
}

UncrossResult uncross(const SetPair& P, const SetPair& Q, int u) {
    int i = P.piece(0).contains(u) ? 0 : P.piece(1).contains(u) ? 1 : -1;
    int j = Q.piece(0).contains(u) ? 0 : Q.piece(1).contains(u) ? 1 : -1;
    if (i < 0 || j < 0 || (P.piece(1 - i) & Q.piece(1 - j)).empty())
        throw NotMeetingPointError("uncross: " + std::to_string(u) + " is not a meeting point");
    UncrossResult r{
        {P.piece(i) | Q.piece(j), P.piece(1 - i) & Q.piece(1 - j)},
        {P.piece(i) & Q.piece(j), P.piece(1 - i) | Q.piece(1 - j)},
        false,
        false,
    };
    r.tensor_degenerate = r.tensor.first.empty() || r.tensor.second.empty();
    r.oplus_degenerate = r.oplus.first.empty() || r.oplus.second.empty();
    return r;
}

std::pair<NodeSet, NodeSet> tail_head(const SetPair& P) {
    const NodeSet& a = P.piece(0);
    const NodeSet& b = P.piece(1);
    if (a.size() != b.size()) return a.size() < b.size() ? std::pair{a, b} : std::pair{b, a};
    return {a, b};  // piece(0) is the lexicographically smaller one
}

}  // namespace kaug
