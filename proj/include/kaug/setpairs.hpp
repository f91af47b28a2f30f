#ifndef KAUG_SETPAIRS_HPP
#define KAUG_SETPAIRS_HPP

#include "kaug/graph.hpp"
#include "kaug/nodeset.hpp"

#include <utility>
#include <vector>

namespace kaug {

/// Unordered pair of disjoint, nonempty node sets with no graph edge between
/// them. Stored canonically: piece(0) lexicographically below piece(1).
class SetPair {
public:
    /// Validates the invariants against g; throws Error when violated.
    static SetPair make(const Graph& g, const NodeSet& a, const NodeSet& b);

    const NodeSet& piece(int i) const { return i == 0 ? p0_ : p1_; }
    int universe() const { return p0_.universe(); }

    /// Γ of the pair: V − (p0 ∪ p1).
    NodeSet boundary() const { return (p0_ | p1_).complement(); }
    NodeSet union_pieces() const { return p0_ | p1_; }

    bool operator==(const SetPair& o) const { return p0_ == o.p0_ && p1_ == o.p1_; }
    bool operator!=(const SetPair& o) const { return !(*this == o); }
    static bool lex_less(const SetPair& a, const SetPair& b);

    std::string to_string() const;

private:
    SetPair(NodeSet a, NodeSet b);
    NodeSet p0_, p1_;
};

/// p(U) = max{0, k − |V − (U0 ∪ U1)|}; positive means the pair is deficient.
int deficiency(int k, const SetPair& P);

/// True iff the endpoints of e lie in distinct pieces.
bool covers(const Edge& e, const SetPair& P);

/// d_F: number of edges of F covering P.
int coverage_count(const std::vector<Edge>& F, const SetPair& P);

/// (U, U*) for a deficient set U; throws NotDeficientError otherwise.
SetPair from_deficient_set(const Graph& g, int k, const NodeSet& U);

enum class Relation { Independent, Nested, Crossing };

struct PairRelation {
    Relation kind;
    // For Nested: the dominant piece index of each pair (P's, then Q's).
    int dominant_p = -1;
    int dominant_q = -1;
};

PairRelation classify(const SetPair& P, const SetPair& Q);

/// Nodes u such that some edge of the complete graph covers both P and Q
/// with u as an endpoint; nonempty iff P and Q are non-independent.
NodeSet meeting_points(const SetPair& P, const SetPair& Q);

/// Raw uncrossing results at meeting point u; callers validate as SetPair.
struct UncrossResult {
    std::pair<NodeSet, NodeSet> tensor;  // (Ui ∪ Wj, U1−i ∩ W1−j)
    std::pair<NodeSet, NodeSet> oplus;   // (Ui ∩ Wj, U1−i ∪ W1−j)
    bool tensor_degenerate;              // an empty piece
    bool oplus_degenerate;
};

/// Throws NotMeetingPointError when u is not a meeting point of P and Q.
UncrossResult uncross(const SetPair& P, const SetPair& Q, int u);

/// Tail = strictly smaller piece; equal sizes break to the lexicographically
/// smaller piece. Head is the other piece.
std::pair<NodeSet, NodeSet> tail_head(const SetPair& P);

}  // namespace kaug

#endif
