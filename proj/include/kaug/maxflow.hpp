#ifndef KAUG_MAXFLOW_HPP
#define KAUG_MAXFLOW_HPP

#include "kaug/errors.hpp"

#include <optional>
#include <queue>
#include <vector>

namespace kaug {

/// Dinic max-flow over an exact capacity type (int64 or Rational).
/// Arcs may be unbounded; an all-unbounded augmenting path is an error.
template <class Cap>
class FlowNetwork {
public:
    struct Arc {
        int to;
        Cap cap;        // ignored when unbounded
        Cap flow;
        bool unbounded;
        int rev;        // index of reverse arc in g_[to]
    };

    explicit FlowNetwork(int nodes = 0) : g_(nodes) {}

    int add_node() {
        g_.emplace_back();
        return static_cast<int>(g_.size()) - 1;
    }

    int node_count() const { return static_cast<int>(g_.size()); }

    void add_arc(int from, int to, Cap cap, bool unbounded = false) {
        Arc fwd{to, cap, Cap(0), unbounded, static_cast<int>(g_[to].size())};
        Arc bwd{from, Cap(0), Cap(0), false, static_cast<int>(g_[from].size())};
        g_[from].push_back(fwd);
        g_[to].push_back(bwd);
    }

    /// Computes max flow from s to t, or stops once `limit` is reached.
    Cap max_flow(int s, int t, std::optional<Cap> limit = std::nullopt) {
        Cap total(0);
        while (!limit || total < *limit) {
            if (!bfs_levels(s, t)) break;
            iter_.assign(g_.size(), 0);
            while (true) {
                std::optional<Cap> want;
                if (limit) want = *limit - total;
                Cap pushed = dfs_push(s, t, want);
                if (pushed == 0) break;
                total += pushed;
                if (limit && total >= *limit) break;
            }
        }
        return total;
    }

    /// Residual-reachable set from s (inclusion-minimal min-cut source side).
    std::vector<char> source_side_min(int s) const {
        std::vector<char> seen(g_.size(), 0);
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : g_[v]) {
                if (!seen[a.to] && residual_positive(a)) {
                    seen[a.to] = 1;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }

    /// Complement of the can-reach-t set (inclusion-maximal min-cut source side).
    std::vector<char> source_side_max(int t) const {
        std::vector<char> reaches(g_.size(), 0);
        std::queue<int> q;
        reaches[t] = 1;
        q.push(t);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            // x reaches v if some residual arc x->v exists; scan reverse arcs.
            for (const Arc& a : g_[v]) {
                const Arc& fwd = g_[a.to][a.rev];  // arc a.to -> v
                if (!reaches[a.to] && residual_positive(fwd)) {
                    reaches[a.to] = 1;
                    q.push(a.to);
                }
            }
        }
        std::vector<char> side(g_.size());
        for (size_t i = 0; i < g_.size(); ++i) side[i] = reaches[i] ? 0 : 1;
        return side;
    }

    const std::vector<Arc>& arcs_from(int v) const { return g_[v]; }

private:
    std::vector<std::vector<Arc>> g_;
    std::vector<int> level_;
    std::vector<size_t> iter_;

    bool residual_positive(const Arc& a) const {
        if (a.unbounded) return true;
        return a.cap - a.flow > 0;
    }

    bool bfs_levels(int s, int t) {
        level_.assign(g_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : g_[v]) {
                if (level_[a.to] < 0 && residual_positive(a)) {
                    level_[a.to] = level_[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    // Sends at most `want` (if set) along one augmenting path; 0 when stuck.
    Cap dfs_push(int v, int t, std::optional<Cap> want) {
        if (v == t) {
            if (!want) throw Error("unbounded flow: augmenting path has no finite arc");
            return *want;
        }
        for (size_t& i = iter_[v]; i < g_[v].size(); ++i) {
            Arc& a = g_[v][i];
            if (level_[a.to] != level_[v] + 1 || !residual_positive(a)) continue;
            std::optional<Cap> down = want;
            if (!a.unbounded) {
                Cap res = a.cap - a.flow;
                if (!down || res < *down) down = res;
            }
            Cap got = dfs_push(a.to, t, down);
            if (got > 0) {
                a.flow += got;
                g_[a.to][a.rev].flow -= got;
                return got;
            }
        }
        return Cap(0);
    }
};

/// Vertex-split view over a FlowNetwork: every node v becomes v_in -> v_out
/// with capacity 1, terminals uncapacitated.
template <class Cap>
struct SplitNetwork {
    FlowNetwork<Cap> net;
    int n;

    SplitNetwork(int n_, int terminal_a, int terminal_b) : net(2 * n_), n(n_) {
        for (int v = 0; v < n; ++v) {
            bool terminal = v == terminal_a || v == terminal_b;
            net.add_arc(in(v), out(v), Cap(1), terminal);
        }
    }

    int in(int v) const { return v; }
    int out(int v) const { return n + v; }
};

}  // namespace kaug

#endif
