#ifndef KAUG_PIPELINE_HPP
#define KAUG_PIPELINE_HPP

#include "kaug/costs.hpp"
#include "kaug/graph.hpp"
#include "kaug/rounding.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <tuple>
#include <vector>

namespace kaug {

enum class PipelineMode { Guaranteed, BestEffort };
enum class PipelineBranch { SmallN, LargeN };
enum class PipelineStatus { Solved, SolvedByOracle, Failed };

struct PipelineOptions {
    PipelineMode mode = PipelineMode::Guaranteed;
    std::uint64_t seed = 0;  // 0: lexicographic terminal choice
    std::optional<NodeSet> r0;
    std::optional<PipelineBranch> force_branch;
    std::ostream* trace = nullptr;
    bool certificates = true;
    /// Rounder seam; defaults to iterative_round. Harness/tests may inject.
    std::function<RoundingOutcome(const Graph&, int, const CostFunction&, const RoundingOptions&)>
        rounder;
};

struct PhaseEdges {
    std::vector<Edge> edges;
    Rational cost{0};
};

struct PipelineReport {
    int n = 0;
    int k = 0;
    PipelineMode mode = PipelineMode::Guaranteed;
    PipelineBranch branch = PipelineBranch::SmallN;
    PipelineStatus status = PipelineStatus::Solved;
    bool guarantee_applies = false;  // Guaranteed mode within the regime
    int restarts = 0;
    PhaseEdges f0, f1, f2;
    Rational total_cost{0};
    bool connected = false;
    NodeSet forbidden_final;  // final S (small-n) or B (large-n)
    /// Min-cut value per nonadjacent pair of the final graph.
    std::vector<std::tuple<int, int, int>> cut_certificates;

    std::vector<Edge> all_edges() const;
};

/// Two rooted-outconnectivity phases, then iterative rounding; cost of the
/// three phases is at most 6x the optimum when n >= k^3(k-1)+k.
/// Throws InfeasibleError, RegimeViolationError (Guaranteed below regime),
/// RestartBudgetError (exceeding the restart bound indicates a solver bug).
PipelineReport augment(const Graph& g, int k, const CostFunction& c,
                       const PipelineOptions& opt = {});

struct VerifyReport {
    bool k_connected;
    std::optional<NodeSet> deficient_witness;  // when not k-connected
    Rational cost{0};
    std::vector<Edge> invalid_edges;           // in F but neither candidate nor base edge
    std::optional<Rational> lp_lower_bound;
    std::optional<Rational> exact_optimum;     // within oracle budget only
};

VerifyReport verify(const Graph& g, int k, const std::vector<Edge>& F, const CostFunction& c,
                    int oracle_candidate_budget = 25);

void serialize_report(std::ostream& out, const PipelineReport& rep);

int small_n_threshold(int k);  // k^3(k-1) + k
int large_n_threshold(int k);  // k^4(k-1) + k
int restart_budget(int k);     // k^3(k-1) - k

}  // namespace kaug

#endif
