#include "kaug/errors.hpp"
#include "kaug/generator.hpp"
#include "kaug/harness.hpp"
#include "kaug/instance.hpp"
#include "kaug/lp.hpp"
#include "kaug/oracle.hpp"
#include "kaug/outconnect.hpp"
#include "kaug/pipeline.hpp"
#include "kaug/rounding.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace kaug;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitRegime = 3;

Instance load(const std::string& path, int k_override) {
    Instance inst = read_instance_file(path);
    if (k_override > 0) inst.k = k_override;
    return inst;
}

NodeSet parse_terminals(const std::string& spec, int n) {
    NodeSet R(n);
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        R.add(std::stoi(tok));
    }
    return R;
}

int cmd_solve(const std::string& path, int k_override, const std::string& mode,
              std::uint64_t seed, bool trace, const std::string& out_path) {
    Instance inst = load(path, k_override);
    PipelineOptions opt;
    opt.mode = mode == "best-effort" ? PipelineMode::BestEffort : PipelineMode::Guaranteed;
    opt.seed = seed;
    if (trace) opt.trace = &std::cerr;
    PipelineReport rep = augment(inst.graph, inst.k, inst.costs, opt);
    serialize_report(std::cout, rep);
    Solution sol{rep.all_edges(), rep.total_cost, inst.k, rep.connected};
    std::sort(sol.edges.begin(), sol.edges.end());
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open " + out_path);
        write_solution(out, sol);
    }
    if (rep.status == PipelineStatus::Failed) return kExitInfeasible;
    return kExitOk;
}

int cmd_exact(const std::string& path, int k_override, int max_candidates) {
    Instance inst = load(path, k_override);
    OracleBudget budget;
    if (max_candidates > 0) budget.max_candidates = max_candidates;
    OracleResult res = exact_opt(inst, budget);
    if (!res.feasible) {
        std::cout << "infeasible\n";
        return kExitInfeasible;
    }
    std::cout << "cost " << frac_str(res.cost) << "\n";
    for (const Edge& e : res.edges) std::cout << "f " << e.u << " " << e.v << "\n";
    std::cout << "explored " << res.explored << "\n";
    return kExitOk;
}

int cmd_check(const std::string& path, int k_override, const std::string& solution_path) {
    Instance inst = load(path, k_override);
    Graph g = inst.graph;
    Rational cost(0);
    if (!solution_path.empty()) {
        std::ifstream in(solution_path);
        if (!in) throw Error("cannot open " + solution_path);
        Solution sol = read_solution(in);
        VerifyReport rep = verify(inst.graph, inst.k, sol.edges, inst.costs);
        std::cout << "connected " << inst.k << " " << (rep.k_connected ? "true" : "false") << "\n";
        std::cout << "cost " << frac_str(rep.cost) << "\n";
        for (const Edge& e : rep.invalid_edges)
            std::cout << "invalid " << e.u << " " << e.v << "\n";
        if (rep.deficient_witness)
            std::cout << "deficient " << rep.deficient_witness->to_string() << "\n";
        if (rep.lp_lower_bound) std::cout << "lp_bound " << frac_str(*rep.lp_lower_bound) << "\n";
        if (rep.exact_optimum) std::cout << "optimum " << frac_str(*rep.exact_optimum) << "\n";
        return rep.k_connected ? kExitOk : kExitInfeasible;
    }
    bool conn = is_k_connected(g, inst.k);
    std::cout << "connected " << inst.k << " " << (conn ? "true" : "false") << "\n";
    return conn ? kExitOk : kExitInfeasible;
}

int cmd_lp(const std::string& path, int k_override, const std::string& dump_path) {
    Instance inst = load(path, k_override);
    LpvcOptions opt;
    std::ofstream dump;
    if (!dump_path.empty()) {
        dump.open(dump_path);
        if (!dump) throw Error("cannot open " + dump_path);
        opt.dump = &dump;
    }
    LpvcResult res = solve_lpvc(inst.graph, inst.k, inst.costs, opt);
    std::cout << "objective " << frac_str(res.objective) << "\n";
    for (const auto& [e, v] : res.x.values)
        if (v > 0) std::cout << "x " << e.u << " " << e.v << " " << frac_str(v) << "\n";
    std::cout << "rows " << res.rows.size() << " rounds " << res.rounds << "\n";
    return kExitOk;
}

int cmd_rooted(const std::string& path, int k_override, const std::string& terminals) {
    Instance inst = load(path, k_override);
    NodeSet R(inst.graph.node_count());
    if (terminals.empty()) {
        for (int v = 0; v < inst.k; ++v) R.add(v);
    } else {
        R = parse_terminals(terminals, inst.graph.node_count());
    }
    RootedResult res = rooted(inst.graph, inst.costs, R, inst.k);
    std::cout << "cost " << frac_str(res.cost) << "\n";
    for (const Edge& e : res.edges) std::cout << "f " << e.u << " " << e.v << "\n";
    return kExitOk;
}

int cmd_gen(int n, int k, double density, int cost_lo, int cost_hi, std::uint64_t seed,
            const std::string& out_path) {
    Instance inst = gen_random(n, k, density, cost_lo, cost_hi, seed);
    if (out_path.empty())
        write_instance(std::cout, inst);
    else
        write_instance_file(out_path, inst);
    return kExitOk;
}

int cmd_harness(const std::string& suite, std::uint64_t seed, int count,
                const std::string& out_dir) {
    HarnessOptions opt;
    opt.seed = seed;
    opt.count = count;
    opt.out_dir = out_dir;
    std::vector<CheckLine> lines =
        suite == "all" ? run_acceptance(opt) : run_suite(suite, opt);
    bool all_pass = true;
    for (const CheckLine& line : lines) {
        std::cout << (line.pass ? "PASS" : "FAIL");
        if (line.criterion > 0) std::cout << " [" << line.criterion << "]";
        std::cout << " " << line.name << " — " << line.detail << "\n";
        all_pass = all_pass && line.pass;
    }
    return all_pass ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kaug — minimum-cost k-connectivity augmentation solver"};
    app.require_subcommand(1);

    std::string path, out_path, solution_path, dump_path, terminals, mode = "guaranteed";
    std::string suite, out_dir = ".";
    int k_override = 0, max_candidates = 0, count = 0;
    std::uint64_t seed = 0;
    bool trace = false;
    int n = 8, k = 2, cost_lo = 1, cost_hi = 9;
    double density = 0.3;

    auto* solve = app.add_subcommand("solve", "run the augmentation pipeline");
    solve->add_option("instance", path)->required();
    solve->add_option("--k", k_override, "override the instance's k");
    solve->add_option("--mode", mode)->check(CLI::IsMember({"guaranteed", "best-effort"}));
    solve->add_option("--seed", seed, "terminal-selection seed (0: lexicographic)");
    solve->add_flag("--trace", trace, "per-iteration trace on stderr");
    solve->add_option("-o,--output", out_path, "write the solution file here");

    auto* exact = app.add_subcommand("exact", "exact optimum by search");
    exact->add_option("instance", path)->required();
    exact->add_option("--k", k_override);
    exact->add_option("--budget", max_candidates, "candidate-edge budget");

    auto* check = app.add_subcommand("check", "verify k-connectivity");
    check->add_option("instance", path)->required();
    check->add_option("--k", k_override);
    check->add_option("--solution", solution_path, "check base graph + this solution");

    auto* lp = app.add_subcommand("lp", "basic optimum of the cut LP");
    lp->add_option("instance", path)->required();
    lp->add_option("--k", k_override);
    lp->add_option("--dump-lp", dump_path, "write the restricted LP to this file");

    auto* rooted_cmd = app.add_subcommand("rooted", "rooted outconnectivity phase");
    rooted_cmd->add_option("instance", path)->required();
    rooted_cmd->add_option("--k", k_override);
    rooted_cmd->add_option("--terminals", terminals, "comma-separated terminal list");

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--n", n)->required();
    gen->add_option("--k", k)->required();
    gen->add_option("--density", density);
    gen->add_option("--cost-min", cost_lo);
    gen->add_option("--cost-max", cost_hi);
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", out_path);

    auto* harness = app.add_subcommand("harness", "run a verification suite");
    harness->add_option("suite", suite, "suite name or 'all'")->required();
    harness->add_option("--seed", seed);
    harness->add_option("--count", count, "override the suite's instance count");
    harness->add_option("--out-dir", out_dir, "where to dump counterexamples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return cmd_solve(path, k_override, mode, seed, trace, out_path);
        if (*exact) return cmd_exact(path, k_override, max_candidates);
        if (*check) return cmd_check(path, k_override, solution_path);
        if (*lp) return cmd_lp(path, k_override, dump_path);
        if (*rooted_cmd) return cmd_rooted(path, k_override, terminals);
        if (*gen) return cmd_gen(n, k, density, cost_lo, cost_hi, seed, out_path);
        if (*harness) return cmd_harness(suite, seed == 0 ? 1 : seed, count, out_dir);
    } catch (const kaug::RegimeViolationError& e) {
        std::cerr << "regime violation: " << e.what() << "\n";
        return kExitRegime;
    } catch (const kaug::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const kaug::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
