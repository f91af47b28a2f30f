#ifndef KAUG_INSTANCE_HPP
#define KAUG_INSTANCE_HPP

#include "kaug/costs.hpp"
#include "kaug/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kaug {

/// One augmentation problem: base graph, target connectivity, edge costs.
struct Instance {
    Graph graph;
    int k;
    CostFunction costs;
    std::string name;
    std::uint64_t seed = 0;
};

// Text format:
//   kaug 1
//   n <int> k <int>
//   e <u> <v>            one line per base edge
//   c <u> <v> <num>/<den>  one line per purchasable edge
// Pairs on neither list are non-purchasable. Lines starting with '#' are
// ignored on read; the writer emits one carrying name/seed when present.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

struct Solution {
    std::vector<Edge> edges;
    Rational cost;
    int k;
    bool connected;
};

// Lines: `f <u> <v>` per edge, then `cost <num>/<den>`, then
// `connected <k> true|false`.
void write_solution(std::ostream& out, const Solution& sol);
Solution read_solution(std::istream& in);

}  // namespace kaug

#endif
