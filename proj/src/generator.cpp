#include "kaug/generator.hpp"

#include "kaug/errors.hpp"

#include <random>
#include <sstream>

namespace kaug {

Instance gen_random(int n, int k, double density, int cost_lo, int cost_hi, std::uint64_t seed) {
    if (n < k + 1) throw Error("gen_random: need n >= k+1");
    if (density < 0.0 || density > 1.0) throw Error("gen_random: density must be in [0,1]");
    if (cost_lo < 0 || cost_hi < cost_lo) throw Error("gen_random: bad cost range");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> cost(cost_lo, cost_hi);

    Instance inst{Graph(n), k, {}, "", seed};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < density) inst.graph.add_edge(u, v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!inst.graph.has_edge(u, v)) inst.costs.set(Edge(u, v), Rational(cost(rng)));

    std::ostringstream name;
    name << "rnd-n" << n << "-k" << k << "-s" << seed;
    inst.name = name.str();
    return inst;
}

}  // namespace kaug
