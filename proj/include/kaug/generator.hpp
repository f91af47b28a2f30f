#ifndef KAUG_GENERATOR_HPP
#define KAUG_GENERATOR_HPP

#include "kaug/instance.hpp"

#include <cstdint>

namespace kaug {

/// Reproducible random instance: simple base graph with the given edge
/// density, every non-edge purchasable at an integer cost drawn uniformly
/// from [cost_lo, cost_hi].
Instance gen_random(int n, int k, double density, int cost_lo, int cost_hi, std::uint64_t seed);

}  // namespace kaug

#endif
