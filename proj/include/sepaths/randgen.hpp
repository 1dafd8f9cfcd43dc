#pragma once

#include "sepaths/graph.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

// Binomial random graph G(n,p); each pair independently, geometric skipping.
Graph gnp(int n, double p, RngSeed seed);

// Simple d-regular graph by stub pairing with local rejection of loops and
// repeated pairs. Throws InvalidInput on n*d odd or d >= n, BudgetExhausted
// after max_restarts stuck pairings.
Graph random_regular(int n, int d, RngSeed seed, int max_restarts = 1000);

}  // namespace sepaths
