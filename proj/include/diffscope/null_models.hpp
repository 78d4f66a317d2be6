#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "diffscope/graph.hpp"

namespace diffscope::nullmodel {

struct AnalyticBaseline {
    double cc_rg = 0.0;
    std::optional<double> d_rg;  // nullopt when z <= 1 (log(z) degenerate)
};

/// cc_rg = z/n; d_rg = ln(n)/ln(z) for z > 1.
AnalyticBaseline analytic_baseline(int n, double z);

struct SimulatedBaseline {
    std::optional<double> cc_rg_sim;
    std::optional<double> d_rg_sim;
    int runs = 0;
    int runs_without_distance = 0;  // largest component < 2 nodes
};

/// Means of cc and d_mean over `runs` uniform G(n, m) graphs. Each run's
/// generator is seeded from (seed, run index), so results are independent of
/// scheduling order.
SimulatedBaseline simulate_baseline(int n, size_t m, int runs, uint64_t seed);

/// W = (cc / cc_rg) / (d / d_rg); nullopt when any input is undefined or <= 0.
std::optional<double> walsh_ratio(std::optional<double> cc,
                                  std::optional<double> d_mean,
                                  std::optional<double> cc_rg,
                                  std::optional<double> d_rg);

/// Uniform random graph with exactly m edges sampled without replacement.
UndirectedGraph random_gnm(int n, size_t m, std::mt19937_64& rng);

}  // namespace diffscope::nullmodel
