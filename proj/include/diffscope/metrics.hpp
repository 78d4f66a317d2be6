#pragma once

#include <map>
#include <optional>
#include <vector>

#include "diffscope/graph.hpp"
#include "diffscope/network.hpp"

namespace diffscope::metrics {

struct NetworkMetrics {
    int n = 0;
    size_t m = 0;
    std::optional<double> density;
    std::optional<double> z;
    std::optional<double> cc;
    std::optional<double> d_mean;
    std::optional<double> largest_component_fraction;
};

/// Average of local clustering coefficients over all nodes; degree-<2 nodes
/// contribute 0. Weights ignored.
double clustering_coefficient(const UndirectedGraph& g);

/// Mean unweighted shortest-path length over all unordered pairs inside the
/// largest connected component. nullopt when that component has < 2 nodes.
std::optional<double> mean_distance(const UndirectedGraph& g);

struct ComponentResult {
    std::vector<int> nodes;  // sorted ascending
    double fraction = 0.0;
};

/// Maximum-cardinality component; ties broken by smallest contained vertex
/// index (node order is CityKey order in CityYearNetwork graphs).
ComponentResult largest_component(const UndirectedGraph& g);

std::map<int, int> degree_histogram(const UndirectedGraph& g);

NetworkMetrics compute_metrics(const net::CityYearNetwork& net);

}  // namespace diffscope::metrics
