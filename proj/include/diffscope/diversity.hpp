#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffscope/network.hpp"
#include "diffscope/types.hpp"

namespace diffscope::diversity {

/// Square symmetric distance matrix over labeled items. units is
/// documentation only ("dimensionless" or "km").
struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> d;
    std::string units;

    double at(size_t i, size_t j) const { return d[i][j]; }
    size_t size() const { return labels.size(); }
};

struct MassDistribution {
    std::vector<std::string> labels;
    std::vector<double> p;  // p_i >= 0, sums to 1 when non-empty
};

struct LinkDistribution {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> p;  // symmetric, zero diagonal, ordered pairs sum to 1
};

/// D = sum over ordered pairs i != j of p_i * p_j * d_ij.
double rao_stirling(const MassDistribution& p, const DistanceMatrix& d);

/// C = sum over ordered pairs i != j of p_ij * d_ij.
double globalization(const LinkDistribution& p, const DistanceMatrix& d);

/// C / D; nullopt when D is 0.
std::optional<double> coherence(double d_value, double c_value);

/// Haversine great-circle distance, mean Earth radius 6371.0088 km.
double great_circle_km(GeoPoint a, GeoPoint b);

/// d_ij = 1 - cosine_ij. Validates symmetry, [0,1] range, unit diagonal.
DistanceMatrix cognitive_distances(const std::vector<std::string>& labels,
                                   const std::vector<std::vector<double>>& cosine);

/// Whole counting: every record adds +1 to each of its categories present in
/// `categories`; p normalized over the grand total of matched assignments.
/// Empty when no record matches.
MassDistribution category_mass(const std::vector<PublicationRecord>& records,
                               const std::vector<std::string>& categories);

/// Relative link frequencies over the geocoded cities of a network,
/// proportional to edge weight; each unordered edge feeds both (i,j) and
/// (j,i). labels follow node order.
LinkDistribution link_mass(const net::CityYearNetwork& net);

/// Per-city paper-count mass over the same geocoded node universe as
/// link_mass (the expected-collaboration side).
MassDistribution city_paper_mass(const net::CityYearNetwork& net);

/// Kilometer matrix over the geocoded cities of a network, node order.
DistanceMatrix geographic_distances(const net::CityYearNetwork& net);

}  // namespace diffscope::diversity
