#include "diffscope/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace diffscope::diversity {
namespace {

constexpr double kEarthRadiusKm = 6371.0088;

void check_alignment(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a != b) throw std::invalid_argument("label lists are not aligned");
}

/// Geocoded node indices of a network, in node (CityKey) order.
std::vector<size_t> geocoded_nodes(const net::CityYearNetwork& net) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < net.nodes.size(); ++i)
        if (net.nodes[i].coord) idx.push_back(i);
    return idx;
}

}  // namespace

double rao_stirling(const MassDistribution& p, const DistanceMatrix& d) {
    check_alignment(p.labels, d.labels);
    size_t n = p.labels.size();
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) sum += p.p[i] * p.p[j] * d.at(i, j);
    return sum;
}

double globalization(const LinkDistribution& p, const DistanceMatrix& d) {
    check_alignment(p.labels, d.labels);
    size_t n = p.labels.size();
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) sum += p.p[i][j] * d.at(i, j);
    return sum;
}

std::optional<double> coherence(double d_value, double c_value) {
    if (d_value <= 0.0) return std::nullopt;
    return c_value / d_value;
}

double great_circle_km(GeoPoint a, GeoPoint b) {
    constexpr double deg = std::numbers::pi / 180.0;
    double phi1 = a.lat * deg, phi2 = b.lat * deg;
    double dphi = (b.lat - a.lat) * deg;
    double dlambda = (b.lon - a.lon) * deg;
    double s = std::sin(dphi / 2);
    double t = std::sin(dlambda / 2);
    double h = s * s + std::cos(phi1) * std::cos(phi2) * t * t;
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

DistanceMatrix cognitive_distances(const std::vector<std::string>& labels,
                                   const std::vector<std::vector<double>>& cosine) {
    size_t n = labels.size();
    if (cosine.size() != n)
        throw std::invalid_argument("cosine matrix size does not match labels");
    for (size_t i = 0; i < n; ++i) {
        if (cosine[i].size() != n)
            throw std::invalid_argument("cosine matrix is not square");
        if (cosine[i][i] != 1.0)
            throw std::invalid_argument("cosine diagonal must be 1");
        for (size_t j = 0; j < n; ++j) {
            if (cosine[i][j] < 0.0 || cosine[i][j] > 1.0)
                throw std::invalid_argument("cosine entries must lie in [0,1]");
            if (cosine[i][j] != cosine[j][i])
                throw std::invalid_argument("cosine matrix must be symmetric");
        }
    }
    DistanceMatrix out;
    out.labels = labels;
    out.units = "dimensionless";
    out.d.assign(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) out.d[i][j] = 1.0 - cosine[i][j];
    return out;
}

MassDistribution category_mass(const std::vector<PublicationRecord>& records,
                               const std::vector<std::string>& categories) {
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < categories.size(); ++i) index[categories[i]] = i;

    std::vector<double> counts(categories.size(), 0.0);
    double total = 0.0;
    for (const auto& rec : records) {
        for (const auto& cat : rec.categories) {
            auto it = index.find(cat);
            if (it == index.end()) continue;
            counts[it->second] += 1.0;  // counted in every attributed category
            total += 1.0;
        }
    }
    MassDistribution out;
    if (total == 0.0) return out;
    out.labels = categories;
    out.p.resize(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) out.p[i] = counts[i] / total;
    return out;
}

LinkDistribution link_mass(const net::CityYearNetwork& net) {
    auto idx = geocoded_nodes(net);
    std::vector<int> pos(net.nodes.size(), -1);
    for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);

    LinkDistribution out;
    for (size_t i : idx) out.labels.push_back(net.nodes[i].key.label());
    size_t n = idx.size();
    out.p.assign(n, std::vector<double>(n, 0.0));

    double total = 0.0;
    for (const auto& e : net.edges) {
        int a = pos[static_cast<size_t>(e.a)];
        int b = pos[static_cast<size_t>(e.b)];
        if (a < 0 || b < 0) continue;  // edge touching an ungeocoded city
        total += 2.0 * e.weight;       // both ordered pairs
    }
    if (total == 0.0) {
        out.labels.clear();
        out.p.clear();
        return out;
    }
    for (const auto& e : net.edges) {
        int a = pos[static_cast<size_t>(e.a)];
        int b = pos[static_cast<size_t>(e.b)];
        if (a < 0 || b < 0) continue;
        double mass = e.weight / total;
        out.p[static_cast<size_t>(a)][static_cast<size_t>(b)] += mass;
        out.p[static_cast<size_t>(b)][static_cast<size_t>(a)] += mass;
    }
    return out;
}

MassDistribution city_paper_mass(const net::CityYearNetwork& net) {
    auto idx = geocoded_nodes(net);
    MassDistribution out;
    double total = 0.0;
    for (size_t i : idx) total += net.nodes[i].papers;
    if (total == 0.0) return out;
    for (size_t i : idx) {
        out.labels.push_back(net.nodes[i].key.label());
        out.p.push_back(net.nodes[i].papers / total);
    }
    return out;
}

DistanceMatrix geographic_distances(const net::CityYearNetwork& net) {
    auto idx = geocoded_nodes(net);
    DistanceMatrix out;
    out.units = "km";
    for (size_t i : idx) out.labels.push_back(net.nodes[i].key.label());
    size_t n = idx.size();
    out.d.assign(n, std::vector<double>(n, 0.0));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            double km = great_circle_km(*net.nodes[idx[a]].coord, *net.nodes[idx[b]].coord);
            out.d[a][b] = km;
            out.d[b][a] = km;
        }
    return out;
}

}  // namespace diffscope::diversity
