#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diffscope/diversity.hpp"
#include "support/oracles.hpp"

using namespace diffscope;
using namespace diffscope::diversity;

namespace {

std::vector<std::string> labels_n(size_t n) {
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) out.push_back("L" + std::to_string(i));
    return out;
}

MassDistribution random_mass(size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    MassDistribution p;
    p.labels = labels_n(n);
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        p.p.push_back(u(rng));
        total += p.p.back();
    }
    for (auto& v : p.p) v /= total;
    return p;
}

DistanceMatrix random_distances(size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DistanceMatrix d;
    d.labels = labels_n(n);
    d.units = "dimensionless";
    d.d.assign(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) d.d[i][j] = d.d[j][i] = u(rng);
    return d;
}

GeoPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> lat(-90.0, 90.0), lon(-180.0, 180.0);
    return {lat(rng), lon(rng)};
}

}  // namespace

TEST_CASE("rao_stirling trivial cases") {
    MassDistribution single{{"ONLY"}, {1.0}};
    DistanceMatrix d1{{"ONLY"}, {{0.0}}, "dimensionless"};
    CHECK(rao_stirling(single, d1) == doctest::Approx(0.0));

    MassDistribution two{{"A", "B"}, {0.5, 0.5}};
    DistanceMatrix d2{{"A", "B"}, {{0.0, 1.0}, {1.0, 0.0}}, "dimensionless"};
    CHECK(rao_stirling(two, d2) == doctest::Approx(0.5));
}

TEST_CASE("rao_stirling rejects misaligned labels") {
    MassDistribution p{{"A", "B"}, {0.5, 0.5}};
    DistanceMatrix d{{"B", "A"}, {{0.0, 1.0}, {1.0, 0.0}}, "dimensionless"};
    CHECK_THROWS(rao_stirling(p, d));
}

TEST_CASE("rao_stirling matches the brute-force double loop") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_mass(10, rng);
        auto d = random_distances(10, rng);
        double expected = oracle::rao_stirling(p.p, d.d);
        CHECK(rao_stirling(p, d) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("uniform-distance reduction to the Gini-Simpson index") {
    std::mt19937_64 rng(7);
    for (double c : {1.0, 2.5, 700.0}) {
        auto p = random_mass(8, rng);
        DistanceMatrix d;
        d.labels = p.labels;
        d.d.assign(8, std::vector<double>(8, c));
        for (size_t i = 0; i < 8; ++i) d.d[i][i] = 0.0;
        double sum_sq = 0.0;
        for (double v : p.p) sum_sq += v * v;
        CHECK(rao_stirling(p, d) == doctest::Approx(c * (1.0 - sum_sq)).epsilon(1e-12));
    }
}

TEST_CASE("D is invariant under simultaneous label permutation") {
    std::mt19937_64 rng(55);
    auto p = random_mass(6, rng);
    auto d = random_distances(6, rng);
    double base = rao_stirling(p, d);

    std::vector<size_t> perm{3, 1, 5, 0, 4, 2};
    MassDistribution p2;
    DistanceMatrix d2;
    d2.units = d.units;
    d2.d.assign(6, std::vector<double>(6, 0.0));
    for (size_t i = 0; i < 6; ++i) {
        p2.labels.push_back(p.labels[perm[i]]);
        p2.p.push_back(p.p[perm[i]]);
        d2.labels.push_back(d.labels[perm[i]]);
        for (size_t j = 0; j < 6; ++j) d2.d[i][j] = d.d[perm[i]][perm[j]];
    }
    CHECK(rao_stirling(p2, d2) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("globalization trivial and oracle cases") {
    // all link mass on one pair 1000 km apart
    LinkDistribution links{{"A", "B"}, {{0.0, 0.5}, {0.5, 0.0}}};
    DistanceMatrix d{{"A", "B"}, {{0.0, 1000.0}, {1000.0, 0.0}}, "km"};
    CHECK(globalization(links, d) == doctest::Approx(1000.0));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 8;
        auto d8 = random_distances(n, rng);
        LinkDistribution p;
        p.labels = d8.labels;
        p.p.assign(n, std::vector<double>(n, 0.0));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double total = 0.0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                double w = u(rng);
                p.p[i][j] = p.p[j][i] = w;
                total += 2 * w;
            }
        for (auto& row : p.p)
            for (auto& v : row) v /= total;
        CHECK(globalization(p, d8) ==
              doctest::Approx(oracle::globalization(p.p, d8.d)).epsilon(1e-12));
    }
}

TEST_CASE("coherence ratio") {
    CHECK(*coherence(2.0, 2.0) == doctest::Approx(1.0));
    CHECK(*coherence(2.0, 0.0) == doctest::Approx(0.0));
    CHECK_FALSE(coherence(0.0, 1.0).has_value());
}

TEST_CASE("haversine fixed points") {
    CHECK(great_circle_km({12.0, 34.0}, {12.0, 34.0}) == doctest::Approx(0.0));
    // half and quarter circumference for R = 6371.0088
    const double half = std::numbers::pi * 6371.0088;
    CHECK(std::fabs(great_circle_km({0.0, 0.0}, {0.0, 180.0}) - half) <= 0.01);
    CHECK(std::fabs(great_circle_km({0.0, 0.0}, {0.0, 90.0}) - half / 2) <= 0.01);
}

TEST_CASE("haversine symmetry and triangle inequality") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 500; ++trial) {
        GeoPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
        double ab = great_circle_km(a, b);
        double ba = great_circle_km(b, a);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
        CHECK(ab <= great_circle_km(a, c) + great_circle_km(c, b) + 1e-9);
    }
}

TEST_CASE("cognitive distances from a cosine matrix") {
    std::vector<std::string> labels{"A", "B", "C"};
    std::vector<std::vector<double>> cosine{
        {1.0, 0.8, 0.0}, {0.8, 1.0, 0.3}, {0.0, 0.3, 1.0}};
    auto d = cognitive_distances(labels, cosine);
    CHECK(d.d[0][1] == doctest::Approx(0.2));
    CHECK(d.d[0][2] == doctest::Approx(1.0));
    CHECK(d.d[1][2] == doctest::Approx(0.7));
    CHECK(d.d[0][0] == 0.0);

    // identity similarity: all off-diagonal distances are 1
    std::vector<std::vector<double>> eye{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto de = cognitive_distances(labels, eye);
    CHECK(de.d[0][1] == doctest::Approx(1.0));
    CHECK(de.d[2][1] == doctest::Approx(1.0));
}

TEST_CASE("cognitive distances validate the input") {
    std::vector<std::string> labels{"A", "B"};
    CHECK_THROWS(cognitive_distances(labels, {{1.0, 0.2}, {0.3, 1.0}}));  // asymmetric
    CHECK_THROWS(cognitive_distances(labels, {{1.0, 1.2}, {1.2, 1.0}}));  // out of range
    CHECK_THROWS(cognitive_distances(labels, {{0.9, 0.2}, {0.2, 1.0}}));  // diagonal
}

TEST_CASE("category mass with whole counting") {
    PublicationRecord rec;
    rec.year = 2001;
    rec.categories = {"X", "Y"};
    auto p = category_mass({rec}, {"X", "Y", "Z"});
    REQUIRE(p.labels.size() == 3);
    CHECK(p.p[0] == doctest::Approx(0.5));
    CHECK(p.p[1] == doctest::Approx(0.5));
    CHECK(p.p[2] == doctest::Approx(0.0));

    PublicationRecord only_x = rec;
    only_x.categories = {"X"};
    auto px = category_mass({only_x, only_x}, {"X", "Y"});
    CHECK(px.p[0] == doctest::Approx(1.0));

    PublicationRecord none = rec;
    none.categories = {};
    CHECK(category_mass({none}, {"X", "Y"}).labels.empty());
}

TEST_CASE("link mass over a small network") {
    net::CityYearNetwork net;
    net.year = 2000;
    net.nodes = {{{"A", "X"}, 2, GeoPoint{0, 0}},
                 {{"B", "X"}, 2, GeoPoint{0, 1}},
                 {{"C", "X"}, 3, GeoPoint{1, 0}}};
    net.edges = {{0, 1, 1}, {1, 2, 3}};
    auto links = link_mass(net);
    REQUIRE(links.labels.size() == 3);
    // unordered masses 0.25 and 0.75 split over both ordered pairs
    CHECK(links.p[0][1] == doctest::Approx(0.125));
    CHECK(links.p[1][0] == doctest::Approx(0.125));
    CHECK(links.p[1][2] == doctest::Approx(0.375));
    double total = 0.0;
    for (const auto& row : links.p)
        for (double v : row) total += v;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("link mass skips edges touching ungeocoded cities") {
    net::CityYearNetwork net;
    net.year = 2000;
    net.nodes = {{{"A", "X"}, 2, GeoPoint{0, 0}},
                 {{"B", "X"}, 2, std::nullopt},
                 {{"C", "X"}, 3, GeoPoint{1, 0}}};
    net.edges = {{0, 1, 5}, {0, 2, 1}};
    auto links = link_mass(net);
    REQUIRE(links.labels.size() == 2);
    CHECK(links.p[0][1] == doctest::Approx(0.5));
}

TEST_CASE("city paper mass and geographic distances share the node universe") {
    net::CityYearNetwork net;
    net.year = 2000;
    net.nodes = {{{"A", "X"}, 2, GeoPoint{0, 0}},
                 {{"B", "X"}, 2, std::nullopt},
                 {{"C", "X"}, 6, GeoPoint{0, 90}}};
    net.edges = {{0, 2, 2}};
    auto mass = city_paper_mass(net);
    auto dist = geographic_distances(net);
    CHECK(mass.labels == dist.labels);
    REQUIRE(mass.labels.size() == 2);
    CHECK(mass.p[0] == doctest::Approx(0.25));
    CHECK(mass.p[1] == doctest::Approx(0.75));
    const double quarter = std::numbers::pi * 6371.0088 / 2;
    CHECK(std::fabs(dist.d[0][1] - quarter) <= 0.01);

    auto links = link_mass(net);
    double c_val = globalization(links, dist);
    double d_val = rao_stirling(mass, dist);
    CHECK(c_val == doctest::Approx(quarter).epsilon(1e-6));
    CHECK(*coherence(d_val, c_val) > 0.0);
}
