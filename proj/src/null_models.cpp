#include "diffscope/null_models.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "diffscope/metrics.hpp"

namespace diffscope::nullmodel {
namespace {

uint64_t encode_pair(int a, int b, int n) {
    return static_cast<uint64_t>(a) * static_cast<uint64_t>(n) + static_cast<uint64_t>(b);
}

// Distinct unordered pairs, uniform without replacement, by rejection.
std::unordered_set<uint64_t> sample_pairs(int n, size_t count, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::unordered_set<uint64_t> chosen;
    chosen.reserve(count * 2);
    while (chosen.size() < count) {
        int a = pick(rng);
        int b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        chosen.insert(encode_pair(a, b, n));
    }
    return chosen;
}

}  // namespace

UndirectedGraph random_gnm(int n, size_t m, std::mt19937_64& rng) {
    if (n < 0) throw std::invalid_argument("random_gnm: negative n");
    size_t max_edges = static_cast<size_t>(n) * (n - 1) / 2;
    if (m > max_edges) throw std::invalid_argument("random_gnm: m exceeds n(n-1)/2");

    UndirectedGraph g(n);
    if (m == 0) return g;
    if (m * 2 <= max_edges) {
        for (uint64_t code : sample_pairs(n, m, rng))
            g.add_edge(static_cast<int>(code / static_cast<uint64_t>(n)),
                       static_cast<int>(code % static_cast<uint64_t>(n)));
    } else {
        // dense case: sample the complement instead
        auto excluded = sample_pairs(n, max_edges - m, rng);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!excluded.contains(encode_pair(a, b, n))) g.add_edge(a, b);
    }
    return g;
}

AnalyticBaseline analytic_baseline(int n, double z) {
    if (n < 2) throw std::invalid_argument("analytic_baseline: n must be >= 2");
    if (z <= 0.0) throw std::invalid_argument("analytic_baseline: z must be > 0");
    AnalyticBaseline out;
    out.cc_rg = z / n;
    if (z > 1.0) out.d_rg = std::log(static_cast<double>(n)) / std::log(z);
    return out;
}

SimulatedBaseline simulate_baseline(int n, size_t m, int runs, uint64_t seed) {
    if (runs < 1) throw std::invalid_argument("simulate_baseline: runs must be >= 1");
    SimulatedBaseline out;
    out.runs = runs;
    double cc_sum = 0.0;
    double d_sum = 0.0;
    int d_count = 0;
    for (int run = 0; run < runs; ++run) {
        std::seed_seq seq{seed, static_cast<uint64_t>(run)};
        std::mt19937_64 rng(seq);
        UndirectedGraph g = random_gnm(n, m, rng);
        cc_sum += metrics::clustering_coefficient(g);
        if (auto d = metrics::mean_distance(g)) {
            d_sum += *d;
            ++d_count;
        } else {
            ++out.runs_without_distance;
        }
    }
    out.cc_rg_sim = cc_sum / runs;
    if (d_count > 0) out.d_rg_sim = d_sum / d_count;
    return out;
}

std::optional<double> walsh_ratio(std::optional<double> cc,
                                  std::optional<double> d_mean,
                                  std::optional<double> cc_rg,
                                  std::optional<double> d_rg) {
    if (!cc || !d_mean || !cc_rg || !d_rg) return std::nullopt;
    if (*cc <= 0.0 || *d_mean <= 0.0 || *cc_rg <= 0.0 || *d_rg <= 0.0) return std::nullopt;
    return (*cc / *cc_rg) / (*d_mean / *d_rg);
}

}  // namespace diffscope::nullmodel
