#include "diffscope/metrics.hpp"

#include <algorithm>
#include <queue>

namespace diffscope::metrics {
namespace {

std::vector<int> component_of(const UndirectedGraph& g, int start, std::vector<int>& comp_id,
                              int id) {
    std::vector<int> members;
    std::queue<int> q;
    q.push(start);
    comp_id[static_cast<size_t>(start)] = id;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        members.push_back(v);
        for (int w : g.adj[static_cast<size_t>(v)]) {
            if (comp_id[static_cast<size_t>(w)] < 0) {
                comp_id[static_cast<size_t>(w)] = id;
                q.push(w);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

double clustering_coefficient(const UndirectedGraph& g) {
    int n = g.node_count();
    if (n == 0) return 0.0;
    // sorted copies for O(deg) membership tests
    std::vector<std::vector<int>> sorted = g.adj;
    for (auto& nbrs : sorted) std::sort(nbrs.begin(), nbrs.end());

    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        const auto& nbrs = sorted[static_cast<size_t>(v)];
        size_t deg = nbrs.size();
        if (deg < 2) continue;
        size_t linked = 0;
        for (size_t i = 0; i < deg; ++i)
            for (size_t j = i + 1; j < deg; ++j)
                if (std::binary_search(sorted[static_cast<size_t>(nbrs[i])].begin(),
                                       sorted[static_cast<size_t>(nbrs[i])].end(), nbrs[j]))
                    ++linked;
        sum += static_cast<double>(linked) / (static_cast<double>(deg) * (deg - 1) / 2.0);
    }
    return sum / n;
}

std::optional<double> mean_distance(const UndirectedGraph& g) {
    ComponentResult lc = largest_component(g);
    size_t size = lc.nodes.size();
    if (size < 2) return std::nullopt;

    long long total = 0;
    std::vector<int> dist(static_cast<size_t>(g.node_count()));
    for (int src : lc.nodes) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(src)] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[static_cast<size_t>(v)]) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    q.push(w);
                }
            }
        }
        for (int v : lc.nodes)
            if (v > src) total += dist[static_cast<size_t>(v)];
    }
    double pairs = static_cast<double>(size) * (size - 1) / 2.0;
    return static_cast<double>(total) / pairs;
}

ComponentResult largest_component(const UndirectedGraph& g) {
    int n = g.node_count();
    ComponentResult best;
    if (n == 0) return best;
    std::vector<int> comp_id(static_cast<size_t>(n), -1);
    int next_id = 0;
    for (int v = 0; v < n; ++v) {
        if (comp_id[static_cast<size_t>(v)] >= 0) continue;
        auto members = component_of(g, v, comp_id, next_id++);
        // strict > keeps the earlier (lexicographically smaller) component on ties
        if (members.size() > best.nodes.size()) best.nodes = std::move(members);
    }
    best.fraction = static_cast<double>(best.nodes.size()) / n;
    return best;
}

std::map<int, int> degree_histogram(const UndirectedGraph& g) {
    std::map<int, int> hist;
    for (int v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
    return hist;
}

NetworkMetrics compute_metrics(const net::CityYearNetwork& net) {
    NetworkMetrics out;
    UndirectedGraph g = net.to_graph();
    out.n = g.node_count();
    out.m = g.edge_count();
    if (out.n == 0) return out;
    if (out.n >= 2)
        out.density = 2.0 * static_cast<double>(out.m) /
                      (static_cast<double>(out.n) * (out.n - 1));
    out.z = 2.0 * static_cast<double>(out.m) / out.n;
    out.cc = clustering_coefficient(g);
    out.d_mean = mean_distance(g);
    out.largest_component_fraction = largest_component(g).fraction;
    return out;
}

}  // namespace diffscope::metrics
