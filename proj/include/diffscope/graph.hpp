#pragma once

#include <cstddef>
#include <vector>

namespace diffscope {

/// Plain undirected graph on vertices 0..n-1, binary adjacency.
struct UndirectedGraph {
    std::vector<std::vector<int>> adj;

    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : adj(static_cast<size_t>(n)) {}

    int node_count() const { return static_cast<int>(adj.size()); }

    size_t edge_count() const {
        size_t deg_sum = 0;
        for (const auto& nbrs : adj) deg_sum += nbrs.size();
        return deg_sum / 2;
    }

    void add_edge(int a, int b) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }

    int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }
};

}  // namespace diffscope
