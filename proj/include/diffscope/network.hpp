#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffscope/gazetteer.hpp"
#include "diffscope/graph.hpp"
#include "diffscope/types.hpp"

namespace diffscope::net {

struct CityNode {
    CityKey key;
    int papers = 0;                  // distinct records mentioning the city
    std::optional<GeoPoint> coord;   // nullopt = not in the gazetteer
};

struct CityEdge {
    int a = 0;  // node indices, a < b (nodes are sorted by key)
    int b = 0;
    int weight = 0;  // coauthored papers
};

/// Weighted undirected intercity coauthorship network for one year.
/// Nodes are sorted by CityKey; edges stored once with a < b.
struct CityYearNetwork {
    int year = 0;
    std::vector<CityNode> nodes;
    std::vector<CityEdge> edges;
    size_t singletons_excluded = 0;
    size_t ungeocoded = 0;

    UndirectedGraph to_graph() const {
        UndirectedGraph g(static_cast<int>(nodes.size()));
        for (const auto& e : edges) g.add_edge(e.a, e.b);
        return g;
    }
};

/// Builds the per-year network: per-record city sets (deduplicated), +1 node
/// count per mentioning record, +1 edge weight per record mentioning both
/// endpoints, then single-pass removal of cities with fewer than
/// min_city_papers occurrences.
CityYearNetwork build_network(const std::vector<PublicationRecord>& records,
                              int year,
                              const ingest::Gazetteer& gazetteer,
                              int min_city_papers = 2);

std::map<int, std::vector<PublicationRecord>> slice_by_year(
    const std::vector<PublicationRecord>& records);

/// Pajek .net serialization: labeled vertices with lon/lat coordinates and a
/// weighted *Edges section.
std::string write_pajek(const CityYearNetwork& net);

}  // namespace diffscope::net
