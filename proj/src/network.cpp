#include "diffscope/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "diffscope/util.hpp"

namespace diffscope::net {

CityYearNetwork build_network(const std::vector<PublicationRecord>& records,
                              int year,
                              const ingest::Gazetteer& gazetteer,
                              int min_city_papers) {
    std::map<CityKey, int> paper_counts;
    std::map<std::pair<CityKey, CityKey>, int> edge_weights;

    for (const auto& rec : records) {
        if (rec.year != year) continue;
        std::set<CityKey> cities;
        for (const auto& addr : rec.addresses)
            if (addr.city_key) cities.insert(*addr.city_key);
        for (const auto& c : cities) ++paper_counts[c];
        for (auto it = cities.begin(); it != cities.end(); ++it)
            for (auto jt = std::next(it); jt != cities.end(); ++jt)
                ++edge_weights[{*it, *jt}];
    }

    CityYearNetwork net;
    net.year = year;

    // Exclusion happens once, after counting.
    std::map<CityKey, int> index;
    for (const auto& [key, papers] : paper_counts) {
        if (papers < min_city_papers) {
            ++net.singletons_excluded;
            continue;
        }
        index[key] = static_cast<int>(net.nodes.size());
        CityNode node{key, papers, std::nullopt};
        if (const GeoPoint* p = gazetteer.find(key)) node.coord = *p;
        else ++net.ungeocoded;
        net.nodes.push_back(std::move(node));
    }

    for (const auto& [pair, weight] : edge_weights) {
        auto ia = index.find(pair.first);
        auto ib = index.find(pair.second);
        if (ia == index.end() || ib == index.end()) continue;
        net.edges.push_back({ia->second, ib->second, weight});
    }
    std::sort(net.edges.begin(), net.edges.end(), [](const CityEdge& x, const CityEdge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return net;
}

std::map<int, std::vector<PublicationRecord>> slice_by_year(
    const std::vector<PublicationRecord>& records) {
    std::map<int, std::vector<PublicationRecord>> out;
    for (const auto& rec : records) out[rec.year].push_back(rec);
    return out;
}

std::string write_pajek(const CityYearNetwork& net) {
    std::ostringstream os;
    os << "*Vertices " << net.nodes.size() << "\n";
    for (size_t i = 0; i < net.nodes.size(); ++i) {
        const auto& node = net.nodes[i];
        os << (i + 1) << " \"" << node.key.label() << "\"";
        if (node.coord)
            os << " " << util::format_double(node.coord->lon) << " "
               << util::format_double(node.coord->lat);
        os << "\n";
    }
    os << "*Edges\n";
    for (const auto& e : net.edges)
        os << (e.a + 1) << " " << (e.b + 1) << " " << e.weight << "\n";
    return os.str();
}

}  // namespace diffscope::net
