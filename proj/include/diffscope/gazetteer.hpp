#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "diffscope/types.hpp"

namespace diffscope::ingest {

struct Gazetteer {
    std::map<CityKey, GeoPoint> coords;
    std::vector<std::string> warnings;  // duplicate keys, rejected rows
    size_t rows_rejected = 0;

    const GeoPoint* find(const CityKey& key) const {
        auto it = coords.find(key);
        return it == coords.end() ? nullptr : &it->second;
    }
};

/// Loads a `city,country,lat,lon` CSV. Duplicate keys: last row wins with a
/// warning. Rows with out-of-range coordinates are rejected with the line
/// number recorded.
Gazetteer load_gazetteer(std::istream& in);

}  // namespace diffscope::ingest
