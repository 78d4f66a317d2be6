#include "diffscope/gazetteer.hpp"

#include <stdexcept>

#include "diffscope/util.hpp"

namespace diffscope::ingest {

Gazetteer load_gazetteer(std::istream& in) {
    Gazetteer gaz;
    std::string line;
    size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (util::trim(line).empty()) continue;
        if (!header_seen) {
            header_seen = true;
            if (util::to_upper(util::trim(line)) != "CITY,COUNTRY,LAT,LON")
                throw std::runtime_error("gazetteer: expected header city,country,lat,lon");
            continue;
        }
        auto cols = util::split(util::sanitize_utf8(line), ',');
        if (cols.size() != 4) {
            gaz.warnings.push_back("line " + std::to_string(line_no) +
                                   ": expected 4 columns, got " +
                                   std::to_string(cols.size()));
            ++gaz.rows_rejected;
            continue;
        }
        auto lat = util::parse_double(cols[2]);
        auto lon = util::parse_double(cols[3]);
        if (!lat || !lon || *lat < -90.0 || *lat > 90.0 || *lon < -180.0 || *lon > 180.0) {
            gaz.warnings.push_back("line " + std::to_string(line_no) +
                                   ": coordinates out of range");
            ++gaz.rows_rejected;
            continue;
        }
        CityKey key{util::to_upper(util::trim(cols[0])), util::to_upper(util::trim(cols[1]))};
        if (key.city.empty() || key.country.empty()) {
            gaz.warnings.push_back("line " + std::to_string(line_no) + ": empty key");
            ++gaz.rows_rejected;
            continue;
        }
        auto [it, inserted] = gaz.coords.insert_or_assign(key, GeoPoint{*lat, *lon});
        if (!inserted)
            gaz.warnings.push_back("line " + std::to_string(line_no) +
                                   ": duplicate key " + key.label() + ", last row wins");
    }
    return gaz;
}

}  // namespace diffscope::ingest
