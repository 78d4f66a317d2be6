#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffscope/basemap.hpp"
#include "diffscope/network.hpp"
#include "diffscope/types.hpp"

namespace diffscope::overlays {

enum class GeoFormat { geojson, kml };

/// Per-year map overlay: a point per geocoded city (red when the city has at
/// least one coauthorship edge, orange when isolate, radius log2(papers+1))
/// and a line per edge between geocoded cities. Output is byte-deterministic;
/// points sorted by (country, city), lines by endpoint keys.
std::string emit_geo(const net::CityYearNetwork& net, GeoFormat format);

struct SciOverlay {
    std::string csv;                       // category,x,y,count rows, count > 0
    std::map<std::string, int> counts;     // matched categories only
    std::map<std::string, int> unmatched;  // category -> occurrences outside the basemap
};

/// Science-map overlay for one year's records with whole counting of
/// multi-category papers. Records without category tags fall back to the
/// basemap's journal lookup.
SciOverlay emit_sci(const std::vector<PublicationRecord>& records,
                    const basemap::Basemap& map, int year);

/// Pajek companion files for the science overlay: a .net with all basemap
/// categories placed at their layout coordinates, and a .vec of counts.
std::string sci_pajek_net(const basemap::Basemap& map);
std::string sci_pajek_vec(const basemap::Basemap& map, const std::map<std::string, int>& counts);

/// Categories used for counting: the record's own tags, or the basemap's
/// journal lookup when the record carries none.
std::vector<std::string> effective_categories(const PublicationRecord& rec,
                                              const basemap::Basemap& map);

}  // namespace diffscope::overlays
