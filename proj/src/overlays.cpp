#include "diffscope/overlays.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "diffscope/util.hpp"

namespace diffscope::overlays {
namespace {

using util::format_double;

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct OverlayData {
    struct Point {
        const net::CityNode* node;
        bool connected;
    };
    struct Line {
        const net::CityNode* a;
        const net::CityNode* b;
        int weight;
    };
    std::vector<Point> points;  // geocoded, sorted by (country, city)
    std::vector<Line> lines;    // both endpoints geocoded, sorted by endpoint keys
    size_t omitted = 0;         // coordinate-less cities
};

std::pair<std::string, std::string> country_city(const net::CityNode& n) {
    return {n.key.country, n.key.city};
}

OverlayData collect(const net::CityYearNetwork& net) {
    OverlayData data;
    std::vector<bool> connected(net.nodes.size(), false);
    for (const auto& e : net.edges) {
        connected[static_cast<size_t>(e.a)] = true;
        connected[static_cast<size_t>(e.b)] = true;
    }
    for (size_t i = 0; i < net.nodes.size(); ++i) {
        if (!net.nodes[i].coord) {
            ++data.omitted;
            continue;
        }
        data.points.push_back({&net.nodes[i], connected[i]});
    }
    std::sort(data.points.begin(), data.points.end(),
              [](const OverlayData::Point& x, const OverlayData::Point& y) {
                  return country_city(*x.node) < country_city(*y.node);
              });
    for (const auto& e : net.edges) {
        const auto& a = net.nodes[static_cast<size_t>(e.a)];
        const auto& b = net.nodes[static_cast<size_t>(e.b)];
        if (!a.coord || !b.coord) continue;
        data.lines.push_back({&a, &b, e.weight});
    }
    std::sort(data.lines.begin(), data.lines.end(),
              [](const OverlayData::Line& x, const OverlayData::Line& y) {
                  return std::pair(country_city(*x.a), country_city(*x.b)) <
                         std::pair(country_city(*y.a), country_city(*y.b));
              });
    return data;
}

double display_radius(int papers) { return std::log2(static_cast<double>(papers) + 1.0); }

std::string emit_geojson(const net::CityYearNetwork& net, const OverlayData& data) {
    std::ostringstream os;
    os << "{\"type\":\"FeatureCollection\",\"properties\":{\"year\":" << net.year
       << ",\"ungeocoded_cities\":" << data.omitted << "},\"features\":[";
    bool first = true;
    for (const auto& pt : data.points) {
        if (!first) os << ",";
        first = false;
        const auto& n = *pt.node;
        os << "{\"type\":\"Feature\",\"geometry\":{\"type\":\"Point\",\"coordinates\":["
           << format_double(n.coord->lon) << "," << format_double(n.coord->lat)
           << "]},\"properties\":{\"city\":\"" << json_escape(n.key.city)
           << "\",\"country\":\"" << json_escape(n.key.country)
           << "\",\"papers\":" << n.papers << ",\"color\":\""
           << (pt.connected ? "red" : "orange") << "\",\"radius\":"
           << format_double(display_radius(n.papers)) << "}}";
    }
    for (const auto& line : data.lines) {
        if (!first) os << ",";
        first = false;
        os << "{\"type\":\"Feature\",\"geometry\":{\"type\":\"LineString\",\"coordinates\":[["
           << format_double(line.a->coord->lon) << "," << format_double(line.a->coord->lat)
           << "],[" << format_double(line.b->coord->lon) << ","
           << format_double(line.b->coord->lat) << "]]},\"properties\":{\"weight\":"
           << line.weight << "}}";
    }
    os << "]}\n";
    return os.str();
}

std::string emit_kml(const net::CityYearNetwork& net, const OverlayData& data) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<kml xmlns=\"http://www.opengis.net/kml/2.2\">\n<Document>\n"
       << "<name>coauthorship " << net.year << "</name>\n"
       << "<Style id=\"red\"><IconStyle><color>ff0000ff</color></IconStyle></Style>\n"
       << "<Style id=\"orange\"><IconStyle><color>ff00a5ff</color></IconStyle></Style>\n"
       << "<Style id=\"link\"><LineStyle><color>7f0000ff</color><width>1</width>"
          "</LineStyle></Style>\n";
    for (const auto& pt : data.points) {
        const auto& n = *pt.node;
        os << "<Placemark><name>" << xml_escape(n.key.label())
           << "</name><styleUrl>#" << (pt.connected ? "red" : "orange")
           << "</styleUrl><ExtendedData>"
           << "<Data name=\"papers\"><value>" << n.papers << "</value></Data>"
           << "<Data name=\"radius\"><value>" << format_double(display_radius(n.papers))
           << "</value></Data></ExtendedData><Point><coordinates>"
           << format_double(n.coord->lon) << "," << format_double(n.coord->lat)
           << ",0</coordinates></Point></Placemark>\n";
    }
    for (const auto& line : data.lines) {
        os << "<Placemark><styleUrl>#link</styleUrl><ExtendedData>"
           << "<Data name=\"weight\"><value>" << line.weight
           << "</value></Data></ExtendedData><LineString><coordinates>"
           << format_double(line.a->coord->lon) << "," << format_double(line.a->coord->lat)
           << ",0 " << format_double(line.b->coord->lon) << ","
           << format_double(line.b->coord->lat) << ",0</coordinates></LineString>"
           << "</Placemark>\n";
    }
    os << "</Document>\n</kml>\n";
    return os.str();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string emit_geo(const net::CityYearNetwork& net, GeoFormat format) {
    OverlayData data = collect(net);
    return format == GeoFormat::geojson ? emit_geojson(net, data) : emit_kml(net, data);
}

std::vector<std::string> effective_categories(const PublicationRecord& rec,
                                              const basemap::Basemap& map) {
    if (!rec.categories.empty()) return rec.categories;
    auto it = map.journal_categories.find(rec.journal);
    if (it != map.journal_categories.end()) return it->second;
    return {};
}

SciOverlay emit_sci(const std::vector<PublicationRecord>& records,
                    const basemap::Basemap& map, int year) {
    SciOverlay out;
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < map.labels.size(); ++i) index[map.labels[i]] = i;

    for (const auto& rec : records) {
        if (rec.year != year) continue;
        for (const auto& cat : effective_categories(rec, map)) {
            if (index.contains(cat)) ++out.counts[cat];
            else ++out.unmatched[cat];
        }
    }

    std::ostringstream os;
    os << "category,x,y,count\n";
    for (const auto& label : map.labels) {  // basemap order
        auto it = out.counts.find(label);
        if (it == out.counts.end()) continue;
        auto [x, y] = map.layout.at(label);
        os << csv_quote(label) << "," << format_double(x) << "," << format_double(y)
           << "," << it->second << "\n";
    }
    out.csv = os.str();
    return out;
}

std::string sci_pajek_net(const basemap::Basemap& map) {
    std::ostringstream os;
    os << "*Vertices " << map.labels.size() << "\n";
    for (size_t i = 0; i < map.labels.size(); ++i) {
        auto [x, y] = map.layout.at(map.labels[i]);
        os << (i + 1) << " \"" << map.labels[i] << "\" " << format_double(x) << " "
           << format_double(y) << "\n";
    }
    os << "*Edges\n";
    return os.str();
}

std::string sci_pajek_vec(const basemap::Basemap& map, const std::map<std::string, int>& counts) {
    std::ostringstream os;
    os << "*Vertices " << map.labels.size() << "\n";
    for (const auto& label : map.labels) {
        auto it = counts.find(label);
        os << (it == counts.end() ? 0 : it->second) << "\n";
    }
    return os.str();
}

}  // namespace diffscope::overlays
