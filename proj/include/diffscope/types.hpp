#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace diffscope {

/// (CITY, COUNTRY) pair, both uppercase; US states are folded into "USA".
struct CityKey {
    std::string city;
    std::string country;

    auto operator<=>(const CityKey&) const = default;

    std::string label() const { return city + ", " + country; }
};

struct GeoPoint {
    double lat = 0.0;
    double lon = 0.0;
};

struct AddressEntry {
    std::string raw;
    std::optional<CityKey> city_key;  // nullopt = unresolved
};

/// One parsed bibliographic record.
struct PublicationRecord {
    std::string id;
    int year = 0;
    std::vector<AddressEntry> addresses;
    std::vector<std::string> categories;
    std::string journal;
};

}  // namespace diffscope
