#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diffscope/types.hpp"

namespace diffscope::ingest {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t byte_offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    size_t offset;
};

struct ParseResult {
    std::vector<PublicationRecord> records;
    size_t record_blocks = 0;        // ER-terminated blocks seen
    size_t dropped_missing_year = 0; // blocks without a usable PY
    size_t addresses_total = 0;
    size_t addresses_unresolved = 0;
};

/// Parses a tagged-field export stream (two-letter tags in columns 1-2,
/// indented continuation lines, ER record terminator, EF file terminator).
/// Recognized tags: PY, C1, RP, WC, SC, SO, UT. Anything else is skipped.
ParseResult parse_records(std::istream& in);

/// City extraction from one comma-separated institutional address line.
/// Returns nullopt when the address cannot be resolved to a (city, country).
std::optional<CityKey> extract_city(const std::string& raw_address);

}  // namespace diffscope::ingest
