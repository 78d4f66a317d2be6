#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diffscope::util {

std::string trim(std::string_view s);
std::string to_upper(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Shortest round-trip decimal representation; the single formatter used
/// for every numeric output file so artifacts are byte-deterministic.
std::string format_double(double v);

/// Empty cell for undefined values in CSV output.
std::string format_cell(std::optional<double> v);

/// Splits one CSV line; double-quoted fields may contain commas and
/// doubled quotes.
std::vector<std::string> split_csv_line(std::string_view line);

std::optional<long> parse_long(std::string_view s);
std::optional<double> parse_double(std::string_view s);

/// Replaces bytes that do not form valid UTF-8 sequences with U+FFFD.
std::string sanitize_utf8(std::string_view s);

}  // namespace diffscope::util
