#include "diffscope/wos.hpp"

#include <algorithm>
#include <cctype>

#include "diffscope/util.hpp"

namespace diffscope::ingest {
namespace {

using util::to_upper;
using util::trim;

bool is_tag_line(const std::string& line) {
    if (line.size() < 2) return false;
    auto tagchar = [](char c) {
        return std::isupper(static_cast<unsigned char>(c)) ||
               std::isdigit(static_cast<unsigned char>(c));
    };
    if (!tagchar(line[0]) || !tagchar(line[1])) return false;
    return line.size() == 2 || line[2] == ' ';
}

// "MA 01605", "MA 01605-1234" or a bare two-letter state code.
bool looks_like_state_zip(const std::string& seg, bool allow_bare_state) {
    auto tokens = util::split(seg, ' ');
    std::erase_if(tokens, [](const std::string& t) { return t.empty(); });
    if (tokens.empty() || tokens.size() > 2) return false;
    const std::string& st = tokens[0];
    if (st.size() != 2 || !std::isupper(static_cast<unsigned char>(st[0])) ||
        !std::isupper(static_cast<unsigned char>(st[1])))
        return false;
    if (tokens.size() == 1) return allow_bare_state;
    return std::all_of(tokens[1].begin(), tokens[1].end(), [](unsigned char c) {
        return std::isdigit(c) || c == '-';
    });
}

bool has_digit(const std::string& s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Drops postcode-bearing tokens ("CH-1015", "01605") from a city segment.
std::string city_from_segment(const std::string& seg) {
    std::string out;
    for (const auto& tok : util::split(seg, ' ')) {
        if (tok.empty() || has_digit(tok)) continue;
        if (!out.empty()) out += ' ';
        out += tok;
    }
    return to_upper(trim(out));
}

std::string strip_author_prefix(const std::string& line) {
    std::string s = trim(line);
    if (!s.empty() && s.front() == '[') {
        size_t close = s.find(']');
        if (close != std::string::npos) s = trim(s.substr(close + 1));
    }
    return s;
}

std::string strip_reprint_prefix(const std::string& line) {
    static const std::string marker = "(reprint author),";
    size_t pos = line.find(marker);
    if (pos != std::string::npos) return trim(line.substr(pos + marker.size()));
    return trim(line);
}

void append_unique(std::vector<std::string>& out, const std::string& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

struct RecordBuilder {
    std::string id;
    std::string journal;
    std::string year_text;
    bool has_year_field = false;
    std::vector<std::string> address_lines;
    std::vector<std::string> categories;

    void clear() { *this = RecordBuilder{}; }

    bool empty() const {
        return id.empty() && journal.empty() && !has_year_field &&
               address_lines.empty() && categories.empty();
    }
};

}  // namespace

std::optional<CityKey> extract_city(const std::string& raw_address) {
    std::vector<std::string> segments;
    for (const auto& part : util::split(raw_address, ',')) {
        std::string t = trim(part);
        if (!t.empty()) segments.push_back(std::move(t));
    }
    if (segments.size() < 2) return std::nullopt;

    std::string last = segments.back();
    std::string country;
    size_t city_idx = segments.size() - 2;

    std::string upper_last = to_upper(last);
    bool ends_usa = upper_last == "USA" ||
                    (upper_last.size() > 4 && upper_last.ends_with(" USA"));
    if (ends_usa) {
        country = "USA";
        // A bare trailing "USA" may be preceded by its own "STATE ZIP" segment.
        if (upper_last == "USA" && city_idx >= 1 &&
            looks_like_state_zip(segments[city_idx], true)) {
            --city_idx;
        }
    } else if (looks_like_state_zip(last, false)) {
        country = "USA";
    } else {
        country = to_upper(last);
    }

    // Skip a state/province + postal segment sitting between city and country
    // ("..., Toronto, ON M5S 1A1, Canada"): after dropping the digit-bearing
    // tokens only a short uppercase code (or nothing) remains.
    while (city_idx >= 1) {
        std::string stripped = city_from_segment(segments[city_idx]);
        bool state_like = !stripped.empty() && stripped.size() <= 3 &&
                          stripped.find(' ') == std::string::npos &&
                          std::all_of(stripped.begin(), stripped.end(),
                                      [](unsigned char c) { return std::isupper(c); }) &&
                          has_digit(segments[city_idx]);
        if (!state_like) break;
        --city_idx;
    }

    std::string city = city_from_segment(segments[city_idx]);
    if (city.empty() || country.empty()) return std::nullopt;
    return CityKey{city, country};
}

ParseResult parse_records(std::istream& in) {
    ParseResult result;
    RecordBuilder rec;
    std::string current_tag;
    size_t offset = 0;
    size_t line_start = 0;
    bool saw_ef = false;
    std::string raw_line;

    auto flush_record = [&]() {
        ++result.record_blocks;
        auto year = rec.has_year_field ? util::parse_long(rec.year_text)
                                       : std::nullopt;
        if (!year || *year <= 1800) {
            ++result.dropped_missing_year;
            rec.clear();
            return;
        }
        PublicationRecord out;
        out.id = rec.id;
        out.year = static_cast<int>(*year);
        out.journal = rec.journal;
        out.categories = rec.categories;
        std::vector<std::string> seen;
        for (const auto& line : rec.address_lines) {
            if (std::find(seen.begin(), seen.end(), line) != seen.end()) continue;
            seen.push_back(line);
            AddressEntry entry{line, extract_city(line)};
            ++result.addresses_total;
            if (!entry.city_key) ++result.addresses_unresolved;
            out.addresses.push_back(std::move(entry));
        }
        result.records.push_back(std::move(out));
        rec.clear();
    };

    auto handle_field = [&](const std::string& tag, const std::string& content) {
        std::string value = trim(content);
        if (tag == "PY") {
            rec.year_text = value;
            rec.has_year_field = true;
        } else if (tag == "UT") {
            if (rec.id.empty()) rec.id = value;
        } else if (tag == "SO") {
            if (rec.journal.empty()) rec.journal = value;
        } else if (tag == "C1") {
            std::string addr = strip_author_prefix(value);
            if (!addr.empty()) rec.address_lines.push_back(addr);
        } else if (tag == "RP") {
            std::string addr = strip_reprint_prefix(value);
            if (!addr.empty()) rec.address_lines.push_back(addr);
        } else if (tag == "WC" || tag == "SC") {
            for (const auto& cat : util::split(value, ';')) {
                std::string c = trim(cat);
                if (!c.empty()) append_unique(rec.categories, c);
            }
        }
    };

    while (std::getline(in, raw_line)) {
        line_start = offset;
        offset += raw_line.size() + 1;
        if (!raw_line.empty() && raw_line.back() == '\r') raw_line.pop_back();
        std::string line = util::sanitize_utf8(raw_line);
        if (saw_ef) continue;

        if (is_tag_line(line)) {
            std::string tag = line.substr(0, 2);
            std::string content = line.size() > 3 ? line.substr(3) : std::string();
            if (tag == "ER") {
                flush_record();
                current_tag.clear();
            } else if (tag == "EF") {
                if (!rec.empty())
                    throw ParseError("record not terminated by ER before EF", line_start);
                saw_ef = true;
            } else {
                current_tag = tag;
                handle_field(tag, content);
            }
        } else if (!line.empty() && line.front() == ' ' && !current_tag.empty()) {
            handle_field(current_tag, line);
        }
        // blank and unrecognized lines are skipped
    }

    if (!saw_ef && !rec.empty())
        throw ParseError("unterminated record at end of input", line_start);
    return result;
}

}  // namespace diffscope::ingest
