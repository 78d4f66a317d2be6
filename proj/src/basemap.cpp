#include "diffscope/basemap.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "diffscope/util.hpp"

namespace diffscope::basemap {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> read_lines(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(util::sanitize_utf8(line));
    }
    return lines;
}

Basemap load_with_issues(const fs::path& dir, std::vector<std::string>& issues) {
    Basemap map;

    for (const auto& line : read_lines(dir / "categories.txt")) {
        std::string label = util::trim(line);
        if (!label.empty()) map.labels.push_back(label);
    }
    if (map.labels.empty()) issues.push_back("categories.txt: no labels");
    std::set<std::string> label_set(map.labels.begin(), map.labels.end());
    if (label_set.size() != map.labels.size())
        issues.push_back("categories.txt: duplicate labels");

    // cosine.csv: header row = labels, then one row of values per label
    auto cosine_lines = read_lines(dir / "cosine.csv");
    size_t n = map.labels.size();
    if (cosine_lines.empty()) {
        issues.push_back("cosine.csv: empty file");
    } else {
        auto header = util::split_csv_line(cosine_lines[0]);
        for (auto& h : header) h = util::trim(h);
        if (header != map.labels)
            issues.push_back("cosine.csv: header labels do not match categories.txt");
        if (cosine_lines.size() != n + 1) {
            issues.push_back("cosine.csv: expected " + std::to_string(n) +
                             " data rows, found " + std::to_string(cosine_lines.size() - 1));
        } else {
            map.cosine.assign(n, std::vector<double>(n, 0.0));
            for (size_t i = 0; i < n; ++i) {
                auto cols = util::split_csv_line(cosine_lines[i + 1]);
                if (cols.size() != n) {
                    issues.push_back("cosine.csv: row " + std::to_string(i + 1) +
                                     " has " + std::to_string(cols.size()) + " columns");
                    continue;
                }
                for (size_t j = 0; j < n; ++j) {
                    auto v = util::parse_double(cols[j]);
                    if (!v) {
                        issues.push_back("cosine.csv: non-numeric cell at row " +
                                         std::to_string(i + 1));
                        break;
                    }
                    map.cosine[i][j] = *v;
                }
            }
            for (size_t i = 0; i < n; ++i) {
                if (map.cosine[i][i] != 1.0)
                    issues.push_back("cosine.csv: diagonal entry for " + map.labels[i] +
                                     " is not 1");
                for (size_t j = 0; j < n; ++j) {
                    if (map.cosine[i][j] < 0.0 || map.cosine[i][j] > 1.0) {
                        issues.push_back("cosine.csv: entry (" + map.labels[i] + ", " +
                                         map.labels[j] + ") outside [0,1]");
                    } else if (j > i && map.cosine[i][j] != map.cosine[j][i]) {
                        issues.push_back("cosine.csv: asymmetric pair (" + map.labels[i] +
                                         ", " + map.labels[j] + ")");
                    }
                }
            }
        }
    }

    // layout.csv: label,x,y
    auto layout_lines = read_lines(dir / "layout.csv");
    if (layout_lines.empty() || util::to_upper(util::trim(layout_lines[0])) != "LABEL,X,Y") {
        issues.push_back("layout.csv: expected header label,x,y");
    } else {
        for (size_t i = 1; i < layout_lines.size(); ++i) {
            if (util::trim(layout_lines[i]).empty()) continue;
            auto cols = util::split_csv_line(layout_lines[i]);
            if (cols.size() != 3) {
                issues.push_back("layout.csv: line " + std::to_string(i + 1) +
                                 " has " + std::to_string(cols.size()) + " columns");
                continue;
            }
            std::string label = util::trim(cols[0]);
            auto x = util::parse_double(cols[1]);
            auto y = util::parse_double(cols[2]);
            if (!x || !y) {
                issues.push_back("layout.csv: non-numeric coordinates for " + label);
                continue;
            }
            if (!label_set.contains(label)) {
                issues.push_back("layout.csv: unknown label " + label);
                continue;
            }
            map.layout[label] = {*x, *y};
        }
        for (const auto& label : map.labels)
            if (!map.layout.contains(label))
                issues.push_back("layout.csv: missing label " + label);
    }

    // journal_categories.csv is optional: journal,categories (semicolon-separated)
    fs::path jc = dir / "journal_categories.csv";
    if (fs::exists(jc)) {
        auto lines = read_lines(jc);
        for (size_t i = 1; i < lines.size(); ++i) {
            if (util::trim(lines[i]).empty()) continue;
            auto cols = util::split_csv_line(lines[i]);
            if (cols.size() != 2) {
                issues.push_back("journal_categories.csv: line " + std::to_string(i + 1) +
                                 " has " + std::to_string(cols.size()) + " columns");
                continue;
            }
            std::vector<std::string> cats;
            for (const auto& c : util::split(cols[1], ';')) {
                std::string cat = util::trim(c);
                if (!cat.empty()) cats.push_back(cat);
            }
            map.journal_categories[util::trim(cols[0])] = std::move(cats);
        }
    }

    return map;
}

}  // namespace

Basemap load_basemap(const fs::path& dir) {
    std::vector<std::string> issues;
    Basemap map = load_with_issues(dir, issues);
    if (!issues.empty())
        throw std::runtime_error("basemap bundle " + dir.string() +
                                 " is inconsistent: " + issues.front());
    return map;
}

std::vector<std::string> validate_basemap(const fs::path& dir) {
    std::vector<std::string> issues;
    try {
        load_with_issues(dir, issues);
    } catch (const std::exception& e) {
        issues.push_back(e.what());
    }
    return issues;
}

}  // namespace diffscope::basemap
