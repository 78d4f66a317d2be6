#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace diffscope::basemap {

/// Basemap bundle: fixed category universe with a cosine similarity matrix,
/// 2-D layout positions and an optional journal-to-categories lookup.
struct Basemap {
    std::vector<std::string> labels;                   // categories.txt order
    std::vector<std::vector<double>> cosine;           // square, symmetric
    std::map<std::string, std::pair<double, double>> layout;  // label -> (x, y)
    std::map<std::string, std::vector<std::string>> journal_categories;
};

/// Loads categories.txt, cosine.csv, layout.csv and (when present)
/// journal_categories.csv from a bundle directory. Throws on any
/// inconsistency that validate_basemap would report.
Basemap load_basemap(const std::filesystem::path& dir);

/// Structural checks: label alignment across the three files, cosine
/// symmetry / range / unit diagonal. Returns an empty list when consistent.
std::vector<std::string> validate_basemap(const std::filesystem::path& dir);

}  // namespace diffscope::basemap
