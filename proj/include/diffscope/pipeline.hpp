#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "diffscope/overlays.hpp"

namespace diffscope::pipeline {

struct RunConfig {
    std::vector<std::filesystem::path> inputs;
    std::filesystem::path gazetteer;
    std::filesystem::path basemap_dir;
    int year_from = 0;
    int year_to = 0;
    int min_city_papers = 2;
    int k_min = 2;
    int er_runs = 100;
    uint64_t seed = 0;
    std::filesystem::path out_dir;
    std::vector<overlays::GeoFormat> geo_formats = {overlays::GeoFormat::geojson};
    int threads = 0;  // 0 = hardware default, capped by DIFFUSION_SCOPE_THREADS
};

// exit codes shared by run() and the CLI
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBasemapError = 3;

/// Runs the whole per-year pipeline and writes the artifact tree
/// (indicators.csv, geo/<year>.*, sci/<year>.csv, manifest.json, report.txt)
/// under config.out_dir. Diagnostics go to `log`.
int run(const RunConfig& config, std::ostream& log);

}  // namespace diffscope::pipeline
