#include <CLI11.hpp>
#include <iostream>

#include "diffscope/pipeline.hpp"
#include "diffscope/util.hpp"

namespace {

bool parse_years(const std::string& text, int& from, int& to) {
    auto parts = diffscope::util::split(text, ':');
    if (parts.size() != 2) return false;
    auto a = diffscope::util::parse_long(parts[0]);
    auto b = diffscope::util::parse_long(parts[1]);
    if (!a || !b || *a > *b) return false;
    from = static_cast<int>(*a);
    to = static_cast<int>(*b);
    return true;
}

bool parse_formats(const std::string& text,
                   std::vector<diffscope::overlays::GeoFormat>& out) {
    out.clear();
    for (const auto& tok : diffscope::util::split(text, ',')) {
        if (tok == "geojson") out.push_back(diffscope::overlays::GeoFormat::geojson);
        else if (tok == "kml") out.push_back(diffscope::overlays::GeoFormat::kml);
        else return false;
    }
    return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Per-year city coauthorship networks, small-world and diversity "
                 "indicators, and map overlays from tagged-field bibliographic exports"};
    app.require_subcommand(1);

    diffscope::pipeline::RunConfig cfg;
    std::string years_text, formats_text = "geojson";
    bool have_seed = false;

    auto* run = app.add_subcommand("run", "run the full pipeline");
    run->add_option("--input", cfg.inputs, "tagged-field export file(s)")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--gazetteer", cfg.gazetteer, "city,country,lat,lon CSV")->required();
    run->add_option("--basemap", cfg.basemap_dir, "basemap bundle directory")->required();
    run->add_option("--years", years_text, "inclusive year range, e.g. 1998:2009")->required();
    run->add_option("--min-city-papers", cfg.min_city_papers,
                    "minimum yearly occurrences for a city to enter the network");
    run->add_option("--k-min", cfg.k_min, "smallest degree used in the power-law fit");
    run->add_option("--er-runs", cfg.er_runs, "random-graph simulation runs (0 disables)");
    auto* seed_opt = run->add_option("--seed", cfg.seed, "simulation seed");
    run->add_option("--out", cfg.out_dir, "output directory")->required();
    run->add_option("--geo-format", formats_text, "geojson, kml or geojson,kml");
    run->add_option("--threads", cfg.threads, "worker threads (0 = hardware default)");

    std::string basemap_to_check;
    auto* validate = app.add_subcommand("validate-basemap", "check a basemap bundle");
    validate->add_option("dir", basemap_to_check, "basemap bundle directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        auto issues = diffscope::basemap::validate_basemap(basemap_to_check);
        if (issues.empty()) {
            std::cout << "ok\n";
            return diffscope::pipeline::kExitOk;
        }
        for (const auto& issue : issues) std::cerr << issue << "\n";
        return diffscope::pipeline::kExitBasemapError;
    }

    if (!parse_years(years_text, cfg.year_from, cfg.year_to)) {
        std::cerr << "error: --years expects FROM:TO with FROM <= TO\n";
        return diffscope::pipeline::kExitInputError;
    }
    if (!parse_formats(formats_text, cfg.geo_formats)) {
        std::cerr << "error: --geo-format expects geojson and/or kml\n";
        return diffscope::pipeline::kExitInputError;
    }
    have_seed = seed_opt->count() > 0;
    if (cfg.er_runs > 0 && !have_seed) {
        std::cerr << "error: --seed is required when --er-runs > 0\n";
        return diffscope::pipeline::kExitInputError;
    }
    return diffscope::pipeline::run(cfg, std::cerr);
}
