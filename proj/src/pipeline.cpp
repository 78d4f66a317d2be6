#include "diffscope/pipeline.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "diffscope/diversity.hpp"
#include "diffscope/gazetteer.hpp"
#include "diffscope/metrics.hpp"
#include "diffscope/network.hpp"
#include "diffscope/null_models.hpp"
#include "diffscope/scaling.hpp"
#include "diffscope/util.hpp"
#include "diffscope/wos.hpp"

namespace diffscope::pipeline {
namespace {

namespace fs = std::filesystem;
using util::format_cell;
using util::format_double;

struct YearResult {
    int year = 0;
    size_t records = 0;
    size_t uncategorized = 0;
    size_t singletons_excluded = 0;
    size_t ungeocoded = 0;

    metrics::NetworkMetrics m;
    std::optional<double> cc_rg_analytic, d_rg_analytic;
    std::optional<double> cc_rg_sim, d_rg_sim;
    std::optional<double> w_analytic, w_sim;
    std::optional<double> gamma, r2;
    std::optional<double> d_geo, c_geo, coherence_geo, d_cog;

    std::string geojson, kml, sci_csv;
    std::map<std::string, int> unmatched;
};

uint64_t year_seed(uint64_t seed, int year) {
    // splitmix-style mix keeps per-year streams independent of each other
    uint64_t x = seed ^ (static_cast<uint64_t>(year) * 0x9E3779B97F4A7C15ULL);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

YearResult process_year(int year, const std::vector<PublicationRecord>& year_records,
                        const ingest::Gazetteer& gaz, const basemap::Basemap& bmap,
                        const diversity::DistanceMatrix& cognitive, const RunConfig& cfg) {
    YearResult res;
    res.year = year;
    res.records = year_records.size();

    net::CityYearNetwork network =
        net::build_network(year_records, year, gaz, cfg.min_city_papers);
    res.singletons_excluded = network.singletons_excluded;
    res.ungeocoded = network.ungeocoded;

    res.m = metrics::compute_metrics(network);
    if (res.m.n >= 2 && res.m.z && *res.m.z > 0.0) {
        auto base = nullmodel::analytic_baseline(res.m.n, *res.m.z);
        res.cc_rg_analytic = base.cc_rg;
        res.d_rg_analytic = base.d_rg;
        res.w_analytic =
            nullmodel::walsh_ratio(res.m.cc, res.m.d_mean, res.cc_rg_analytic, res.d_rg_analytic);
        if (cfg.er_runs > 0) {
            auto sim = nullmodel::simulate_baseline(res.m.n, res.m.m, cfg.er_runs,
                                                    year_seed(cfg.seed, year));
            res.cc_rg_sim = sim.cc_rg_sim;
            res.d_rg_sim = sim.d_rg_sim;
            res.w_sim =
                nullmodel::walsh_ratio(res.m.cc, res.m.d_mean, res.cc_rg_sim, res.d_rg_sim);
        }
    }

    if (auto fit = scaling::fit_power_law(metrics::degree_histogram(network.to_graph()),
                                          cfg.k_min)) {
        res.gamma = fit->gamma;
        res.r2 = fit->r2;
    }

    auto geo_mass = diversity::city_paper_mass(network);
    if (!geo_mass.labels.empty()) {
        auto geo_dist = diversity::geographic_distances(network);
        res.d_geo = diversity::rao_stirling(geo_mass, geo_dist);
        auto links = diversity::link_mass(network);
        res.c_geo = links.labels.empty() ? 0.0 : diversity::globalization(links, geo_dist);
        res.coherence_geo = diversity::coherence(*res.d_geo, *res.c_geo);
    }

    // cognitive mass uses the journal fallback for untagged records
    std::vector<PublicationRecord> categorized = year_records;
    for (auto& rec : categorized) {
        rec.categories = overlays::effective_categories(rec, bmap);
        if (rec.categories.empty()) ++res.uncategorized;
    }
    auto cog_mass = diversity::category_mass(categorized, bmap.labels);
    if (!cog_mass.labels.empty()) res.d_cog = diversity::rao_stirling(cog_mass, cognitive);

    for (auto fmt : cfg.geo_formats) {
        if (fmt == overlays::GeoFormat::geojson)
            res.geojson = overlays::emit_geo(network, fmt);
        else
            res.kml = overlays::emit_geo(network, fmt);
    }
    auto sci = overlays::emit_sci(categorized, bmap, year);
    res.sci_csv = std::move(sci.csv);
    res.unmatched = std::move(sci.unmatched);
    return res;
}

std::string indicators_csv(const std::vector<YearResult>& years) {
    std::ostringstream os;
    os << "year,n,m,density,z,cc,d_mean,largest_component_fraction,"
          "cc_rg_analytic,d_rg_analytic,cc_rg_sim,d_rg_sim,w_analytic,w_sim,"
          "gamma,r2,D_geo,C_geo,coherence_geo,D_cog\n";
    for (const auto& y : years) {
        os << y.year << "," << y.m.n << "," << y.m.m << "," << format_cell(y.m.density) << ","
           << format_cell(y.m.z) << "," << format_cell(y.m.cc) << ","
           << format_cell(y.m.d_mean) << "," << format_cell(y.m.largest_component_fraction)
           << "," << format_cell(y.cc_rg_analytic) << "," << format_cell(y.d_rg_analytic)
           << "," << format_cell(y.cc_rg_sim) << "," << format_cell(y.d_rg_sim) << ","
           << format_cell(y.w_analytic) << "," << format_cell(y.w_sim) << ","
           << format_cell(y.gamma) << "," << format_cell(y.r2) << ","
           << format_cell(y.d_geo) << "," << format_cell(y.c_geo) << ","
           << format_cell(y.coherence_geo) << "," << format_cell(y.d_cog) << "\n";
    }
    return os.str();
}

std::string manifest_json(const std::vector<YearResult>& years, const RunConfig& cfg) {
    std::ostringstream os;
    os << "{\"indicators\":\"indicators.csv\",\"report\":\"report.txt\",\"years\":[";
    bool first = true;
    for (const auto& y : years) {
        if (!first) os << ",";
        first = false;
        os << "{\"year\":" << y.year << ",\"geo\":[";
        bool g_first = true;
        for (auto fmt : cfg.geo_formats) {
            if (!g_first) os << ",";
            g_first = false;
            os << "\"geo/" << y.year
               << (fmt == overlays::GeoFormat::geojson ? ".geojson" : ".kml") << "\"";
        }
        os << "],\"sci\":\"sci/" << y.year << ".csv\"}";
    }
    os << "]}\n";
    return os.str();
}

std::string report_text(const ingest::ParseResult& parsed, size_t used, size_t out_of_range,
                        const std::vector<YearResult>& years,
                        const ingest::Gazetteer& gaz) {
    std::ostringstream os;
    os << "record blocks: " << parsed.record_blocks << "\n"
       << "records parsed: " << parsed.records.size() << "\n"
       << "records dropped (missing or invalid PY): " << parsed.dropped_missing_year << "\n"
       << "records outside year range: " << out_of_range << "\n"
       << "records used: " << used << "\n"
       << "addresses seen: " << parsed.addresses_total << "\n"
       << "addresses unresolved: " << parsed.addresses_unresolved << "\n"
       << "gazetteer rows rejected: " << gaz.rows_rejected << "\n";
    os << "per-year:\n";
    std::map<std::string, int> unmatched_total;
    for (const auto& y : years) {
        size_t unmatched = 0;
        for (const auto& [cat, count] : y.unmatched) {
            unmatched += static_cast<size_t>(count);
            unmatched_total[cat] += count;
        }
        os << "  " << y.year << ": records=" << y.records
           << " singletons_excluded=" << y.singletons_excluded
           << " ungeocoded_cities=" << y.ungeocoded
           << " uncategorized_records=" << y.uncategorized
           << " unmatched_category_hits=" << unmatched << "\n";
    }
    os << "unmatched categories:\n";
    for (const auto& [cat, count] : unmatched_total)
        os << "  " << cat << ": " << count << "\n";
    for (const auto& w : gaz.warnings) os << "gazetteer warning: " << w << "\n";
    return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

int max_threads(const RunConfig& cfg) {
    int n = cfg.threads > 0 ? cfg.threads
                            : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("DIFFUSION_SCOPE_THREADS")) {
        if (auto cap = util::parse_long(env); cap && *cap >= 1 && *cap < n)
            n = static_cast<int>(*cap);
    }
    return n;
}

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
    if (config.inputs.empty()) {
        log << "error: no input files\n";
        return kExitInputError;
    }
    for (const auto& path : config.inputs) {
        if (!fs::exists(path)) {
            log << "error: input not found: " << path.string() << "\n";
            return kExitInputError;
        }
    }
    if (!fs::exists(config.gazetteer)) {
        log << "error: gazetteer not found: " << config.gazetteer.string() << "\n";
        return kExitInputError;
    }
    auto issues = basemap::validate_basemap(config.basemap_dir);
    if (!issues.empty()) {
        for (const auto& issue : issues) log << "basemap: " << issue << "\n";
        return kExitBasemapError;
    }
    if (config.year_from > config.year_to) {
        log << "error: empty year range\n";
        return kExitInputError;
    }

    basemap::Basemap bmap;
    ingest::Gazetteer gaz;
    ingest::ParseResult parsed;
    try {
        bmap = basemap::load_basemap(config.basemap_dir);
        {
            std::ifstream in(config.gazetteer);
            gaz = ingest::load_gazetteer(in);
        }
        for (const auto& path : config.inputs) {
            std::ifstream in(path, std::ios::binary);
            auto part = ingest::parse_records(in);
            parsed.record_blocks += part.record_blocks;
            parsed.dropped_missing_year += part.dropped_missing_year;
            parsed.addresses_total += part.addresses_total;
            parsed.addresses_unresolved += part.addresses_unresolved;
            parsed.records.insert(parsed.records.end(),
                                  std::make_move_iterator(part.records.begin()),
                                  std::make_move_iterator(part.records.end()));
        }
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    auto by_year = net::slice_by_year(parsed.records);
    size_t used = 0, out_of_range = 0;
    for (const auto& [year, recs] : by_year) {
        if (year >= config.year_from && year <= config.year_to) used += recs.size();
        else out_of_range += recs.size();
    }

    diversity::DistanceMatrix cognitive =
        diversity::cognitive_distances(bmap.labels, bmap.cosine);

    std::vector<int> years;
    for (int y = config.year_from; y <= config.year_to; ++y) years.push_back(y);
    std::vector<YearResult> results(years.size());
    static const std::vector<PublicationRecord> kNoRecords;

    int workers = std::min<int>(max_threads(config), static_cast<int>(years.size()));
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < years.size(); i = next.fetch_add(1)) {
            auto it = by_year.find(years[i]);
            const auto& recs = it == by_year.end() ? kNoRecords : it->second;
            results[i] = process_year(years[i], recs, gaz, bmap, cognitive, config);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    try {
        fs::create_directories(config.out_dir);
        write_file(config.out_dir / "indicators.csv", indicators_csv(results));
        for (const auto& y : results) {
            if (!y.geojson.empty())
                write_file(config.out_dir / "geo" / (std::to_string(y.year) + ".geojson"),
                           y.geojson);
            if (!y.kml.empty())
                write_file(config.out_dir / "geo" / (std::to_string(y.year) + ".kml"), y.kml);
            write_file(config.out_dir / "sci" / (std::to_string(y.year) + ".csv"), y.sci_csv);
        }
        write_file(config.out_dir / "manifest.json", manifest_json(results, config));
        write_file(config.out_dir / "report.txt",
                   report_text(parsed, used, out_of_range, results, gaz));
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace diffscope::pipeline
