#include <doctest.h>

#include <sstream>

#include "diffscope/pipeline.hpp"
#include "diffscope/util.hpp"
#include "support/temp_dir.hpp"

using namespace diffscope;
using namespace diffscope::pipeline;
using testutil::TempDir;
using testutil::read_file;

namespace {

// Three cities, two years. 2001 has a two-city collaboration pattern,
// 2002 has a single record (all its cities fall to singleton exclusion).
const char* kCorpus =
    "UT 1\nPY 2001\nSO J ALPHA\n"
    "C1 Univ A, Aarhus, Denmark\n"
    "C1 Univ B, Bergen, Norway\n"
    "WC Alpha\nER\n"
    "UT 2\nPY 2001\nSO J ALPHA\n"
    "C1 Univ A, Aarhus, Denmark\n"
    "C1 Univ B, Bergen, Norway\n"
    "WC Alpha; Beta\nER\n"
    "UT 3\nPY 2001\n"
    "C1 Univ C, Cadiz, Spain\n"
    "C1 Univ A, Aarhus, Denmark\n"
    "WC Zeta\nER\n"
    "UT 4\nPY 2001\n"
    "C1 Univ C, Cadiz, Spain\n"
    "SO J MIXED\nER\n"
    "UT 5\nPY 2002\n"
    "C1 Univ A, Aarhus, Denmark\n"
    "WC Beta\nER\n"
    "UT 6\nPY 17xx\nER\n"
    "EF\n";

const char* kGazetteer =
    "city,country,lat,lon\n"
    "AARHUS,DENMARK,56.16,10.20\n"
    "BERGEN,NORWAY,60.39,5.32\n"
    "CADIZ,SPAIN,36.53,-6.29\n";

RunConfig make_config(const TempDir& dir) {
    RunConfig cfg;
    cfg.inputs = {dir.path() / "corpus.txt"};
    cfg.gazetteer = dir.path() / "gazetteer.csv";
    cfg.basemap_dir = dir.path() / "basemap";
    cfg.year_from = 2001;
    cfg.year_to = 2002;
    cfg.er_runs = 5;
    cfg.seed = 42;
    cfg.out_dir = dir.path() / "out";
    cfg.threads = 1;
    return cfg;
}

TempDir& prepared() {
    static TempDir dir;
    static bool done = false;
    if (!done) {
        dir.write("corpus.txt", kCorpus);
        dir.write("gazetteer.csv", kGazetteer);
        testutil::write_toy_basemap(dir);
        done = true;
    }
    return dir;
}

std::vector<std::string> csv_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(line);
    return rows;
}

}  // namespace

TEST_CASE("pipeline writes the full artifact tree") {
    auto& dir = prepared();
    std::ostringstream log;
    REQUIRE(run(make_config(dir), log) == kExitOk);

    auto out = dir.path() / "out";
    for (const char* rel : {"indicators.csv", "manifest.json", "report.txt",
                            "geo/2001.geojson", "geo/2002.geojson", "sci/2001.csv",
                            "sci/2002.csv"})
        CHECK_MESSAGE(std::filesystem::exists(out / rel), rel);

    auto rows = csv_rows(read_file(out / "indicators.csv"));
    REQUIRE(rows.size() == 3);  // header + 2 years
    CHECK(rows[0].starts_with("year,n,m,density,z,cc,d_mean"));
    CHECK(rows[1].starts_with("2001,3,"));

    // 2002: one record, every city a singleton -> empty network, empty cells
    auto cells = diffscope::util::split(rows[2], ',');
    CHECK(cells[0] == "2002");
    CHECK(cells[1] == "0");
    CHECK(cells[3].empty());  // density
    CHECK(cells[5].empty());  // cc
}

TEST_CASE("2001 network values are as hand-counted") {
    auto& dir = prepared();
    auto rows = csv_rows(read_file(dir.path() / "out" / "indicators.csv"));
    auto cells = diffscope::util::split(rows[1], ',');
    // AARHUS appears on records 1,2,3; BERGEN on 1,2; CADIZ on 3,4
    // edges: AARHUS-BERGEN weight 2, AARHUS-CADIZ weight 1
    CHECK(cells[1] == "3");                   // n
    CHECK(cells[2] == "2");                   // m
    CHECK(cells[4] == "1.3333333333333333");  // z = 4/3
    CHECK(cells[7] == "1");                   // one component
}

TEST_CASE("report reconciles record tallies") {
    auto& dir = prepared();
    std::string report = read_file(dir.path() / "out" / "report.txt");
    CHECK(report.find("record blocks: 6") != std::string::npos);
    CHECK(report.find("records parsed: 5") != std::string::npos);
    CHECK(report.find("records dropped (missing or invalid PY): 1") != std::string::npos);
    CHECK(report.find("records used: 5") != std::string::npos);
    CHECK(report.find("Zeta: 1") != std::string::npos);  // unmatched category
}

TEST_CASE("identical config reruns are byte-identical") {
    auto& dir = prepared();
    auto cfg = make_config(dir);
    cfg.out_dir = dir.path() / "out_b";
    std::ostringstream log;
    REQUIRE(run(cfg, log) == kExitOk);
    for (const char* rel : {"indicators.csv", "manifest.json", "report.txt",
                            "geo/2001.geojson", "sci/2001.csv"})
        CHECK(read_file(dir.path() / "out" / rel) == read_file(dir.path() / "out_b" / rel));
}

TEST_CASE("er_runs = 0 leaves the simulated columns empty") {
    auto& dir = prepared();
    auto cfg = make_config(dir);
    cfg.er_runs = 0;
    cfg.out_dir = dir.path() / "out_nosim";
    std::ostringstream log;
    REQUIRE(run(cfg, log) == kExitOk);
    auto rows = csv_rows(read_file(cfg.out_dir / "indicators.csv"));
    auto cells = diffscope::util::split(rows[1], ',');
    CHECK(cells[10].empty());  // cc_rg_sim
    CHECK(cells[11].empty());  // d_rg_sim
    CHECK(cells[13].empty());  // w_sim
    CHECK_FALSE(cells[8].empty());  // analytic baseline still present
}

TEST_CASE("missing input exits 2, broken basemap exits 3") {
    auto& dir = prepared();
    std::ostringstream log;

    auto cfg = make_config(dir);
    cfg.inputs = {dir.path() / "no-such-file.txt"};
    CHECK(run(cfg, log) == kExitInputError);

    TempDir broken;
    broken.write("corpus.txt", kCorpus);
    broken.write("gazetteer.csv", kGazetteer);
    testutil::write_toy_basemap(broken);
    broken.write("basemap/layout.csv", "label,x,y\nAlpha,0,0\n");
    auto cfg2 = make_config(broken);
    CHECK(run(cfg2, log) == kExitBasemapError);
}

TEST_CASE("kml output follows the format list") {
    auto& dir = prepared();
    auto cfg = make_config(dir);
    cfg.out_dir = dir.path() / "out_kml";
    cfg.geo_formats = {overlays::GeoFormat::geojson, overlays::GeoFormat::kml};
    std::ostringstream log;
    REQUIRE(run(cfg, log) == kExitOk);
    CHECK(std::filesystem::exists(cfg.out_dir / "geo/2001.kml"));
    std::string manifest = read_file(cfg.out_dir / "manifest.json");
    CHECK(manifest.find("geo/2001.kml") != std::string::npos);
}
