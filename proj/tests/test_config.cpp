#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "nung/run_config.hpp"

using namespace nung;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& body) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << body;
    return p;
}

}  // namespace

TEST_CASE("config parsing") {
    const fs::path p = write_temp("nung_cfg_parse.cfg",
                                  "# comment\n"
                                  "\n"
                                  "mass = 45.0\n"
                                  "  radius=0.1  \n"
                                  "label = lead ball\n");
    const RunConfig cfg = RunConfig::from_file(p);
    CHECK(cfg.number("mass", 0.0) == 45.0);
    CHECK(cfg.number("radius", 0.0) == 0.1);
    CHECK(cfg.text("label", "") == "lead ball");
    CHECK(cfg.number("missing", 7.5) == 7.5);
    CHECK_FALSE(cfg.has("missing"));
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(RunConfig::from_file("/nonexistent/nung.cfg"), std::invalid_argument);

    const fs::path bad_line = write_temp("nung_cfg_badline.cfg", "just words\n");
    CHECK_THROWS_AS(RunConfig::from_file(bad_line), std::invalid_argument);

    const fs::path bad_num = write_temp("nung_cfg_badnum.cfg", "mass = heavy\n");
    const RunConfig cfg = RunConfig::from_file(bad_num);
    CHECK_THROWS_AS(cfg.number("mass", 1.0), std::invalid_argument);
    CHECK_THROWS_AS(cfg.integer("mass", 1), std::invalid_argument);
}

TEST_CASE("overrides beat file values") {
    const fs::path p = write_temp("nung_cfg_override.cfg", "seed = 1\nmass = 45\n");
    RunConfig cfg = RunConfig::from_file(p);
    cfg.set("seed", "99");
    CHECK(cfg.integer("seed", 0) == 99);
    CHECK(cfg.number("mass", 0.0) == 45.0);
}

TEST_CASE("resolved echo round-trips") {
    const fs::path p = write_temp("nung_cfg_echo.cfg", "mass = 45\n");
    RunConfig cfg = RunConfig::from_file(p);
    cfg.set("seed", "7");
    // consume a mix of file values, overrides and defaults
    const double mass = cfg.number("mass", 0.0);
    const std::int64_t seed = cfg.integer("seed", 0);
    const double dx = cfg.number("dx", 0.3333333333333333);
    const std::string fmt = cfg.text("format", "both");

    const fs::path echo = fs::temp_directory_path() / "nung_cfg_echo_out.cfg";
    cfg.write_resolved(echo);

    const RunConfig replay = RunConfig::from_file(echo);
    CHECK(replay.number("mass", -1.0) == mass);
    CHECK(replay.integer("seed", -1) == seed);
    CHECK(replay.number("dx", -1.0) == dx);  // default captured exactly
    CHECK(replay.text("format", "") == fmt);
}

TEST_CASE("17-digit formatting round-trips doubles exactly") {
    for (double v : {3.141592653589793, 1.0 / 3.0, 6.67430e-11, 1.054571817e-34, -7.369235491811e27,
                     5.0, 0.1}) {
        const std::string s = RunConfig::format_number(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}
