#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nung/json_io.hpp"
#include "oracles.hpp"

using namespace nung;
using nlohmann::json;

TEST_CASE("density matrices round-trip through JSON") {
    SUBCASE("4x4 metastate") {
        const MetaDensityMatrix rho = oracle::random_meta_density(3);
        const json j = to_json(rho);
        CHECK(j["rows"] == 4);
        CHECK(j["cols"] == 4);
        CHECK(j["entries"].size() == 16);
        // row-major: entry (1,2) sits at flat index 6
        CHECK(j["entries"][6][0].get<double>() == rho(1, 2).real());
        CHECK(j["entries"][6][1].get<double>() == rho(1, 2).imag());

        const MetaDensityMatrix back = meta_density_from_json(j);
        for (int i = 0; i < 16; ++i) {
            CHECK(back.m[i] == rho.m[i]);
        }
    }

    SUBCASE("2x2 physical state") {
        const PhysicalDensityMatrix rp =
            partial_trace_hidden(oracle::random_meta_density(9));
        const PhysicalDensityMatrix back = physical_density_from_json(to_json(rp));
        for (int i = 0; i < 4; ++i) {
            CHECK(back.m[i] == rp.m[i]);
        }
    }

    SUBCASE("dimension mismatch rejected") {
        json j = to_json(partial_trace_hidden(oracle::random_meta_density(1)));
        CHECK_THROWS_AS(meta_density_from_json(j), std::invalid_argument);
        j["entries"] = json::array();
        CHECK_THROWS_AS(physical_density_from_json(j), std::invalid_argument);
    }
}

TEST_CASE("detector report serialization") {
    DetectorReport rep;
    rep.n_particles = 3;
    rep.n_on_axis = 1;
    rep.n_deflected_plus = 1;
    rep.n_absorbed = 1;
    rep.mean_x = 0.125;
    rep.records = {
        {0, false, BallSite::Plus, ExitStatus::OnAxis, 0.0, 0.0, 4.0},
        {1, true, BallSite::Minus, ExitStatus::DeflectedPlus, 0.25, 0.0, 4.5},
        {2, true, BallSite::Plus, ExitStatus::Absorbed, std::nan(""), std::nan(""),
         std::nan("")},
    };

    const json j = to_json(rep);
    CHECK(j["n_particles"] == 3);
    CHECK(j["n_on_axis"] == 1);
    CHECK(j["n_absorbed"] == 1);
    CHECK(j["mean_x"].get<double>() == 0.125);
    CHECK(j["on_axis_fraction"].get<double>() == doctest::Approx(1.0 / 3.0));

    std::ostringstream csv;
    write_particles_csv(csv, rep);
    CHECK(csv.str() ==
          "index,site,exit_x,crossing_time\n"
          "0,none,0,4\n"
          "1,minus,0.25,4.5\n"
          "2,plus,nan,nan\n");
}
