#include <doctest.h>

#include <stdexcept>

#include "nung/channel.hpp"

using namespace nung;

namespace {

DetectorReport counts_only(std::int64_t on_axis, std::int64_t plus, std::int64_t minus,
                           std::int64_t absorbed = 0) {
    DetectorReport r;
    r.n_on_axis = on_axis;
    r.n_deflected_plus = plus;
    r.n_deflected_minus = minus;
    r.n_absorbed = absorbed;
    r.n_particles = on_axis + plus + minus + absorbed;
    return r;
}

}  // namespace

TEST_CASE("slc_mutual_information") {
    SUBCASE("perfectly distinguishable arms carry one bit") {
        const DetectorReport all_on = counts_only(10000, 0, 0);
        const DetectorReport all_off = counts_only(0, 10000, 0);
        CHECK(slc_mutual_information(all_on, all_off) == 1.0);
    }

    SUBCASE("identical reports carry nothing") {
        const DetectorReport r = counts_only(40, 30, 30);
        CHECK(slc_mutual_information(r, r) == 0.0);
    }

    SUBCASE("decohered arms: both fully deflected, estimate stays tiny") {
        const DetectorReport a = counts_only(0, 5030, 4970);
        const DetectorReport b = counts_only(0, 4913, 5087);
        CHECK(slc_mutual_information(a, b) <= 1e-3);
    }

    SUBCASE("small on-axis fluctuations stay within the plug-in bias scale") {
        const DetectorReport a = counts_only(3, 5000, 4997);
        const DetectorReport b = counts_only(5, 5000, 4995);
        const double bits = slc_mutual_information(a, b);
        CHECK(bits >= 0.0);
        CHECK(bits <= 1e-3);
    }

    SUBCASE("symmetric in the sender labels") {
        const DetectorReport a = counts_only(70, 20, 10);
        const DetectorReport b = counts_only(10, 60, 30);
        CHECK(slc_mutual_information(a, b) == slc_mutual_information(b, a));
    }

    SUBCASE("bounded by one bit") {
        const DetectorReport a = counts_only(99, 1, 0);
        const DetectorReport b = counts_only(2, 98, 0);
        const double bits = slc_mutual_information(a, b);
        CHECK(bits > 0.0);
        CHECK(bits <= 1.0);
    }

    SUBCASE("empty or crossing-free reports rejected") {
        const DetectorReport empty;
        const DetectorReport ok = counts_only(5, 5, 0);
        CHECK_THROWS_AS(slc_mutual_information(empty, ok), std::invalid_argument);
        CHECK_THROWS_AS(slc_mutual_information(ok, empty), std::invalid_argument);
        const DetectorReport swallowed = counts_only(0, 0, 0, 10);
        CHECK_THROWS_AS(slc_mutual_information(ok, swallowed), std::invalid_argument);
    }
}
