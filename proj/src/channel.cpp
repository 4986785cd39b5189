#include "nung/channel.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace nung {

namespace {

// P(on-axis) among particles that reached the detector plane.
std::array<double, 2> conditional_on_axis(const DetectorReport& r) {
    const std::int64_t usable = r.n_crossed();
    if (usable <= 0) {
        throw std::invalid_argument("slc_mutual_information: report has no detector crossings");
    }
    const double p1 = static_cast<double>(r.n_on_axis) / static_cast<double>(usable);
    return {1.0 - p1, p1};
}

}  // namespace

double slc_mutual_information(const DetectorReport& report_when_sender_0,
                              const DetectorReport& report_when_sender_1) {
    if (report_when_sender_0.n_particles <= 0 || report_when_sender_1.n_particles <= 0) {
        throw std::invalid_argument("slc_mutual_information: empty report");
    }
    const std::array<std::array<double, 2>, 2> p_y_given_s{
        conditional_on_axis(report_when_sender_0), conditional_on_axis(report_when_sender_1)};

    std::array<double, 2> p_y{};
    for (int y = 0; y < 2; ++y) {
        p_y[y] = 0.5 * (p_y_given_s[0][y] + p_y_given_s[1][y]);
    }

    double bits = 0.0;
    for (int s = 0; s < 2; ++s) {
        for (int y = 0; y < 2; ++y) {
            const double p = p_y_given_s[s][y];
            if (p > 0.0) {
                bits += 0.5 * p * std::log2(p / p_y[y]);
            }
        }
    }
    return bits;
}

}  // namespace nung
